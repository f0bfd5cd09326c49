#include "sbmetric/sampler.hpp"

#include <cmath>
#include <stdexcept>

namespace sbm {

namespace {

std::size_t axis_count(const GridRange& r) {
    if (!(r.step > 0.0)) throw std::invalid_argument("grid step must be > 0");
    if (r.hi < r.lo) throw std::invalid_argument("grid range must have hi >= lo");
    // Tiny slack so that integer spans like [-10,10]/1 land on 21 values.
    return static_cast<std::size_t>(std::floor((r.hi - r.lo) / r.step + 1e-9)) + 1;
}

}  // namespace

TupleStream::TupleStream(const Carrier& carrier, const SamplerConfig& cfg)
    : carrier_(carrier), cfg_(cfg) {
    if (carrier_.is_finite_set()) {
        grid_ = carrier_.elements();
        return;
    }

    const std::size_t dim = carrier_.dimension();
    if (cfg_.grid.empty()) throw std::invalid_argument("sampler grid must have at least one range");
    if (cfg_.grid.size() != 1 && cfg_.grid.size() != dim)
        throw std::invalid_argument("sampler grid has " + std::to_string(cfg_.grid.size()) +
                                    " ranges for a dimension-" + std::to_string(dim) + " carrier");

    std::vector<GridRange> ranges(dim);
    for (std::size_t i = 0; i < dim; ++i)
        ranges[i] = cfg_.grid.size() == 1 ? cfg_.grid.front() : cfg_.grid[i];

    std::vector<std::size_t> counts(dim);
    double total = 1.0;
    for (std::size_t i = 0; i < dim; ++i) {
        counts[i] = axis_count(ranges[i]);
        total *= static_cast<double>(counts[i]);
    }

    // The grid pool itself is capped; tuple enumeration has its own budget.
    const double pool_cap = 100000.0;
    if (total <= pool_cap) {
        std::vector<std::size_t> idx(dim, 0);
        std::vector<double> coords(dim);
        bool done = false;
        while (!done) {
            for (std::size_t i = 0; i < dim; ++i)
                coords[i] = ranges[i].lo + static_cast<double>(idx[i]) * ranges[i].step;
            grid_.push_back(Point::real(coords));
            std::size_t k = dim;
            for (;;) {
                if (k == 0) {
                    done = true;
                    break;
                }
                --k;
                if (++idx[k] < counts[k]) break;
                idx[k] = 0;
            }
        }
    } else {
        std::mt19937_64 rng(cfg_.seed ^ 0x9e3779b97f4a7c15ull);
        std::vector<double> coords(dim);
        for (std::size_t p = 0; p < static_cast<std::size_t>(pool_cap); ++p) {
            for (std::size_t i = 0; i < dim; ++i) {
                auto steps = static_cast<std::size_t>(rng() % counts[i]);
                coords[i] = ranges[i].lo + static_cast<double>(steps) * ranges[i].step;
            }
            grid_.push_back(Point::real(coords));
        }
    }
}

double TupleStream::uniform(std::mt19937_64& rng, double lo, double hi) const {
    // 53-bit mantissa mapping; explicit so streams are identical across
    // standard libraries.
    double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
    return lo + u * (hi - lo);
}

Point TupleStream::random_point(std::mt19937_64& rng) const {
    if (carrier_.is_finite_set()) {
        const auto& elems = carrier_.elements();
        return elems[static_cast<std::size_t>(rng() % elems.size())];
    }
    const std::size_t dim = carrier_.dimension();
    std::vector<double> coords(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        const GridRange& r = cfg_.grid.size() == 1 ? cfg_.grid.front() : cfg_.grid[i];
        coords[i] = uniform(rng, r.lo, r.hi);
    }
    return Point::real(std::move(coords));
}

}  // namespace sbm
