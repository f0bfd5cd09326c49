#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "sbmetric/point.hpp"

namespace sbm {

/// One grid axis: lo, lo+step, ..., up to hi (inclusive within rounding).
struct GridRange {
    double lo = -10.0;
    double hi = 10.0;
    double step = 1.0;
};

/// Deterministic sampling plan shared by the axiom checks and the
/// contraction estimators. Identical configs (same seed included) always
/// produce identical sample streams, so reports are byte-reproducible.
struct SamplerConfig {
    std::uint64_t seed = 0;

    /// Per-dimension ranges. A single entry is broadcast to every
    /// coordinate of a higher-dimensional carrier. Ignored for finite
    /// carriers, whose grid is the full element list.
    std::vector<GridRange> grid{GridRange{}};

    /// Random tuples appended after the grid pass.
    std::size_t random_count = 10000;

    /// Tolerance added to the right side of every inequality clause.
    double slack = 1e-9;

    /// Counterexamples kept per clause (largest violation first).
    std::size_t max_counterexamples = 10;

    /// Cap on exhaustive grid-tuple enumeration. Beyond it the grid pass
    /// degrades to a seeded uniform draw of this many tuples and the
    /// report marks the clause as non-exhaustive.
    std::size_t max_grid_tuples = 4000000;
};

/// Enumerates point tuples over a carrier: every grid tuple (or a seeded
/// subsample when the Cartesian power exceeds the budget), then
/// cfg.random_count random tuples drawn coordinate-wise from the grid
/// ranges. The random stream uses an explicit 53-bit mapping from
/// mt19937_64 output, so results do not depend on the standard library's
/// distribution implementations.
class TupleStream {
public:
    TupleStream(const Carrier& carrier, const SamplerConfig& cfg);

    [[nodiscard]] const std::vector<Point>& grid() const noexcept { return grid_; }
    [[nodiscard]] const SamplerConfig& config() const noexcept { return cfg_; }

    [[nodiscard]] Point random_point(std::mt19937_64& rng) const;

    /// Visit all tuples of the given arity. Returns true when the grid
    /// pass was exhaustive. Visitor signature: void(std::span<const Point>).
    template <typename Fn>
    bool visit(std::size_t arity, Fn&& fn) const {
        std::mt19937_64 rng(cfg_.seed);
        const std::size_t pool = grid_.size();
        bool exhaustive = true;

        double total = 1.0;
        for (std::size_t k = 0; k < arity; ++k) total *= static_cast<double>(pool);

        std::vector<Point> tuple(arity);
        if (pool > 0 && arity > 0 && total <= static_cast<double>(cfg_.max_grid_tuples)) {
            std::vector<std::size_t> idx(arity, 0);
            bool done = false;
            while (!done) {
                for (std::size_t k = 0; k < arity; ++k) tuple[k] = grid_[idx[k]];
                fn(std::span<const Point>(tuple.data(), arity));
                std::size_t k = arity;
                for (;;) {
                    if (k == 0) {
                        done = true;
                        break;
                    }
                    --k;
                    if (++idx[k] < pool) break;
                    idx[k] = 0;
                }
            }
        } else if (pool > 0 && arity > 0) {
            exhaustive = false;
            for (std::size_t i = 0; i < cfg_.max_grid_tuples; ++i) {
                for (std::size_t k = 0; k < arity; ++k)
                    tuple[k] = grid_[static_cast<std::size_t>(rng() % pool)];
                fn(std::span<const Point>(tuple.data(), arity));
            }
        }

        for (std::size_t i = 0; i < cfg_.random_count; ++i) {
            for (std::size_t k = 0; k < arity; ++k) tuple[k] = random_point(rng);
            fn(std::span<const Point>(tuple.data(), arity));
        }
        return exhaustive;
    }

private:
    [[nodiscard]] double uniform(std::mt19937_64& rng, double lo, double hi) const;

    Carrier carrier_;
    SamplerConfig cfg_;
    std::vector<Point> grid_;
};

}  // namespace sbm
