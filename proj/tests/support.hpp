#pragma once

// Shared helpers for the test suites: a deterministic uniform generator
// (explicit 53-bit mapping, independent of libstdc++ distributions) and a
// couple of small conveniences.

#include <cstdint>
#include <random>
#include <vector>

#include "sbmetric/point.hpp"

namespace testsupport {

inline double uniform(std::mt19937_64& rng, double lo, double hi) {
    double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
    return lo + u * (hi - lo);
}

inline sbm::Point random_scalar(std::mt19937_64& rng, double lo = -10.0, double hi = 10.0) {
    return sbm::Point::scalar(uniform(rng, lo, hi));
}

inline sbm::Point random_vector(std::mt19937_64& rng, std::size_t dim, double lo = -10.0,
                                double hi = 10.0) {
    std::vector<double> c(dim);
    for (auto& v : c) v = uniform(rng, lo, hi);
    return sbm::Point::real(std::move(c));
}

}  // namespace testsupport
