#pragma once

#include <functional>
#include <string>

#include "sbmetric/point.hpp"

namespace sbm {

/// A ternary distance functional S(x,y,z) >= 0 together with its claimed
/// coefficient b >= 1 and a symmetry claim S(x,x,y) = S(y,y,x).
///
/// The claims are exactly that: claims. Nothing here verifies them;
/// sampling-based verification lives in axiom.hpp. Evaluation enforces
/// only what is checkable per call: arguments belong to the carrier and
/// the functional returns a finite nonnegative value.
class SbMetric {
public:
    using Distance = std::function<double(const Point&, const Point&, const Point&)>;

    /// Throws std::invalid_argument when b < 1 or the functional is empty.
    SbMetric(std::string name, Carrier carrier, double b, bool symmetric, Distance distance);

    /// Evaluate S(x,y,z). Throws std::invalid_argument on carrier mismatch
    /// and std::domain_error when the functional returns a negative or
    /// non-finite value.
    double operator()(const Point& x, const Point& y, const Point& z) const;

    [[nodiscard]] const std::string& name() const noexcept { return name_; }
    [[nodiscard]] double b() const noexcept { return b_; }
    [[nodiscard]] bool symmetric() const noexcept { return symmetric_; }
    [[nodiscard]] const Carrier& carrier() const noexcept { return carrier_; }

private:
    std::string name_;
    Carrier carrier_;
    double b_ = 1.0;
    bool symmetric_ = true;
    Distance distance_;
};

/// A binary distance d(x,y) >= 0 with relaxed triangle coefficient b >= 1
/// (b = 1 is an ordinary metric).
class BMetric {
public:
    using Distance = std::function<double(const Point&, const Point&)>;

    BMetric(std::string name, Carrier carrier, double b, Distance distance);

    double operator()(const Point& x, const Point& y) const;

    [[nodiscard]] const std::string& name() const noexcept { return name_; }
    [[nodiscard]] double b() const noexcept { return b_; }
    [[nodiscard]] const Carrier& carrier() const noexcept { return carrier_; }

private:
    std::string name_;
    Carrier carrier_;
    double b_ = 1.0;
    Distance distance_;
};

/// S_d(x,y,z) = d(x,z) + d(y,z) for an ordinary metric d (b = 1 required).
/// The result is a symmetric ternary metric with b = 1.
SbMetric induce_s_metric(const BMetric& d);

/// Same construction for a general b-metric: the ternary metric inherits
/// the coefficient b of d and is symmetric.
SbMetric induce_sb_metric(const BMetric& d);

/// d(x,y) = S(x,x,y). For a symmetric input with coefficient b the result
/// is a b-metric with coefficient 3b/2. With require_symmetric (default)
/// a non-symmetric input is rejected; pass false to build it anyway at the
/// caller's risk.
BMetric induce_b_metric(const SbMetric& s, bool require_symmetric = true);

}  // namespace sbm
