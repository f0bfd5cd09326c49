#pragma once

#include <vector>

#include "sbmetric/metric.hpp"

namespace sbm {

/// An explicit finite subset of a carrier space. Finite sets keep the
/// inf/sup in set distances exact.
class FinitePointSet {
public:
    FinitePointSet() = default;
    explicit FinitePointSet(std::vector<Point> elements);

    [[nodiscard]] const std::vector<Point>& elements() const noexcept { return elements_; }
    [[nodiscard]] bool empty() const noexcept { return elements_.empty(); }
    [[nodiscard]] std::size_t size() const noexcept { return elements_.size(); }

private:
    std::vector<Point> elements_;
};

/// y is in the open ball of radius r about center: S(y,y,center) < r.
/// Throws std::invalid_argument when r <= 0.
bool in_open_ball(const SbMetric& metric, const Point& center, double r, const Point& y);

/// Closed-ball variant, S(y,y,center) <= r + tol. The tolerance absorbs
/// roundoff at the boundary (e.g. radii hit exactly at irrational points).
bool in_closed_ball(const SbMetric& metric, const Point& center, double r, const Point& y,
                    double tol = 1e-12);

/// min over y in A of S(x,x,y). Throws std::domain_error on an empty set.
double point_set_distance(const SbMetric& metric, const Point& x, const FinitePointSet& a);

/// min over x in A, y in B of S(x,x,y). The orientation matters for
/// non-symmetric metrics and is kept as written, never symmetrized.
double set_set_distance(const SbMetric& metric, const FinitePointSet& a, const FinitePointSet& b);

/// max over ordered pairs (x,y) in A x A of S(x,x,y).
double diameter(const SbMetric& metric, const FinitePointSet& a);

/// diameter(A) < r. Throws std::invalid_argument when r <= 0.
bool is_bounded(const SbMetric& metric, const FinitePointSet& a, double r);

}  // namespace sbm
