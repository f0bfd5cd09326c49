#include "sbmetric/topology.hpp"

#include <algorithm>
#include <stdexcept>

namespace sbm {

FinitePointSet::FinitePointSet(std::vector<Point> elements) : elements_(std::move(elements)) {
    if (elements_.empty()) return;
    const bool label = elements_.front().is_label();
    const std::size_t dim = elements_.front().dimension();
    for (const auto& e : elements_)
        if (e.is_label() != label || e.dimension() != dim)
            throw std::invalid_argument("point set mixes carrier kinds or dimensions");
}

bool in_open_ball(const SbMetric& metric, const Point& center, double r, const Point& y) {
    if (!(r > 0.0)) throw std::invalid_argument("ball radius must be > 0");
    return metric(y, y, center) < r;
}

bool in_closed_ball(const SbMetric& metric, const Point& center, double r, const Point& y,
                    double tol) {
    if (!(r > 0.0)) throw std::invalid_argument("ball radius must be > 0");
    return metric(y, y, center) <= r + tol;
}

double point_set_distance(const SbMetric& metric, const Point& x, const FinitePointSet& a) {
    if (a.empty()) throw std::domain_error("point-set distance over an empty set");
    double best = metric(x, x, a.elements().front());
    for (std::size_t i = 1; i < a.size(); ++i)
        best = std::min(best, metric(x, x, a.elements()[i]));
    return best;
}

double set_set_distance(const SbMetric& metric, const FinitePointSet& a, const FinitePointSet& b) {
    if (a.empty() || b.empty()) throw std::domain_error("set-set distance over an empty set");
    double best = metric(a.elements().front(), a.elements().front(), b.elements().front());
    for (const auto& x : a.elements())
        for (const auto& y : b.elements()) best = std::min(best, metric(x, x, y));
    return best;
}

double diameter(const SbMetric& metric, const FinitePointSet& a) {
    if (a.empty()) throw std::domain_error("diameter of an empty set");
    double worst = 0.0;
    for (const auto& x : a.elements())
        for (const auto& y : a.elements()) worst = std::max(worst, metric(x, x, y));
    return worst;
}

bool is_bounded(const SbMetric& metric, const FinitePointSet& a, double r) {
    if (!(r > 0.0)) throw std::invalid_argument("bound radius must be > 0");
    return diameter(metric, a) < r;
}

}  // namespace sbm
