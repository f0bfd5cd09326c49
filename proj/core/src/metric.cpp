#include "sbmetric/metric.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace sbm {

namespace {

void require_member(const Carrier& carrier, const Point& p, const char* metric_name) {
    if (!carrier.contains(p))
        throw std::invalid_argument(std::string(metric_name) +
                                    ": point outside carrier (dimension or kind mismatch)");
}

double checked_value(double v, const char* metric_name) {
    // +inf is allowed: huge inputs may overflow a legitimate closed form.
    if (std::isnan(v) || v < 0.0)
        throw std::domain_error(std::string(metric_name) +
                                ": distance functional returned a negative or NaN value");
    return v;
}

}  // namespace

SbMetric::SbMetric(std::string name, Carrier carrier, double b, bool symmetric, Distance distance)
    : name_(std::move(name)),
      carrier_(std::move(carrier)),
      b_(b),
      symmetric_(symmetric),
      distance_(std::move(distance)) {
    if (!(b_ >= 1.0)) throw std::invalid_argument(name_ + ": coefficient b must be >= 1");
    if (!distance_) throw std::invalid_argument(name_ + ": empty distance functional");
}

double SbMetric::operator()(const Point& x, const Point& y, const Point& z) const {
    require_member(carrier_, x, name_.c_str());
    require_member(carrier_, y, name_.c_str());
    require_member(carrier_, z, name_.c_str());
    return checked_value(distance_(x, y, z), name_.c_str());
}

BMetric::BMetric(std::string name, Carrier carrier, double b, Distance distance)
    : name_(std::move(name)), carrier_(std::move(carrier)), b_(b), distance_(std::move(distance)) {
    if (!(b_ >= 1.0)) throw std::invalid_argument(name_ + ": coefficient b must be >= 1");
    if (!distance_) throw std::invalid_argument(name_ + ": empty distance functional");
}

double BMetric::operator()(const Point& x, const Point& y) const {
    require_member(carrier_, x, name_.c_str());
    require_member(carrier_, y, name_.c_str());
    return checked_value(distance_(x, y), name_.c_str());
}

SbMetric induce_s_metric(const BMetric& d) {
    if (d.b() != 1.0)
        throw std::invalid_argument("induce_s_metric needs an ordinary metric (b = 1); " + d.name() +
                                    " has b = " + std::to_string(d.b()));
    BMetric base = d;
    return SbMetric("s_d(" + d.name() + ")", d.carrier(), 1.0, true,
                    [base](const Point& x, const Point& y, const Point& z) {
                        return base(x, z) + base(y, z);
                    });
}

SbMetric induce_sb_metric(const BMetric& d) {
    BMetric base = d;
    return SbMetric("sb_d(" + d.name() + ")", d.carrier(), d.b(), true,
                    [base](const Point& x, const Point& y, const Point& z) {
                        return base(x, z) + base(y, z);
                    });
}

BMetric induce_b_metric(const SbMetric& s, bool require_symmetric) {
    if (require_symmetric && !s.symmetric())
        throw std::invalid_argument("induce_b_metric: " + s.name() +
                                    " is not claimed symmetric; the 3b/2 coefficient needs symmetry");
    SbMetric base = s;
    return BMetric("d_s(" + s.name() + ")", s.carrier(), 1.5 * s.b(),
                   [base](const Point& x, const Point& y) { return base(x, x, y); });
}

}  // namespace sbm
