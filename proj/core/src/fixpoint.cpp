#include "sbmetric/fixpoint.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "sbmetric/numeric.hpp"

namespace sbm {

SelfMap make_scale_map(double c) {
    return {"scale:" + fmt_double(c), [c](const Point& x) {
                std::vector<double> out(x.coords());
                for (double& v : out) v *= c;
                return Point::real_unchecked(std::move(out));
            }};
}

SelfMap make_affine_map(double c, double d) {
    return {"affine:" + fmt_double(c) + ":" + fmt_double(d), [c, d](const Point& x) {
                std::vector<double> out(x.coords());
                for (double& v : out) v = c * v + d;
                return Point::real_unchecked(std::move(out));
            }};
}

SelfMap make_ex3_2_map() {
    return {"ex3_2", [](const Point& x) {
                double v = x.coord(0);
                return Point::scalar(std::abs(v - 1.0) == 1.0 ? v + 50.0 : 45.0);
            }};
}

std::string cert_kind_name(CertKind k) {
    switch (k) {
        case CertKind::banach: return "BANACH";
        case CertKind::banach_symmetric: return "BANACH_SYMMETRIC";
        case CertKind::generalized: return "GENERALIZED";
        case CertKind::generalized_symmetric: return "GENERALIZED_SYMMETRIC";
        case CertKind::none: return "NONE";
    }
    return "?";
}

double ContractionCertificate::rate() const {
    switch (kind) {
        case CertKind::banach:
        case CertKind::banach_symmetric:
            return h;
        case CertKind::generalized:
        case CertKind::generalized_symmetric: {
            double den = 1.0 - 2.0 * b * b * alpha2;
            if (den <= 0.0) return std::numeric_limits<double>::infinity();
            return (alpha1 + b * alpha2) / den;
        }
        case CertKind::none:
            return std::numeric_limits<double>::quiet_NaN();
    }
    return std::numeric_limits<double>::quiet_NaN();
}

bool ContractionCertificate::tail_bound_applies() const {
    if (!valid || kind == CertKind::none) return false;
    return b * b * rate() < 1.0;
}

std::string ContractionCertificate::to_text() const {
    std::string out = "certificate kind=" + cert_kind_name(kind) + " b=" + fmt_double(b);
    if (kind == CertKind::banach || kind == CertKind::banach_symmetric)
        out += " h=" + fmt_double(h);
    if (kind == CertKind::generalized || kind == CertKind::generalized_symmetric)
        out += " alpha1=" + fmt_double(alpha1) + " alpha2=" + fmt_double(alpha2);
    out += std::string(" valid=") + (valid ? "1" : "0") + " margin=" + fmt_double(margin);
    if (kind != CertKind::none) {
        out += std::string(" tail_bound=") + (tail_bound_applies() ? "1" : "0");
        if (valid) out += " rate=" + fmt_double(rate());
    }
    return out;
}

ContractionCertificate make_certificate(CertKind kind, double b, double p1, double p2) {
    if (!(b >= 1.0)) throw std::invalid_argument("certificate needs b >= 1");
    if (!(p1 >= 0.0) || !(p2 >= 0.0))
        throw std::invalid_argument("certificate parameters must be >= 0");

    ContractionCertificate cert;
    cert.kind = kind;
    cert.b = b;
    switch (kind) {
        case CertKind::banach:
            cert.h = p1;
            cert.margin = 1.0 / (b * b) - p1;
            break;
        case CertKind::banach_symmetric:
            cert.h = p1;
            cert.margin = 1.0 / b - p1;
            break;
        case CertKind::generalized:
            cert.alpha1 = p1;
            cert.alpha2 = p2;
            cert.margin = 1.0 - (p1 + (2.0 * b * b + b) * p2);
            break;
        case CertKind::generalized_symmetric:
            cert.alpha1 = p1;
            cert.alpha2 = p2;
            cert.margin = 1.0 - (p1 + 3.0 * b * p2);
            break;
        case CertKind::none:
            return cert;
    }
    cert.valid = cert.margin > 0.0;  // thresholds are strict
    return cert;
}

ContractionCertificate certify(CertKind kind, const SbMetric& metric, double p1, double p2) {
    if ((kind == CertKind::banach_symmetric || kind == CertKind::generalized_symmetric) &&
        !metric.symmetric())
        throw std::invalid_argument(cert_kind_name(kind) + " requires a symmetric metric; " +
                                    metric.name() + " is not claimed symmetric");
    return make_certificate(kind, metric.b(), p1, p2);
}

double estimate_contraction_h(const SbMetric& metric, const SelfMap& map,
                              const SamplerConfig& cfg) {
    TupleStream stream(metric.carrier(), cfg);
    double sup = -1.0;
    stream.visit(2, [&](std::span<const Point> t) {
        double den = metric(t[0], t[0], t[1]);
        if (den <= 0.0) return;
        Point tx = map.fn(t[0]);
        Point ty = map.fn(t[1]);
        sup = std::max(sup, metric(tx, tx, ty) / den);
    });
    if (sup < 0.0)
        throw std::domain_error("estimate_contraction_h: no sampled pair with positive distance");
    return sup;
}

GeneralizedCheck check_generalized(const SbMetric& metric, const SelfMap& map, double alpha1,
                                   double alpha2, const SamplerConfig& cfg) {
    if (!(alpha1 >= 0.0) || !(alpha2 >= 0.0))
        throw std::invalid_argument("check_generalized needs alpha1, alpha2 >= 0");

    TupleStream stream(metric.carrier(), cfg);
    GeneralizedCheck res;
    res.worst_gap = -std::numeric_limits<double>::infinity();
    stream.visit(2, [&](std::span<const Point> t) {
        const Point& x = t[0];
        const Point& y = t[1];
        Point tx = map.fn(x);
        Point ty = map.fn(y);
        double lhs = metric(tx, tx, ty);
        double orbit = std::max(std::max(metric(tx, tx, x), metric(tx, tx, y)),
                                std::max(metric(ty, ty, y), metric(ty, ty, x)));
        double rhs = alpha1 * metric(x, x, y) + alpha2 * orbit;
        ++res.samples;
        if (lhs - rhs > res.worst_gap) {
            res.worst_gap = lhs - rhs;
            res.x = x;
            res.y = y;
            res.lhs = lhs;
            res.rhs = rhs;
        }
    });
    res.holds = res.worst_gap <= cfg.slack;
    return res;
}

double apriori_tail_bound(double h, double b, std::size_t n, double s0) {
    if (!(h >= 0.0)) throw std::invalid_argument("tail bound needs h >= 0");
    if (!(b >= 1.0)) throw std::invalid_argument("tail bound needs b >= 1");
    if (!(s0 >= 0.0)) throw std::invalid_argument("tail bound needs s0 >= 0");
    if (b * b * h >= 1.0) throw std::domain_error("tail bound requires b^2 h < 1");
    return 2.0 * b * std::pow(h, static_cast<double>(n)) / (1.0 - b * b * h) * s0;
}

std::string termination_name(Termination t) {
    switch (t) {
        case Termination::converged: return "CONVERGED";
        case Termination::max_iters: return "MAX_ITERS";
        case Termination::diverged_bound: return "DIVERGED_BOUND";
    }
    return "?";
}

std::string IterationTrace::to_text() const {
    std::string out = "trace metric=" + metric_name + " map=" + map_name +
                      " termination=" + termination_name(termination) +
                      " iterations=" + std::to_string(iterations) +
                      " heuristic=" + (heuristic_stop ? "1" : "0") + '\n';
    for (std::size_t i = 0; i < points.size(); ++i) {
        out += "iter=" + std::to_string(i) + " point=" + points[i].to_text();
        if (i < step_distances.size()) out += " step=" + fmt_double(step_distances[i]);
        if (i < bound_values.size()) out += " bound=" + fmt_double(bound_values[i]);
        out += '\n';
    }
    if (fixed_point) out += "fixed_point=" + fixed_point->to_text() + '\n';
    if (!warning.empty()) out += "warning=" + warning + '\n';
    return out;
}

IterationTrace picard(const SbMetric& metric, const SelfMap& map, const Point& x0,
                      const ContractionCertificate& cert, double eps, std::size_t max_iters) {
    if (!(eps > 0.0)) throw std::invalid_argument("picard needs eps > 0");
    if (max_iters < 1) throw std::invalid_argument("picard needs max_iters >= 1");
    if (!metric.carrier().contains(x0))
        throw std::invalid_argument("picard start point outside the metric's carrier");
    if (cert.kind != CertKind::none && !cert.valid)
        throw std::invalid_argument(
            "picard given an invalid certificate; pass kind none for heuristic iteration");

    const bool certified = cert.kind != CertKind::none && cert.tail_bound_applies();
    const double rate = certified ? cert.rate() : 0.0;

    IterationTrace trace;
    trace.map_name = map.name;
    trace.metric_name = metric.name();
    trace.heuristic_stop = !certified;
    if (cert.kind != CertKind::none && !certified)
        trace.warning = "certificate rate gives b^2*rate >= 1: tail bound unavailable, "
                        "falling back to heuristic stopping";

    trace.points.push_back(x0);
    double s0 = 0.0;
    for (std::size_t n = 0; n < max_iters; ++n) {
        Point next = map.fn(trace.points.back());
        const bool finite = next.finite();
        trace.points.push_back(std::move(next));
        trace.iterations = n + 1;
        if (!finite) {
            trace.termination = Termination::diverged_bound;
            return trace;
        }

        const Point& xn = trace.points[n];
        const Point& xn1 = trace.points[n + 1];
        const double step = metric(xn, xn, xn1);
        trace.step_distances.push_back(step);
        if (n == 0) s0 = step;

        bool bound_ok = true;
        if (certified) {
            double bound = apriori_tail_bound(rate, cert.b, n, s0);
            trace.bound_values.push_back(bound);
            bound_ok = bound < eps;
        }

        // Landing exactly on a fixed point ends the orbit regardless of
        // the bound; nothing later can move.
        if (xn1 == xn) {
            trace.termination = Termination::converged;
            trace.fixed_point = xn1;
            return trace;
        }
        if (bound_ok && step < eps && coord_distance_inf(xn, xn1) < eps) {
            trace.termination = Termination::converged;
            trace.fixed_point = xn1;
            return trace;
        }
    }
    trace.termination = Termination::max_iters;
    return trace;
}

bool verify_fixed_point(const SbMetric& metric, const SelfMap& map, const Point& x, double tol) {
    Point tx = map.fn(x);
    if (!tx.finite()) return false;
    return metric(tx, tx, x) <= tol;
}

}  // namespace sbm
