#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "sbmetric/metric.hpp"
#include "sbmetric/sampler.hpp"

namespace sbm {

/// A self-mapping of the carrier space.
struct SelfMap {
    std::string name;
    std::function<Point(const Point&)> fn;
};

SelfMap make_scale_map(double c);              // x -> c*x, componentwise
SelfMap make_affine_map(double c, double d);   // x -> c*x + d, componentwise
SelfMap make_ex3_2_map();                      // x -> x+50 when |x-1| = 1, else 45

/// Contraction certificate kinds and their validity thresholds:
///
///   banach                  h < 1/b^2
///   banach_symmetric        h < 1/b      (symmetric metrics only)
///   generalized             alpha1 + (2b^2 + b) alpha2 < 1
///   generalized_symmetric   alpha1 + 3b alpha2 < 1 (symmetric only)
enum class CertKind { banach, banach_symmetric, generalized, generalized_symmetric, none };

std::string cert_kind_name(CertKind k);

struct ContractionCertificate {
    CertKind kind = CertKind::none;
    double h = 0.0;       // banach kinds
    double alpha1 = 0.0;  // generalized kinds
    double alpha2 = 0.0;
    double b = 1.0;
    bool valid = false;
    double margin = 0.0;  // threshold minus attained value

    /// Geometric step-decay rate: h for the banach kinds,
    /// (alpha1 + b*alpha2) / (1 - 2 b^2 alpha2) for the generalized ones.
    [[nodiscard]] double rate() const;

    /// The a priori tail bound needs b^2 * rate < 1 on top of validity.
    /// A valid generalized certificate does not imply it, so certified
    /// stopping is only offered when this holds.
    [[nodiscard]] bool tail_bound_applies() const;

    [[nodiscard]] std::string to_text() const;
};

/// Pure threshold arithmetic. p1 is h for the banach kinds and alpha1 for
/// the generalized kinds. Throws std::invalid_argument for b < 1 or
/// negative parameters.
ContractionCertificate make_certificate(CertKind kind, double b, double p1, double p2 = 0.0);

/// make_certificate with b taken from the metric; the symmetric kinds
/// require metric.symmetric() and throw std::invalid_argument otherwise.
ContractionCertificate certify(CertKind kind, const SbMetric& metric, double p1, double p2 = 0.0);

/// Supremum over sampled pairs with S(x,x,y) > 0 of
/// S(Tx,Tx,Ty) / S(x,x,y): an empirical lower bound on any admissible
/// contraction constant. Throws std::domain_error when no sampled pair
/// has positive distance.
double estimate_contraction_h(const SbMetric& metric, const SelfMap& map, const SamplerConfig& cfg);

struct GeneralizedCheck {
    bool holds = true;
    double worst_gap = 0.0;  // max over pairs of lhs - rhs
    Point x, y;              // worst pair
    double lhs = 0.0;
    double rhs = 0.0;
    std::uint64_t samples = 0;
};

/// Verifies S(Tx,Tx,Ty) <= alpha1 S(x,x,y) +
/// alpha2 max{S(Tx,Tx,x), S(Tx,Tx,y), S(Ty,Ty,y), S(Ty,Ty,x)} over sampled
/// pairs, reporting the worst pair.
GeneralizedCheck check_generalized(const SbMetric& metric, const SelfMap& map, double alpha1,
                                   double alpha2, const SamplerConfig& cfg);

/// 2 b h^n / (1 - b^2 h) * s0: upper bound on S(x_n, x_n, x_m) for every
/// m > n, given step decay rate h and first step distance s0.
/// Throws std::domain_error when b^2 h >= 1.
double apriori_tail_bound(double h, double b, std::size_t n, double s0);

enum class Termination { converged, max_iters, diverged_bound };

std::string termination_name(Termination t);

/// The orbit x0, x1 = Tx0, ... with per-step distances and, in certified
/// mode, the a priori tail bound at each step.
struct IterationTrace {
    std::string map_name;
    std::string metric_name;
    std::vector<Point> points;
    std::vector<double> step_distances;  // S(x_n, x_n, x_{n+1})
    std::vector<double> bound_values;    // certified mode only
    Termination termination = Termination::max_iters;
    std::optional<Point> fixed_point;
    std::size_t iterations = 0;  // applications of the map
    bool heuristic_stop = false;
    std::string warning;

    [[nodiscard]] std::string to_text() const;
};

/// Iterate x_{n+1} = T(x_n).
///
/// With a valid certificate whose tail bound applies, the iteration stops
/// once the bound at step n and the step distances (metric and, for
/// coordinate points, max-norm) all fall below eps: the bound then
/// guarantees every later iterate stays within eps. Without such a
/// certificate (kind none, or a valid certificate with b^2 rate >= 1) the
/// stop is the heuristic consecutive-step test and the trace is flagged.
/// An orbit that lands exactly on a fixed point stops immediately.
///
/// A certificate with valid == false is rejected (std::invalid_argument);
/// pass kind none for heuristic iteration. A non-finite iterate
/// terminates the trace with diverged_bound; exhausting max_iters yields
/// max_iters (not an exception).
IterationTrace picard(const SbMetric& metric, const SelfMap& map, const Point& x0,
                      const ContractionCertificate& cert, double eps = 1e-10,
                      std::size_t max_iters = 10000);

/// S(Tx, Tx, x) <= tol.
bool verify_fixed_point(const SbMetric& metric, const SelfMap& map, const Point& x, double tol);

}  // namespace sbm
