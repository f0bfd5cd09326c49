#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sbmetric/metric.hpp"
#include "sbmetric/sampler.hpp"

namespace sbm {

/// Axiom families that can be checked by sampling. Each family expands to
/// its individual clauses:
///
///   b_metric        (b1) zero iff equal, (b2) symmetry,
///                   (b3) d(x,z) <= b[d(x,y)+d(y,z)]
///   g_metric        (G1)..(G5), coefficient-free
///   gb_metric       (Gb1)..(Gb5), coefficient b in (Gb5)
///   s_metric        (S1) zero iff all equal,
///                   (S2) S(x,y,z) <= S(x,x,a)+S(y,y,a)+S(z,z,a)
///   sb_metric       (Sb1), (Sb2) with coefficient b on the right side
///   symmetry        S(x,x,y) = S(y,y,x)
///   quasi_symmetry  S(x,x,y) <= b S(y,y,x) and the reverse
enum class Family {
    b_metric,
    g_metric,
    gb_metric,
    s_metric,
    sb_metric,
    symmetry,
    quasi_symmetry,
};

std::string family_name(Family f);

/// Parses the CLI tokens b, g, gb, s, sb, sym, quasi.
Family family_from_token(const std::string& token);

enum class Verdict { pass_sampled, fail };

std::string verdict_name(Verdict v);

/// A sampled tuple that violates a clause. For inequality clauses the
/// violation is lhs > rhs + slack; for identity clauses |lhs - rhs| >
/// slack; for strict-positivity clauses a value that should be positive
/// is <= 0. gap is the violation magnitude used for ranking.
struct Counterexample {
    std::vector<Point> tuple;
    double lhs = 0.0;
    double rhs = 0.0;
    double gap = 0.0;
    std::uint64_t order = 0;  // encounter index, deterministic tiebreak
};

struct ClauseResult {
    std::string id;
    Verdict verdict = Verdict::pass_sampled;
    std::uint64_t samples = 0;     // tuples evaluated (quantifier skips excluded)
    std::uint64_t violations = 0;  // total found, not just those kept
    bool exhaustive_grid = true;
    std::size_t aux_count = 0;  // trailing auxiliary points, for formatting
    std::vector<Counterexample> counterexamples;  // top-K by gap, descending
};

/// Outcome of one sampling run. PASS_SAMPLED never claims universal
/// validity; the sample counts say exactly how much was checked.
struct AxiomReport {
    std::string subject;  // metric name
    std::string schema;   // family or check name
    double b = 1.0;       // effective coefficient used by the clauses
    std::uint64_t seed = 0;
    double slack = 0.0;
    std::optional<double> empirical_b_lower;
    std::vector<ClauseResult> clauses;

    [[nodiscard]] Verdict verdict() const;
    [[nodiscard]] std::uint64_t samples_evaluated() const;
    [[nodiscard]] const ClauseResult* clause(const std::string& id) const;

    /// Key-value text form, one record per line: a header line, one line
    /// per clause, then the kept counterexamples. Byte-stable for a fixed
    /// config.
    [[nodiscard]] std::string to_text() const;
};

/// Check every clause of a ternary family against a ternary metric.
/// b_override replaces the metric's claimed coefficient in coefficient
/// clauses; the s_metric/g_metric families are coefficient-free.
/// Throws std::invalid_argument when the family needs a binary metric.
AxiomReport check_axioms(Family family, const SbMetric& metric, const SamplerConfig& cfg,
                         std::optional<double> b_override = std::nullopt);

/// Binary-family overload (Family::b_metric only).
AxiomReport check_axioms(Family family, const BMetric& metric, const SamplerConfig& cfg,
                         std::optional<double> b_override = std::nullopt);

/// S(x,x,y) = S(y,y,x) over sampled pairs.
AxiomReport check_symmetry(const SbMetric& metric, const SamplerConfig& cfg);

/// Both directions of S(x,x,y) <= b S(y,y,x). The report's
/// empirical_b_lower carries the largest observed ratio.
AxiomReport check_quasi_symmetry(const SbMetric& metric, const SamplerConfig& cfg);

/// Tests the identity S(x,y,z) = [S(x,x,z) + S(y,y,z)] / 2 that any
/// ternary metric of the form d(x,z) + d(y,z) must satisfy. A FAIL
/// verdict therefore witnesses that the metric is not induced by any
/// binary metric.
AxiomReport check_not_b_generated(const SbMetric& metric, const SamplerConfig& cfg);

/// Supremum over sampled quadruples (x,y,z;a) of
/// S(x,y,z) / [S(x,x,a) + S(y,y,a) + S(z,z,a)], skipping zero
/// denominators. A lower bound on any admissible coefficient b, never a
/// certificate. Throws std::domain_error when every denominator is zero.
double estimate_min_b(const SbMetric& metric, const SamplerConfig& cfg);

}  // namespace sbm
