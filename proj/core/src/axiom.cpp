#include "sbmetric/axiom.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>

#include "sbmetric/numeric.hpp"

namespace sbm {

std::string family_name(Family f) {
    switch (f) {
        case Family::b_metric: return "B_METRIC";
        case Family::g_metric: return "G_METRIC";
        case Family::gb_metric: return "GB_METRIC";
        case Family::s_metric: return "S_METRIC";
        case Family::sb_metric: return "SB_METRIC";
        case Family::symmetry: return "SYMMETRY";
        case Family::quasi_symmetry: return "QUASI_SYMMETRY";
    }
    return "?";
}

Family family_from_token(const std::string& token) {
    if (token == "b") return Family::b_metric;
    if (token == "g") return Family::g_metric;
    if (token == "gb") return Family::gb_metric;
    if (token == "s") return Family::s_metric;
    if (token == "sb") return Family::sb_metric;
    if (token == "sym") return Family::symmetry;
    if (token == "quasi") return Family::quasi_symmetry;
    throw std::invalid_argument("unknown schema '" + token + "' (expected b|g|gb|s|sb|sym|quasi)");
}

std::string verdict_name(Verdict v) { return v == Verdict::fail ? "FAIL" : "PASS_SAMPLED"; }

namespace {

// How a clause is violated:
//   le  lhs > rhs + slack
//   eq  |lhs - rhs| > slack
//   gt  lhs must be strictly positive (rhs is 0); lhs <= rhs violates
enum class Rel { le, eq, gt };

struct ClauseDef {
    std::string id;
    std::size_t arity = 1;
    std::size_t aux = 0;
    Rel rel = Rel::le;
    // Fills lhs/rhs; returns false when the tuple is outside the clause's
    // quantifier (skipped, not counted).
    std::function<bool(std::span<const Point>, double&, double&)> eval;
};

ClauseResult run_clause(const TupleStream& stream, const ClauseDef& def, double slack,
                        std::size_t top_k) {
    ClauseResult res;
    res.id = def.id;
    res.aux_count = def.aux;

    // Bounded keep-list: min-heap whose root is the least preferred kept
    // counterexample (smallest gap; ties keep the earliest).
    auto heap_less = [](const Counterexample& a, const Counterexample& b) {
        if (a.gap != b.gap) return a.gap > b.gap;
        return a.order < b.order;
    };
    std::vector<Counterexample> kept;
    std::uint64_t order = 0;

    res.exhaustive_grid = stream.visit(def.arity, [&](std::span<const Point> tuple) {
        double lhs = 0.0, rhs = 0.0;
        if (!def.eval(tuple, lhs, rhs)) return;
        ++res.samples;

        bool violated = false;
        double gap = 0.0;
        switch (def.rel) {
            case Rel::le:
                gap = lhs - rhs;
                violated = gap > slack;
                break;
            case Rel::eq:
                gap = std::abs(lhs - rhs);
                violated = gap > slack;
                break;
            case Rel::gt:
                gap = rhs - lhs;
                violated = lhs <= rhs;
                break;
        }
        if (!violated) return;
        ++res.violations;

        Counterexample ce{std::vector<Point>(tuple.begin(), tuple.end()), lhs, rhs, gap, order++};
        if (kept.size() < top_k) {
            kept.push_back(std::move(ce));
            std::push_heap(kept.begin(), kept.end(), heap_less);
        } else if (top_k > 0 && ce.gap > kept.front().gap) {
            std::pop_heap(kept.begin(), kept.end(), heap_less);
            kept.back() = std::move(ce);
            std::push_heap(kept.begin(), kept.end(), heap_less);
        }
    });

    std::sort(kept.begin(), kept.end(), [](const Counterexample& a, const Counterexample& b) {
        if (a.gap != b.gap) return a.gap > b.gap;
        return a.order < b.order;
    });
    res.counterexamples = std::move(kept);
    res.verdict = res.violations > 0 ? Verdict::fail : Verdict::pass_sampled;
    return res;
}

bool all_equal(std::span<const Point> t) {
    for (std::size_t i = 1; i < t.size(); ++i)
        if (!(t[i] == t[0])) return false;
    return true;
}

// Tracks sup S(x,y,z) / [S(x,x,a)+S(y,y,a)+S(z,z,a)] while a coefficient
// clause runs, so SB/S reports carry the same empirical bound that
// estimate_min_b computes.
struct RatioTracker {
    double max_ratio = -1.0;
    std::uint64_t usable = 0;

    void feed(double numerator, double denominator) {
        if (denominator <= 0.0) return;
        ++usable;
        max_ratio = std::max(max_ratio, numerator / denominator);
    }
};

std::vector<ClauseDef> ternary_clauses(Family family, const SbMetric& m, double b,
                                       RatioTracker* ratios) {
    std::vector<ClauseDef> cs;
    const bool sb = family == Family::sb_metric;
    const bool gb = family == Family::gb_metric;
    const std::string p = sb ? "Sb" : (gb ? "Gb" : (family == Family::s_metric ? "S" : "G"));

    switch (family) {
        case Family::s_metric:
        case Family::sb_metric: {
            cs.push_back({p + "1.zero", 1, 0, Rel::eq,
                          [&m](std::span<const Point> t, double& lhs, double& rhs) {
                              lhs = m(t[0], t[0], t[0]);
                              rhs = 0.0;
                              return true;
                          }});
            cs.push_back({p + "1.pos", 3, 0, Rel::gt,
                          [&m](std::span<const Point> t, double& lhs, double& rhs) {
                              if (all_equal(t)) return false;
                              lhs = m(t[0], t[1], t[2]);
                              rhs = 0.0;
                              return true;
                          }});
            double coeff = sb ? b : 1.0;
            cs.push_back({p + "2", 4, 1, Rel::le,
                          [&m, coeff, ratios](std::span<const Point> t, double& lhs, double& rhs) {
                              lhs = m(t[0], t[1], t[2]);
                              double sum = m(t[0], t[0], t[3]) + m(t[1], t[1], t[3]) +
                                           m(t[2], t[2], t[3]);
                              rhs = coeff * sum;
                              if (ratios && !all_equal(t.subspan(0, 3))) ratios->feed(lhs, sum);
                              return true;
                          }});
            break;
        }
        case Family::g_metric:
        case Family::gb_metric: {
            cs.push_back({p + "1", 1, 0, Rel::eq,
                          [&m](std::span<const Point> t, double& lhs, double& rhs) {
                              lhs = m(t[0], t[0], t[0]);
                              rhs = 0.0;
                              return true;
                          }});
            cs.push_back({p + "2", 2, 0, Rel::gt,
                          [&m](std::span<const Point> t, double& lhs, double& rhs) {
                              if (t[0] == t[1]) return false;
                              lhs = m(t[0], t[0], t[1]);
                              rhs = 0.0;
                              return true;
                          }});
            cs.push_back({p + "3", 3, 0, Rel::le,
                          [&m](std::span<const Point> t, double& lhs, double& rhs) {
                              if (t[1] == t[2]) return false;  // quantified with y != z
                              lhs = m(t[0], t[0], t[1]);
                              rhs = m(t[0], t[1], t[2]);
                              return true;
                          }});
            cs.push_back({p + "4", 3, 0, Rel::eq,
                          [&m](std::span<const Point> t, double& lhs, double& rhs) {
                              const Point &x = t[0], &y = t[1], &z = t[2];
                              double v[6] = {m(x, y, z), m(x, z, y), m(y, x, z),
                                             m(y, z, x), m(z, x, y), m(z, y, x)};
                              lhs = *std::max_element(v, v + 6);
                              rhs = *std::min_element(v, v + 6);
                              return true;
                          }});
            double coeff = gb ? b : 1.0;
            cs.push_back({p + "5", 4, 1, Rel::le,
                          [&m, coeff](std::span<const Point> t, double& lhs, double& rhs) {
                              lhs = m(t[0], t[1], t[2]);
                              rhs = coeff * (m(t[0], t[3], t[3]) + m(t[3], t[1], t[2]));
                              return true;
                          }});
            break;
        }
        case Family::symmetry:
            cs.push_back({"sym", 2, 0, Rel::eq,
                          [&m](std::span<const Point> t, double& lhs, double& rhs) {
                              lhs = m(t[0], t[0], t[1]);
                              rhs = m(t[1], t[1], t[0]);
                              return true;
                          }});
            break;
        case Family::quasi_symmetry: {
            cs.push_back({"quasi.fwd", 2, 0, Rel::le,
                          [&m, b, ratios](std::span<const Point> t, double& lhs, double& rhs) {
                              double fwd = m(t[0], t[0], t[1]);
                              double rev = m(t[1], t[1], t[0]);
                              lhs = fwd;
                              rhs = b * rev;
                              if (ratios) {
                                  ratios->feed(fwd, rev);
                                  ratios->feed(rev, fwd);
                              }
                              return true;
                          }});
            cs.push_back({"quasi.rev", 2, 0, Rel::le,
                          [&m, b](std::span<const Point> t, double& lhs, double& rhs) {
                              lhs = m(t[1], t[1], t[0]);
                              rhs = b * m(t[0], t[0], t[1]);
                              return true;
                          }});
            break;
        }
        case Family::b_metric:
            throw std::invalid_argument("B_METRIC schema needs a binary metric");
    }
    return cs;
}

std::vector<ClauseDef> binary_clauses(const BMetric& d, double b) {
    std::vector<ClauseDef> cs;
    cs.push_back({"b1.zero", 1, 0, Rel::eq,
                  [&d](std::span<const Point> t, double& lhs, double& rhs) {
                      lhs = d(t[0], t[0]);
                      rhs = 0.0;
                      return true;
                  }});
    cs.push_back({"b1.pos", 2, 0, Rel::gt,
                  [&d](std::span<const Point> t, double& lhs, double& rhs) {
                      if (t[0] == t[1]) return false;
                      lhs = d(t[0], t[1]);
                      rhs = 0.0;
                      return true;
                  }});
    cs.push_back({"b2", 2, 0, Rel::eq,
                  [&d](std::span<const Point> t, double& lhs, double& rhs) {
                      lhs = d(t[0], t[1]);
                      rhs = d(t[1], t[0]);
                      return true;
                  }});
    cs.push_back({"b3", 3, 0, Rel::le,
                  [&d, b](std::span<const Point> t, double& lhs, double& rhs) {
                      lhs = d(t[0], t[2]);
                      rhs = b * (d(t[0], t[1]) + d(t[1], t[2]));
                      return true;
                  }});
    return cs;
}

AxiomReport run_schema(const TupleStream& stream, const std::vector<ClauseDef>& clauses,
                       std::string subject, std::string schema, double b,
                       const SamplerConfig& cfg) {
    AxiomReport rep;
    rep.subject = std::move(subject);
    rep.schema = std::move(schema);
    rep.b = b;
    rep.seed = cfg.seed;
    rep.slack = cfg.slack;
    for (const auto& c : clauses)
        rep.clauses.push_back(run_clause(stream, c, cfg.slack, cfg.max_counterexamples));
    return rep;
}

}  // namespace

Verdict AxiomReport::verdict() const {
    for (const auto& c : clauses)
        if (c.verdict == Verdict::fail) return Verdict::fail;
    return Verdict::pass_sampled;
}

std::uint64_t AxiomReport::samples_evaluated() const {
    std::uint64_t n = 0;
    for (const auto& c : clauses) n += c.samples;
    return n;
}

const ClauseResult* AxiomReport::clause(const std::string& id) const {
    for (const auto& c : clauses)
        if (c.id == id) return &c;
    return nullptr;
}

namespace {

std::string tuple_text(const std::vector<Point>& tuple, std::size_t aux) {
    auto piece = [](const Point& p) {
        if (p.is_real() && p.dimension() > 1) return "[" + p.to_text() + "]";
        return p.to_text();
    };
    const std::size_t main_n = tuple.size() - aux;
    std::string out = "(";
    for (std::size_t i = 0; i < main_n; ++i) {
        if (i) out += ',';
        out += piece(tuple[i]);
    }
    for (std::size_t i = main_n; i < tuple.size(); ++i) {
        out += (i == main_n) ? ';' : ',';
        out += piece(tuple[i]);
    }
    out += ')';
    return out;
}

}  // namespace

std::string AxiomReport::to_text() const {
    std::string out = "report subject=" + subject + " schema=" + schema + " b=" + fmt_double(b) +
                      " seed=" + std::to_string(seed) + " slack=" + fmt_double(slack) +
                      " verdict=" + verdict_name(verdict()) +
                      " samples=" + std::to_string(samples_evaluated()) +
                      " clauses=" + std::to_string(clauses.size());
    if (empirical_b_lower) out += " empirical_b_lower=" + fmt_double(*empirical_b_lower);
    out += '\n';
    for (const auto& c : clauses) {
        out += "clause id=" + c.id + " verdict=" + verdict_name(c.verdict) +
               " samples=" + std::to_string(c.samples) +
               " violations=" + std::to_string(c.violations) +
               " exhaustive_grid=" + (c.exhaustive_grid ? "1" : "0") + '\n';
        for (const auto& ce : c.counterexamples)
            out += "counterexample clause=" + c.id + " tuple=" + tuple_text(ce.tuple, c.aux_count) +
                   " lhs=" + fmt_double(ce.lhs) + " rhs=" + fmt_double(ce.rhs) +
                   " gap=" + fmt_double(ce.gap) + '\n';
    }
    return out;
}

AxiomReport check_axioms(Family family, const SbMetric& metric, const SamplerConfig& cfg,
                         std::optional<double> b_override) {
    if (family == Family::b_metric)
        throw std::invalid_argument("B_METRIC schema needs a binary metric, not " + metric.name());
    const double b = b_override.value_or(metric.b());
    if (!(b >= 1.0)) throw std::invalid_argument("schema coefficient must be >= 1");

    TupleStream stream(metric.carrier(), cfg);
    RatioTracker ratios;
    auto clauses = ternary_clauses(family, metric, b, &ratios);
    auto rep = run_schema(stream, clauses, metric.name(), family_name(family), b, cfg);
    if (ratios.usable > 0) rep.empirical_b_lower = ratios.max_ratio;
    return rep;
}

AxiomReport check_axioms(Family family, const BMetric& metric, const SamplerConfig& cfg,
                         std::optional<double> b_override) {
    if (family != Family::b_metric)
        throw std::invalid_argument(family_name(family) + " schema needs a ternary metric, not " +
                                    metric.name());
    const double b = b_override.value_or(metric.b());
    if (!(b >= 1.0)) throw std::invalid_argument("schema coefficient must be >= 1");

    TupleStream stream(metric.carrier(), cfg);
    auto clauses = binary_clauses(metric, b);
    return run_schema(stream, clauses, metric.name(), family_name(family), b, cfg);
}

AxiomReport check_symmetry(const SbMetric& metric, const SamplerConfig& cfg) {
    return check_axioms(Family::symmetry, metric, cfg);
}

AxiomReport check_quasi_symmetry(const SbMetric& metric, const SamplerConfig& cfg) {
    return check_axioms(Family::quasi_symmetry, metric, cfg);
}

AxiomReport check_not_b_generated(const SbMetric& metric, const SamplerConfig& cfg) {
    TupleStream stream(metric.carrier(), cfg);
    std::vector<ClauseDef> clauses;
    clauses.push_back({"gen.identity", 3, 0, Rel::eq,
                       [&metric](std::span<const Point> t, double& lhs, double& rhs) {
                           lhs = metric(t[0], t[1], t[2]);
                           rhs = 0.5 * (metric(t[0], t[0], t[2]) + metric(t[1], t[1], t[2]));
                           return true;
                       }});
    return run_schema(stream, clauses, metric.name(), "NOT_B_GENERATED", metric.b(), cfg);
}

double estimate_min_b(const SbMetric& metric, const SamplerConfig& cfg) {
    TupleStream stream(metric.carrier(), cfg);
    RatioTracker ratios;
    stream.visit(4, [&](std::span<const Point> t) {
        if (all_equal(t.subspan(0, 3))) return;
        double num = metric(t[0], t[1], t[2]);
        double den = metric(t[0], t[0], t[3]) + metric(t[1], t[1], t[3]) + metric(t[2], t[2], t[3]);
        ratios.feed(num, den);
    });
    if (ratios.usable == 0)
        throw std::domain_error("estimate_min_b: every sampled denominator is zero (degenerate space)");
    return ratios.max_ratio;
}

}  // namespace sbm
