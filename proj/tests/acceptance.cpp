// Acceptance suite: exact-value regressions and property checks, one
// pass/fail line per criterion. Returns nonzero when anything fails.

#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "sbmetric/axiom.hpp"
#include "sbmetric/catalog.hpp"
#include "sbmetric/fixpoint.hpp"
#include "sbmetric/linsys.hpp"
#include "sbmetric/numeric.hpp"
#include "sbmetric/topology.hpp"

using namespace sbm;

namespace {

struct Checker {
    std::vector<std::string> failures;

    void require(bool ok, const std::string& what) {
        if (!ok) failures.push_back(what);
    }
    void close(double got, double want, double tol, const std::string& what) {
        if (!(std::abs(got - want) <= tol))
            failures.push_back(what + ": got " + fmt_double(got) + ", want " + fmt_double(want) +
                               " within " + fmt_double(tol));
    }
};

Point sp(double x) { return Point::scalar(x); }

SamplerConfig default_cfg(std::uint64_t seed = 1) {
    SamplerConfig cfg;
    cfg.seed = seed;
    return cfg;  // grid [-10,10] step 1, 10000 randoms, slack 1e-9
}

double uniform(std::mt19937_64& rng, double lo, double hi) {
    return lo + (static_cast<double>(rng() >> 11) * 0x1.0p-53) * (hi - lo);
}

const Counterexample* find_scalar_tuple(const ClauseResult& c, std::vector<double> values) {
    for (const auto& ce : c.counterexamples) {
        if (ce.tuple.size() != values.size()) continue;
        bool match = true;
        for (std::size_t i = 0; i < values.size(); ++i)
            if (!(ce.tuple[i] == sp(values[i]))) match = false;
        if (match) return &ce;
    }
    return nullptr;
}

// Focused config that keeps the textbook witness quadruple in the report.
SamplerConfig witness_cfg() {
    SamplerConfig cfg = default_cfg();
    cfg.grid = {GridRange{4, 8, 1}};
    cfg.random_count = 0;
    cfg.max_counterexamples = 2000;
    return cfg;
}

std::uint64_t total_violations(const AxiomReport& rep) {
    std::uint64_t n = 0;
    for (const auto& c : rep.clauses) n += c.violations;
    return n;
}

// ---------------------------------------------------------------------------

void criterion_01_ex2_1_regression(Checker& c) {
    auto m = make_ex2_1();
    c.close(m(sp(4), sp(6), sp(8)), 4.0, 1e-12, "S(4,6,8)");
    c.close(m(sp(4), sp(4), sp(5)), 0.25, 1e-12, "S(4,4,5)");
    c.close(m(sp(6), sp(6), sp(5)), 0.25, 1e-12, "S(6,6,5)");
    c.close(m(sp(8), sp(8), sp(5)), 2.25, 1e-12, "S(8,8,5)");

    auto rep = check_axioms(Family::s_metric, m, default_cfg());
    c.require(rep.verdict() == Verdict::fail, "coefficient-free family must FAIL on ex2_1");

    auto focused = check_axioms(Family::s_metric, m, witness_cfg());
    const auto* s2 = focused.clause("S2");
    c.require(s2 && s2->verdict == Verdict::fail, "S2 clause must FAIL");
    const auto* w = s2 ? find_scalar_tuple(*s2, {4, 6, 8, 5}) : nullptr;
    c.require(w != nullptr, "witness (4,6,8;5) must be reported");
    if (w) {
        c.close(w->lhs, 4.0, 1e-12, "witness lhs");
        c.close(w->rhs, 2.75, 1e-12, "witness rhs");
        c.require(w->lhs > w->rhs, "witness must violate lhs > rhs");
    }
}

void criterion_02_ex2_1_as_sb(Checker& c) {
    auto m = make_ex2_1();
    auto rep = check_axioms(Family::sb_metric, m, default_cfg());
    c.require(rep.verdict() == Verdict::pass_sampled, "ex2_1 must pass its family with b=4");
    double est = estimate_min_b(m, default_cfg());
    c.require(est >= 16.0 / 11.0 - 1e-9,
              "empirical coefficient bound must reach 16/11, got " + fmt_double(est));
    c.require(est <= m.b() + 1e-9, "empirical bound must not exceed the claimed coefficient");
}

void criterion_03_ex2_3(Checker& c) {
    auto m = make_ex2_3();
    auto sym = check_symmetry(m, default_cfg());
    c.require(sym.verdict() == Verdict::fail, "ex2_3 symmetry must FAIL");
    const auto* cl = sym.clause("sym");
    c.require(cl && !cl->counterexamples.empty(), "symmetry failure needs a witness");
    if (cl && !cl->counterexamples.empty()) {
        const auto& top = cl->counterexamples.front();
        c.require(top.tuple.size() == 2 && top.tuple[0] == sp(0) && top.tuple[1] == sp(1),
                  "top witness must be (0,1)");
        c.close(top.lhs, 2.0, 0.0, "witness S(0,0,1)");
        c.close(top.rhs, 4.0, 0.0, "witness S(1,1,0)");
    }

    SamplerConfig cfg = default_cfg();  // grid includes 0 and 1
    cfg.random_count = 1000;
    auto rep = check_axioms(Family::sb_metric, m, cfg);
    c.require(rep.verdict() == Verdict::pass_sampled, "ex2_3 must pass its family with b=2");
}

void criterion_04_ball(Checker& c) {
    auto m = make_ex2_1();
    const double edge = 2.0 * std::sqrt(2.0);
    for (double sign : {1.0, -1.0}) {
        c.require(in_open_ball(m, sp(0), 2.0, sp(sign * (edge - 1e-6))),
                  "open ball must contain +/-(2*sqrt(2) - 1e-6)");
        c.require(!in_open_ball(m, sp(0), 2.0, sp(sign * (edge + 1e-6))),
                  "open ball must exclude +/-(2*sqrt(2) + 1e-6)");
        c.require(in_closed_ball(m, sp(0), 2.0, sp(sign * edge), 1e-9),
                  "closed ball must contain +/-2*sqrt(2) within 1e-9");
    }
}

void criterion_05_lemma_suite(Checker& c) {
    auto cfg = default_cfg();

    auto sd = induce_s_metric(make_abs_metric());
    auto rep_s = check_axioms(Family::s_metric, sd, cfg);
    c.require(rep_s.verdict() == Verdict::pass_sampled && total_violations(rep_s) == 0,
              "metric-induced ternary form must pass the coefficient-free family cleanly");

    auto sqd = make_squared_diff_metric();
    auto rep_base = check_axioms(Family::b_metric, sqd, cfg);
    c.require(rep_base.verdict() == Verdict::pass_sampled && total_violations(rep_base) == 0,
              "|x-y|^2 must be a coefficient-2 binary metric on samples");
    auto sb = induce_sb_metric(sqd);
    c.require(sb.b() == 2.0, "induced ternary form must carry b = 2");
    auto rep_sb = check_axioms(Family::sb_metric, sb, cfg);
    c.require(rep_sb.verdict() == Verdict::pass_sampled && total_violations(rep_sb) == 0,
              "ternary form induced from |x-y|^2 must pass with b = 2");

    auto d = induce_b_metric(make_ex2_1());
    c.require(d.b() == 6.0, "binary form induced from ex2_1 must carry coefficient 6");
    auto rep_b = check_axioms(Family::b_metric, d, cfg);
    c.require(rep_b.verdict() == Verdict::pass_sampled && total_violations(rep_b) == 0,
              "binary form induced from ex2_1 must pass with coefficient 6");
}

void criterion_06_not_generated(Checker& c) {
    auto m = make_ex2_6();  // scale 1
    auto rep = check_not_b_generated(m, default_cfg());
    c.require(rep.verdict() == Verdict::fail, "ex2_6 must fail the induced-form identity");
    const auto* cl = rep.clause("gen.identity");
    c.require(cl && !cl->counterexamples.empty(), "obstruction needs a witness");
    if (cl && !cl->counterexamples.empty())
        c.require(cl->counterexamples.front().gap >= 1.0 - 1e-9,
                  "top witness gap must be at least 1");

    SamplerConfig small = default_cfg();
    small.grid = {GridRange{0, 1, 1}};
    small.random_count = 0;
    small.max_counterexamples = 100;
    auto probe = check_not_b_generated(m, small);
    const auto* pcl = probe.clause("gen.identity");
    const auto* w = pcl ? find_scalar_tuple(*pcl, {0, 1, 0}) : nullptr;
    c.require(w != nullptr, "triple (0,1,0) must witness the obstruction");
    if (w) {
        c.close(w->lhs, 2.0, 0.0, "identity lhs at (0,1,0)");
        c.close(w->rhs, 1.0, 0.0, "identity rhs at (0,1,0)");
    }
}

void criterion_07_banach_end_to_end(Checker& c) {
    auto m = make_ex2_1();
    auto map = make_scale_map(1.0 / 6.0);

    double h_meas = estimate_contraction_h(m, map, default_cfg());
    c.close(h_meas, 1.0 / 36.0, 1e-12, "measured contraction constant");

    auto cert = certify(CertKind::banach, m, 1.0 / 18.0);
    c.require(cert.valid, "banach certificate at h = 1/18, b = 4 must be valid");

    auto tr = picard(m, map, sp(1), cert, 1e-12, 10000);
    c.require(tr.termination == Termination::converged, "iteration must converge");
    c.require(tr.iterations <= 25,
              "iteration count " + std::to_string(tr.iterations) + " must be at most 25");
    c.require(tr.fixed_point && std::abs(tr.fixed_point->coord(0)) <= 1e-12,
              "fixed-point estimate must satisfy |x| <= 1e-12");

    if (!tr.step_distances.empty()) {
        const double h = 1.0 / 36.0;
        const double s0 = tr.step_distances.front();
        for (std::size_t n = 0; n < tr.step_distances.size(); ++n)
            c.require(tr.step_distances[n] <= std::pow(h, static_cast<double>(n)) * s0 + 1e-9,
                      "step decay violated at step " + std::to_string(n));
        for (std::size_t n = 0; n < tr.points.size(); ++n) {
            double bound = apriori_tail_bound(h, 4.0, n, s0);
            for (std::size_t k = n + 1; k < tr.points.size(); ++k)
                c.require(m(tr.points[n], tr.points[n], tr.points[k]) <= bound + 1e-9,
                          "tail bound violated between " + std::to_string(n) + " and " +
                              std::to_string(k));
        }
    }
}

void criterion_08_generalized_end_to_end(Checker& c) {
    auto m = make_ex2_5();
    auto map = make_ex3_2_map();

    double h = estimate_contraction_h(m, map, default_cfg());  // grid contains the pair (1,0)
    c.require(h >= 5.0, "plain contraction estimate must reach 5, got " + fmt_double(h));

    SamplerConfig cfg = default_cfg();
    cfg.grid = {GridRange{-5, 55, 1}};
    auto gen = check_generalized(m, map, 0.0, 0.2, cfg);
    c.require(gen.holds, "orbit condition with alpha1=0, alpha2=1/5 must hold");

    auto cert = certify(CertKind::generalized, m, 0.0, 0.2);
    c.require(cert.valid, "generalized certificate must be valid at b = 1");
    for (double start : {0.0, 2.0, 100.0}) {
        auto tr = picard(m, map, sp(start), cert, 1e-10, 100);
        c.require(tr.termination == Termination::converged &&
                      tr.fixed_point && tr.fixed_point->coord(0) == 45.0,
                  "orbit from " + fmt_double(start) + " must land on 45");
        c.require(tr.iterations <= 3,
                  "orbit from " + fmt_double(start) + " must need at most 3 iterations");
    }
    c.require(verify_fixed_point(m, map, sp(45), 0.0), "45 must be an exact fixed point");
}

void criterion_09_thresholds(Checker& c) {
    c.require(!make_certificate(CertKind::banach, 4.0, 1.0 / 16.0).valid,
              "banach boundary h = 1/16 at b = 4 must be invalid (strict)");
    c.require(make_certificate(CertKind::banach, 4.0, 1.0 / 16.0 - 1e-12).valid,
              "banach h = 1/16 - 1e-12 at b = 4 must be valid");
    c.require(!make_certificate(CertKind::banach_symmetric, 4.0, 0.25).valid,
              "symmetric banach boundary h = 1/4 at b = 4 must be invalid");
    c.require(make_certificate(CertKind::banach_symmetric, 4.0, 0.25 - 1e-12).valid,
              "symmetric banach h = 1/4 - 1e-12 at b = 4 must be valid");
    c.require(!make_certificate(CertKind::generalized, 2.0, 0.375, 0.0625).valid,
              "generalized boundary 0.375 + 10*0.0625 = 1 at b = 2 must be invalid");
    c.require(make_certificate(CertKind::generalized, 2.0, 0.375 - 1e-12, 0.0625).valid,
              "generalized just below the boundary must be valid");
    c.require(!make_certificate(CertKind::generalized_symmetric, 2.0, 0.25, 0.125).valid,
              "symmetric generalized boundary 0.25 + 6*0.125 = 1 must be invalid");
    c.require(make_certificate(CertKind::generalized_symmetric, 2.0, 0.25 - 1e-12, 0.125).valid,
              "symmetric generalized just below the boundary must be valid");
    c.require(make_certificate(CertKind::generalized, 1.0, 0.0, 0.2).valid,
              "alpha2 = 1/5 at b = 1 must be valid (threshold 3)");

    // With alpha2 = 0 a fully certified generalized run (valid threshold and
    // usable tail bound) is available exactly when the plain contraction
    // certificate is valid.
    std::mt19937_64 rng(99);
    for (int i = 0; i < 100; ++i) {
        double b = uniform(rng, 1.0, 5.0);
        double a1 = uniform(rng, 0.0, 1.2);
        auto banach = make_certificate(CertKind::banach, b, a1);
        auto gen = make_certificate(CertKind::generalized, b, a1, 0.0);
        bool gen_certified = gen.valid && gen.tail_bound_applies();
        c.require(banach.valid == gen_certified,
                  "certified-run agreement failed at b=" + fmt_double(b) +
                      ", alpha1=" + fmt_double(a1));
        if (banach.valid)
            c.require(gen.valid, "banach validity must imply generalized validity");
        if (gen.valid && gen.tail_bound_applies())
            c.close(gen.rate(), a1, 1e-15, "generalized rate with alpha2 = 0");
    }
}

void criterion_10_linear_solver(Checker& c) {
    std::mt19937_64 rng(20250810);
    const double eps = 1e-10;
    for (int trial = 0; trial < 100; ++trial) {
        std::size_t n = 2 + static_cast<std::size_t>(rng() % 9);
        Matrix a(n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) a.at(i, j) = uniform(rng, -1.0, 1.0);
        double norm = column_sum_norm(a);
        double target = uniform(rng, 0.1, 0.9);
        double scale = norm > 0 ? target / norm : 0.0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) a.at(i, j) *= scale;
        std::vector<double> rhs(n);
        for (auto& v : rhs) v = uniform(rng, -5.0, 5.0);

        auto sys = make_system(a, rhs);
        auto res = solve_iterative(sys, eps);
        if (res.trace.termination != Termination::converged || !res.certified) {
            c.require(false, "system " + std::to_string(trial) + " failed to converge certified");
            continue;
        }

        Matrix i_minus_a(n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                i_minus_a.at(i, j) = (i == j ? 1.0 : 0.0) - sys.a.at(i, j);
        auto oracle = direct_solve(i_minus_a, sys.rhs);
        for (std::size_t i = 0; i < n; ++i)
            c.require(std::abs(res.solution[i] - oracle[i]) <= 1e-8,
                      "component " + std::to_string(i) + " of system " + std::to_string(trial) +
                          " disagrees with elimination");

        if (res.h > 0 && !res.trace.step_distances.empty() &&
            res.trace.step_distances.front() > 0) {
            double s0 = res.trace.step_distances.front();
            double predicted =
                std::ceil(std::log(eps * (1.0 - res.h) / (2.0 * s0)) / std::log(res.h)) + 1.0;
            c.require(static_cast<double>(res.trace.iterations) <= predicted,
                      "iteration count exceeded the closed-form prediction on system " +
                          std::to_string(trial));
        }

        SbMetric s1 = make_s1(n);
        auto map = make_linear_map(sys.a, sys.rhs);
        for (int pair = 0; pair < 30; ++pair) {
            std::vector<double> xc(n), yc(n);
            for (auto& v : xc) v = uniform(rng, -10.0, 10.0);
            for (auto& v : yc) v = uniform(rng, -10.0, 10.0);
            Point x = Point::real(xc), y = Point::real(yc);
            double den = s1(x, x, y);
            if (den <= 0) continue;
            Point tx = map.fn(x), ty = map.fn(y);
            c.require(s1(tx, tx, ty) / den <= res.h + 1e-9,
                      "measured ratio exceeded the column-sum norm on system " +
                          std::to_string(trial));
        }
    }
}

void criterion_11_determinism(Checker& c) {
    auto artifacts = [] {
        std::string blob;
        blob += check_axioms(Family::s_metric, make_ex2_1(), witness_cfg()).to_text();
        blob += check_axioms(Family::sb_metric, make_ex2_1(), default_cfg()).to_text();
        blob += check_symmetry(make_ex2_3(), default_cfg()).to_text();
        blob += check_axioms(Family::s_metric, induce_s_metric(make_abs_metric()), default_cfg())
                    .to_text();
        blob += check_not_b_generated(make_ex2_6(), default_cfg()).to_text();
        blob += fmt_double(estimate_min_b(make_ex2_1(), default_cfg())) + "\n";

        auto m1 = make_ex2_1();
        auto t7 = picard(m1, make_scale_map(1.0 / 6.0), sp(1),
                         certify(CertKind::banach, m1, 1.0 / 18.0), 1e-12, 10000);
        blob += t7.to_text();

        auto m5 = make_ex2_5();
        auto t8 = picard(m5, make_ex3_2_map(), sp(0),
                         certify(CertKind::generalized, m5, 0.0, 0.2), 1e-10, 100);
        blob += t8.to_text();

        std::mt19937_64 rng(7);
        Matrix a(5);
        for (std::size_t i = 0; i < 5; ++i)
            for (std::size_t j = 0; j < 5; ++j) a.at(i, j) = uniform(rng, -0.15, 0.15);
        std::vector<double> rhs(5);
        for (auto& v : rhs) v = uniform(rng, -5.0, 5.0);
        auto res = solve_iterative(make_system(a, rhs), 1e-10);
        blob += res.trace.to_text();
        blob += format_solution(res.solution);
        return blob;
    };
    std::string first = artifacts();
    std::string second = artifacts();
    c.require(first == second, "repeated runs must produce byte-identical reports and traces");
    c.require(!first.empty(), "determinism artifacts must not be empty");
}

}  // namespace

int main() {
    struct Criterion {
        const char* name;
        std::function<void(Checker&)> body;
    };
    const std::vector<Criterion> criteria = {
        {"01 ex2_1 exact values; coefficient-free family falsified at (4,6,8;5)",
         criterion_01_ex2_1_regression},
        {"02 ex2_1 passes its family with b=4; empirical bound reaches 16/11",
         criterion_02_ex2_1_as_sb},
        {"03 ex2_3 symmetry fails at (0,1); family passes with b=2", criterion_03_ex2_3},
        {"04 ball membership around 0 with radius 2 under ex2_1", criterion_04_ball},
        {"05 induced-metric suite passes with coefficients 1, 2 and 6",
         criterion_05_lemma_suite},
        {"06 ex2_6 is not induced by any binary metric (gap >= 1)", criterion_06_not_generated},
        {"07 certified iteration on x/6: rate 1/36, fixed point 0 in <= 25 steps",
         criterion_07_banach_end_to_end},
        {"08 orbit condition on the jump map: fixed point 45 in <= 3 steps",
         criterion_08_generalized_end_to_end},
        {"09 certificate threshold arithmetic and alpha2=0 agreement", criterion_09_thresholds},
        {"10 iterative solver agrees with elimination on 100 seeded systems",
         criterion_10_linear_solver},
        {"11 identical seeds give byte-identical reports and traces", criterion_11_determinism},
    };

    int failed = 0;
    for (const auto& cr : criteria) {
        Checker c;
        try {
            cr.body(c);
        } catch (const std::exception& e) {
            c.failures.push_back(std::string("exception: ") + e.what());
        }
        if (c.failures.empty()) {
            std::printf("[PASS] %s\n", cr.name);
        } else {
            ++failed;
            std::printf("[FAIL] %s\n", cr.name);
            for (const auto& f : c.failures) std::printf("       %s\n", f.c_str());
        }
    }
    if (failed) std::printf("%d of %zu criteria failed\n", failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
