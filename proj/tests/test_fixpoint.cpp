#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "sbmetric/catalog.hpp"
#include "sbmetric/fixpoint.hpp"
#include "support.hpp"

using namespace sbm;

namespace {
Point sp(double x) { return Point::scalar(x); }

SamplerConfig quick_cfg(std::uint64_t seed = 1, std::size_t randoms = 2000) {
    SamplerConfig cfg;
    cfg.seed = seed;
    cfg.random_count = randoms;
    return cfg;
}
}  // namespace

TEST_CASE("contraction estimate for x/6 under ex2_1 is the constant 1/36") {
    double h = estimate_contraction_h(make_ex2_1(), make_scale_map(1.0 / 6.0), quick_cfg());
    CHECK(h == doctest::Approx(1.0 / 36.0).epsilon(0).scale(1e-12));
}

TEST_CASE("contraction estimate edge cases") {
    CHECK(estimate_contraction_h(make_ex2_1(), make_scale_map(1.0), quick_cfg(1, 200)) ==
          doctest::Approx(1.0).epsilon(1e-12));

    // the piecewise jump map is not a Banach contraction: pair (1,0) gives 10/2
    auto cfg = quick_cfg();
    double h = estimate_contraction_h(make_ex2_5(), make_ex3_2_map(), cfg);
    CHECK(h >= 5.0);

    // no usable pair on a one-point space
    auto one = Carrier::finite({Point::label("p")});
    SbMetric zero("zero", one, 1.0, true,
                  [](const Point&, const Point&, const Point&) { return 0.0; });
    SelfMap ident{"id", [](const Point& p) { return p; }};
    CHECK_THROWS_AS((void)estimate_contraction_h(zero, ident, quick_cfg(1, 10)),
                    std::domain_error);
}

TEST_CASE("generalized orbit condition") {
    SUBCASE("jump map satisfies alpha1 = 0, alpha2 = 1/5 over [-5,55]") {
        SamplerConfig cfg = quick_cfg(1, 2000);
        cfg.grid = {GridRange{-5, 55, 1}};
        auto res = check_generalized(make_ex2_5(), make_ex3_2_map(), 0.0, 0.2, cfg);
        CHECK(res.holds);
        CHECK(res.samples > 0);
    }
    SUBCASE("a constant map satisfies it with any parameters") {
        SelfMap c{"const", [](const Point&) { return sp(3.0); }};
        auto res = check_generalized(make_ex2_5(), c, 0.0, 0.0, quick_cfg(1, 500));
        CHECK(res.holds);
        CHECK(res.lhs == 0.0);
    }
    SUBCASE("alpha2 = 0 reduces to the plain contraction inequality") {
        auto res = check_generalized(make_ex2_1(), make_scale_map(1.0 / 6.0), 1.0 / 18.0, 0.0,
                                     quick_cfg(1, 1000));
        CHECK(res.holds);  // measured rate 1/36 <= 1/18
    }
    SUBCASE("parameter validation") {
        CHECK_THROWS_AS(
            (void)check_generalized(make_ex2_1(), make_scale_map(0.5), -0.1, 0.0, quick_cfg()),
            std::invalid_argument);
    }
}

TEST_CASE("certificate thresholds") {
    SUBCASE("banach needs h < 1/b^2, strictly") {
        auto ok = make_certificate(CertKind::banach, 4.0, 1.0 / 18.0);
        CHECK(ok.valid);
        CHECK(ok.margin == doctest::Approx(1.0 / 16.0 - 1.0 / 18.0).epsilon(1e-15));
        CHECK_FALSE(make_certificate(CertKind::banach, 4.0, 1.0 / 16.0).valid);
        CHECK(make_certificate(CertKind::banach, 4.0, 1.0 / 16.0 - 1e-12).valid);
    }
    SUBCASE("symmetric banach relaxes the threshold to 1/b") {
        CHECK(make_certificate(CertKind::banach_symmetric, 4.0, 0.2).valid);
        CHECK_FALSE(make_certificate(CertKind::banach, 4.0, 0.2).valid);
        CHECK_FALSE(make_certificate(CertKind::banach_symmetric, 4.0, 0.25).valid);
    }
    SUBCASE("generalized thresholds") {
        auto g = make_certificate(CertKind::generalized, 1.0, 0.0, 0.2);
        CHECK(g.valid);  // 0 + (2+1)*0.2 = 0.6 < 1
        CHECK(g.margin == doctest::Approx(0.4));
        CHECK_FALSE(make_certificate(CertKind::generalized, 2.0, 0.0, 0.1).valid);  // 10*0.1 = 1
        // at b = 1 the general and symmetric thresholds coincide
        for (double a1 : {0.0, 0.3, 0.7}) {
            for (double a2 : {0.0, 0.1, 0.4}) {
                CHECK(make_certificate(CertKind::generalized, 1.0, a1, a2).valid ==
                      make_certificate(CertKind::generalized_symmetric, 1.0, a1, a2).valid);
            }
        }
    }
    SUBCASE("symmetric kinds reject non-symmetric metrics") {
        CHECK_THROWS_AS((void)certify(CertKind::banach_symmetric, make_ex2_3(), 0.1),
                        std::invalid_argument);
        CHECK_NOTHROW((void)certify(CertKind::banach_symmetric, make_ex2_1(), 0.1));
        CHECK_THROWS_AS((void)certify(CertKind::generalized_symmetric, make_ex2_3(), 0.0, 0.1),
                        std::invalid_argument);
    }
    SUBCASE("certify pulls b from the metric") {
        auto cert = certify(CertKind::banach, make_ex2_1(), 1.0 / 18.0);
        CHECK(cert.b == 4.0);
        CHECK(cert.valid);
        CHECK(cert.tail_bound_applies());  // 16/18 < 1
    }
    SUBCASE("validation") {
        CHECK_THROWS_AS((void)make_certificate(CertKind::banach, 0.5, 0.1),
                        std::invalid_argument);
        CHECK_THROWS_AS((void)make_certificate(CertKind::banach, 1.0, -0.1),
                        std::invalid_argument);
    }
}

TEST_CASE("a priori tail bound") {
    CHECK(apriori_tail_bound(0.0, 1.0, 1, 5.0) == 0.0);
    CHECK(apriori_tail_bound(0.5, 1.0, 3, 1.0) == doctest::Approx(0.5).epsilon(1e-15));
    CHECK_THROWS_AS((void)apriori_tail_bound(0.5, 2.0, 1, 1.0), std::domain_error);  // b^2 h = 2

    // bound dominates the measured tail for the x/6 orbit
    auto m = make_ex2_1();
    double s0 = std::pow(5.0 / 6.0, 2) / 4.0;
    double bound = apriori_tail_bound(1.0 / 36.0, 4.0, 2, s0);
    for (int k = 3; k <= 20; ++k) {
        double xn = std::pow(6.0, -2.0), xm = std::pow(6.0, -k);
        double measured = m(sp(xn), sp(xn), sp(xm));
        CHECK(measured <= bound + 1e-9);
    }
}

TEST_CASE("picard on the scaled line converges to 0 under a certificate") {
    auto m = make_ex2_1();
    auto cert = certify(CertKind::banach, m, 1.0 / 18.0);
    auto tr = picard(m, make_scale_map(1.0 / 6.0), sp(1), cert, 1e-12, 10000);

    CHECK(tr.termination == Termination::converged);
    CHECK_FALSE(tr.heuristic_stop);
    REQUIRE(tr.fixed_point.has_value());
    CHECK(std::abs(tr.fixed_point->coord(0)) <= 1e-12);
    CHECK(tr.iterations <= 25);
    CHECK(tr.points.size() == tr.iterations + 1);
    CHECK(tr.step_distances.size() == tr.iterations);

    // orbit is exactly the map applied repeatedly
    for (std::size_t k = 0; k + 1 < tr.points.size(); ++k)
        CHECK(tr.points[k + 1].coord(0) == tr.points[k].coord(0) / 6.0);

    // step decay at the measured rate
    double h = 1.0 / 36.0;
    double s0 = tr.step_distances.front();
    for (std::size_t n = 0; n < tr.step_distances.size(); ++n)
        CHECK(tr.step_distances[n] <= std::pow(h, static_cast<double>(n)) * s0 + 1e-9);

    // tail bound soundness over the recorded orbit
    for (std::size_t n = 0; n < tr.points.size(); ++n) {
        double bound = apriori_tail_bound(h, 4.0, n, s0);
        for (std::size_t k = n + 1; k < tr.points.size(); ++k)
            CHECK(m(tr.points[n], tr.points[n], tr.points[k]) <= bound + 1e-9);
    }

    // steps never increase under a contraction
    for (std::size_t n = 1; n < tr.step_distances.size(); ++n)
        CHECK(tr.step_distances[n] <= tr.step_distances[n - 1] + 1e-12);

    // converged residual
    CHECK(verify_fixed_point(m, make_scale_map(1.0 / 6.0), *tr.fixed_point, 1e-11));
}

TEST_CASE("picard reaches the jump map's fixed point in at most three steps") {
    auto m = make_ex2_5();
    auto cert = certify(CertKind::generalized, m, 0.0, 0.2);
    auto map = make_ex3_2_map();

    for (double start : {0.0, 2.0, 100.0}) {
        auto tr = picard(m, map, sp(start), cert, 1e-10, 100);
        CHECK(tr.termination == Termination::converged);
        REQUIRE(tr.fixed_point.has_value());
        CHECK(tr.fixed_point->coord(0) == 45.0);
        CHECK(tr.iterations <= 3);
    }
    // the documented orbit from 0: 0, 50, 45, 45
    auto tr = picard(m, map, sp(0), cert, 1e-10, 100);
    REQUIRE(tr.points.size() >= 3);
    CHECK(tr.points[1].coord(0) == 50.0);
    CHECK(tr.points[2].coord(0) == 45.0);
    CHECK(verify_fixed_point(m, map, sp(45), 0.0));
}

TEST_CASE("picard stopping variants") {
    auto m = make_ex2_1();
    SUBCASE("constant maps converge in at most two steps") {
        SelfMap c{"const", [](const Point&) { return sp(2.5); }};
        auto tr = picard(m, c, sp(9), ContractionCertificate{}, 1e-10, 100);
        CHECK(tr.termination == Termination::converged);
        CHECK(tr.iterations <= 2);
        CHECK(tr.fixed_point->coord(0) == 2.5);
        CHECK(tr.heuristic_stop);  // no certificate supplied
    }
    SUBCASE("max_iters is a termination, not an exception") {
        auto tr = picard(m, make_scale_map(0.999999), sp(1), ContractionCertificate{}, 1e-30, 10);
        CHECK(tr.termination == Termination::max_iters);
        CHECK(tr.iterations == 10);
        CHECK_FALSE(tr.fixed_point.has_value());
    }
    SUBCASE("a blowing-up orbit reports divergence") {
        auto tr = picard(m, make_scale_map(1e300), sp(1), ContractionCertificate{}, 1e-10, 50);
        CHECK(tr.termination == Termination::diverged_bound);
        CHECK_FALSE(tr.fixed_point.has_value());
    }
    SUBCASE("invalid certificates are rejected up front") {
        auto bad = make_certificate(CertKind::banach, 4.0, 0.5);
        CHECK_FALSE(bad.valid);
        CHECK_THROWS_AS(
            (void)picard(m, make_scale_map(0.5), sp(1), bad, 1e-10, 10),
            std::invalid_argument);
    }
    SUBCASE("valid certificate without a usable tail bound degrades with a warning") {
        // b = 2: threshold passes but b^2 * rate >= 1
        auto e3 = make_ex2_3();
        auto cert = certify(CertKind::generalized, e3, 0.3, 0.04);
        CHECK(cert.valid);
        CHECK_FALSE(cert.tail_bound_applies());
        auto tr = picard(e3, make_scale_map(0.0), sp(3), cert, 1e-10, 100);
        CHECK(tr.heuristic_stop);
        CHECK(!tr.warning.empty());
        CHECK(tr.termination == Termination::converged);
    }
    SUBCASE("eps and max_iters validation") {
        CHECK_THROWS_AS(
            (void)picard(m, make_scale_map(0.5), sp(1), ContractionCertificate{}, 0.0, 10),
            std::invalid_argument);
        CHECK_THROWS_AS(
            (void)picard(m, make_scale_map(0.5), sp(1), ContractionCertificate{}, 1e-10, 0),
            std::invalid_argument);
    }
}

TEST_CASE("uniqueness probe: distinct starts land on the same fixed point") {
    auto m = make_ex2_1();
    auto cert = certify(CertKind::banach, m, 1.0 / 18.0);
    auto map = make_scale_map(1.0 / 6.0);
    const double eps = 1e-12;
    auto a = picard(m, map, sp(1), cert, eps, 10000);
    auto b = picard(m, map, sp(-3), cert, eps, 10000);
    REQUIRE(a.fixed_point.has_value());
    REQUIRE(b.fixed_point.has_value());
    CHECK(m(*a.fixed_point, *a.fixed_point, *b.fixed_point) <= 2 * eps);
    CHECK(coord_distance_inf(*a.fixed_point, *b.fixed_point) <= 2e-12);
}

TEST_CASE("verify_fixed_point") {
    auto m = make_ex2_1();
    CHECK(verify_fixed_point(m, make_scale_map(1.0 / 6.0), sp(0), 0.0));
    CHECK_FALSE(verify_fixed_point(m, make_scale_map(1.0 / 6.0), sp(1), 1e-6));
}

TEST_CASE("trace serialization is stable") {
    auto m = make_ex2_1();
    auto cert = certify(CertKind::banach, m, 1.0 / 18.0);
    auto t1 = picard(m, make_scale_map(1.0 / 6.0), sp(1), cert, 1e-12, 10000);
    auto t2 = picard(m, make_scale_map(1.0 / 6.0), sp(1), cert, 1e-12, 10000);
    CHECK(t1.to_text() == t2.to_text());
    CHECK(t1.to_text().find("termination=CONVERGED") != std::string::npos);
    CHECK(t1.bound_values.size() == t1.step_distances.size());
}
