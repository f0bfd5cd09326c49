#include <benchmark/benchmark.h>

#include <random>

#include "sbmetric/axiom.hpp"
#include "sbmetric/catalog.hpp"
#include "sbmetric/fixpoint.hpp"
#include "sbmetric/linsys.hpp"

using namespace sbm;

namespace {

double uniform(std::mt19937_64& rng, double lo, double hi) {
    return lo + (static_cast<double>(rng() >> 11) * 0x1.0p-53) * (hi - lo);
}

void BM_EvalEx21(benchmark::State& state) {
    auto m = make_ex2_1();
    Point x = Point::scalar(4), y = Point::scalar(6), z = Point::scalar(8);
    for (auto _ : state) benchmark::DoNotOptimize(m(x, y, z));
}
BENCHMARK(BM_EvalEx21);

void BM_EvalS1(benchmark::State& state) {
    auto n = static_cast<std::size_t>(state.range(0));
    auto m = make_s1(n);
    std::mt19937_64 rng(1);
    std::vector<double> a(n), b(n), c(n);
    for (std::size_t i = 0; i < n; ++i) {
        a[i] = uniform(rng, -5, 5);
        b[i] = uniform(rng, -5, 5);
        c[i] = uniform(rng, -5, 5);
    }
    Point x = Point::real(a), y = Point::real(b), z = Point::real(c);
    for (auto _ : state) benchmark::DoNotOptimize(m(x, y, z));
}
BENCHMARK(BM_EvalS1)->Arg(4)->Arg(64);

void BM_CheckSbFamily(benchmark::State& state) {
    auto m = make_ex2_1();
    SamplerConfig cfg;
    cfg.grid = {GridRange{-4, 4, 1}};
    cfg.random_count = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) {
        auto rep = check_axioms(Family::sb_metric, m, cfg);
        benchmark::DoNotOptimize(rep.samples_evaluated());
    }
}
BENCHMARK(BM_CheckSbFamily)->Arg(0)->Arg(1000);

void BM_PicardScale(benchmark::State& state) {
    auto m = make_ex2_1();
    auto map = make_scale_map(1.0 / 6.0);
    auto cert = certify(CertKind::banach, m, 1.0 / 18.0);
    Point x0 = Point::scalar(1);
    for (auto _ : state) {
        auto tr = picard(m, map, x0, cert, 1e-12, 1000);
        benchmark::DoNotOptimize(tr.iterations);
    }
}
BENCHMARK(BM_PicardScale);

void BM_SolveIterative(benchmark::State& state) {
    auto n = static_cast<std::size_t>(state.range(0));
    std::mt19937_64 rng(3);
    Matrix a(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a.at(i, j) = uniform(rng, -1, 1);
    double scale = 0.8 / column_sum_norm(a);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a.at(i, j) *= scale;
    std::vector<double> rhs(n);
    for (auto& v : rhs) v = uniform(rng, -5, 5);
    auto sys = make_system(a, rhs);
    for (auto _ : state) {
        auto res = solve_iterative(sys, 1e-10);
        benchmark::DoNotOptimize(res.solution.data());
    }
}
BENCHMARK(BM_SolveIterative)->Arg(8)->Arg(32);

void BM_DirectSolve(benchmark::State& state) {
    auto n = static_cast<std::size_t>(state.range(0));
    std::mt19937_64 rng(3);
    Matrix c(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) c.at(i, j) = uniform(rng, -1, 1) + (i == j ? 4.0 : 0.0);
    std::vector<double> d(n);
    for (auto& v : d) v = uniform(rng, -5, 5);
    for (auto _ : state) {
        auto x = direct_solve(c, d);
        benchmark::DoNotOptimize(x.data());
    }
}
BENCHMARK(BM_DirectSolve)->Arg(8)->Arg(32);

}  // namespace

BENCHMARK_MAIN();
