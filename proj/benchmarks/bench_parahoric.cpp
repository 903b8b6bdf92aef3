#include "parahoric/family.hpp"
#include "parahoric/induction.hpp"
#include "parahoric/ocsymbol.hpp"
#include "parahoric/slopes.hpp"

#include <benchmark/benchmark.h>

using namespace parahoric;

static void BM_PadicMultiply(benchmark::State& state) {
    const auto a = PadicScalar::from_integer(3, 123456789, 30);
    const auto b = PadicScalar::from_integer(3, 987654321, 30);
    for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_PadicMultiply);

static void BM_HCritGL(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    auto d = RootDatum::gl(n);
    const auto cd = greedy_factorization(ParabolicType::borel(d), 3);
    IntVec lam(n);
    for (int i = 0; i < n; ++i) lam[i] = 2 * (n - i);
    const std::vector<Rational> vals(n - 1, Rational(1));
    for (auto _ : state) benchmark::DoNotOptimize(q_noncritical_verdict(cd, Weight{lam}, vals));
}
BENCHMARK(BM_HCritGL)->DenseRange(2, 6, 2);

static void BM_BggCheckGL3(benchmark::State& state) {
    GLInduction gl3(3);
    auto d = gl3.datum();
    const int deg = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(gl3.bgg_check(ParabolicType::borel(d), ParabolicType(d, {0}), Weight{{2, 1, 0}}, deg));
}
BENCHMARK(BM_BggCheckGL3)->Arg(3)->Arg(5)->Unit(benchmark::kMillisecond);

static void BM_MomentAction(benchmark::State& state) {
    const std::size_t m = static_cast<std::size_t>(state.range(0));
    const SingleWeight w(3, 2);
    Dist<PadicScalar> mu{{}, 0};
    for (std::size_t j = 0; j < m; ++j) mu.moments.push_back(PadicScalar::from_integer(3, j * 7 + 1, 40));
    const Mat2 g{4, 1, 3, 1};
    for (auto _ : state) benchmark::DoNotOptimize(sigma0_action(w, g, mu));
}
BENCHMARK(BM_MomentAction)->Arg(10)->Arg(20)->Arg(40);

static void BM_LiftLevel11(benchmark::State& state) {
    auto mb = std::make_shared<const ManinBasis>(11, 3);
    const auto psi = newform_symbol(11, 0, 3);
    const auto roots = hecke_polynomial_roots(Integer(-1), 3, 0, 40);
    const auto st = p_stabilize(psi, *mb, roots.small);
    LiftOptions opt;
    opt.moments = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(lift_symbol(mb, 0, st, roots.small, opt));
}
BENCHMARK(BM_LiftLevel11)->Arg(10)->Arg(20)->Unit(benchmark::kMillisecond);

static void BM_CharpolyUp(benchmark::State& state) {
    const ManinBasis manin(11, 3);
    const auto M = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(charpoly_up(manin, 0, M, 10));
}
BENCHMARK(BM_CharpolyUp)->Arg(6)->Arg(10)->Unit(benchmark::kMillisecond)->Iterations(1);

static void BM_FamilyCharpoly(benchmark::State& state) {
    const ManinBasis manin(11, 3);
    WeightDiscFamily disc;
    for (auto _ : state) benchmark::DoNotOptimize(family_charpoly(manin, disc, 6, 10));
}
BENCHMARK(BM_FamilyCharpoly)->Unit(benchmark::kMillisecond)->Iterations(1);

BENCHMARK_MAIN();
