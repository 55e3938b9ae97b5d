#include <benchmark/benchmark.h>

#include <array>

#include "gti/indicators.hpp"

namespace {

using namespace gti;

GroupPtr make_s3() {
    return group_from_permutations(3, {{1, 0, 2}, {0, 2, 1}});
}

void bench_rep_s3_table(benchmark::State& state) {
    GroupPtr g = make_s3();
    auto data = GroupTheoreticalData::plain(g, Subgroup::full(g));
    TableOptions opts;
    opts.m_max = state.range(0);
    for (auto _ : state) benchmark::DoNotOptimize(full_indicator_table(data, opts));
}
BENCHMARK(bench_rep_s3_table)->Arg(6)->Arg(12);

void bench_double_z4(benchmark::State& state) {
    GroupPtr z4 = FiniteGroup::cyclic(4);
    Cochain omega = Cochain::cyclic_kappa(z4);
    TableOptions opts;
    opts.m_max = state.range(0);
    for (auto _ : state) benchmark::DoNotOptimize(double_indicator_table(z4, omega, opts));
}
BENCHMARK(bench_double_z4)->Arg(4)->Arg(8);

void bench_double_q8_via_general(benchmark::State& state) {
    // quaternion units as permutations of {1,i,-1,-i,j,k,-j,-k} left multiplication
    GroupPtr q8 = group_from_permutations(8, {{1, 2, 3, 0, 5, 6, 7, 4},   // i
                                              {4, 7, 6, 5, 2, 1, 0, 3}}); // j
    DirectProduct prod = direct_product(q8, q8);
    auto data = GroupTheoreticalData::plain(prod.group, diagonal_subgroup(prod));
    TableOptions opts;
    opts.m_max = 2;
    for (auto _ : state) benchmark::DoNotOptimize(full_indicator_table(data, opts));
}
BENCHMARK(bench_double_q8_via_general)->Unit(benchmark::kMillisecond);

void bench_projective_characters(benchmark::State& state) {
    GroupPtr z2 = FiniteGroup::cyclic(2);
    DirectProduct prod = direct_product(z2, z2);
    Subgroup klein = Subgroup::full(prod.group);
    // the bilinear pairing (-1)^{b c} on (a,b),(c,d): the nontrivial class
    Cochain::Table entries;
    for (Elem x : {1, 3})
        for (Elem y : {2, 3}) {
            std::array<Elem, 2> key{x, y};
            entries.emplace(Cochain::pack_key(key), UnitScalar::minus_one());
        }
    Cochain beta = Cochain::from_table(prod.group, 2, std::move(entries));
    for (auto _ : state)
        benchmark::DoNotOptimize(irreducible_projective_characters(klein, beta));
}
BENCHMARK(bench_projective_characters);

} // namespace

BENCHMARK_MAIN();
