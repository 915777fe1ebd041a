// Microbenchmarks for the hot algorithmic paths: exact linear algebra,
// orbit machinery, tensor products and the Borel pipeline.

#include <benchmark/benchmark.h>

#include <gpd/bibundle.hpp>
#include <gpd/homotopy.hpp>
#include <gpd/intmat.hpp>

#include <random>

namespace {

using namespace gpd;

IntMatrix random_matrix(std::mt19937 &rng, int n, int bound) {
  std::uniform_int_distribution<int> entry(-bound, bound);
  IntMatrix a(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a.at(i, j) = entry(rng);
  return a;
}

void BM_smith_normal_form(benchmark::State &state) {
  std::mt19937 rng(1);
  IntMatrix a = random_matrix(rng, static_cast<int>(state.range(0)), 20);
  for (auto _ : state) benchmark::DoNotOptimize(smith_normal_form(a));
}
BENCHMARK(BM_smith_normal_form)->Arg(4)->Arg(8)->Arg(16);

void BM_orbits_pair_groupoid(benchmark::State &state) {
  FiniteGroupoid g = pair_groupoid(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(orbits(g));
}
BENCHMARK(BM_orbits_pair_groupoid)->Arg(16)->Arg(32);

void BM_tensor_unit(benchmark::State &state) {
  GroupoidRef s3 = make_groupoid(group_as_groupoid(symmetric_group(3)));
  Bibundle p = unit_bundle(s3);
  for (auto _ : state) benchmark::DoNotOptimize(tensor(p, p));
}
BENCHMARK(BM_tensor_unit);

void BM_hom_count(benchmark::State &state) {
  GroupPresentation klein(2, {{1, 2, 1, -2}});
  FiniteGroup s4 = symmetric_group(4);
  for (auto _ : state) benchmark::DoNotOptimize(hom_count(klein, s4));
}
BENCHMARK(BM_hom_count);

void BM_borel_pi1(benchmark::State &state) {
  ComplexAction a;
  a.group = cyclic_group(2);
  a.complex = cycle_complex(6);
  a.vertex_act = {0, 1, 2, 3, 4, 5, 3, 4, 5, 0, 1, 2};
  for (auto _ : state) benchmark::DoNotOptimize(borel_pi1(a, 0));
}
BENCHMARK(BM_borel_pi1);

void BM_pi1_nerve(benchmark::State &state) {
  FiniteGroupoid g =
      product_groupoid(group_as_groupoid(symmetric_group(3)), pair_groupoid(3));
  for (auto _ : state) benchmark::DoNotOptimize(pi1_nerve(g, 0));
}
BENCHMARK(BM_pi1_nerve);

}  // namespace

BENCHMARK_MAIN();
