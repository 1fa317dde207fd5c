#include <benchmark/benchmark.h>

#include <numeric>
#include <random>

#include "qf/families.hpp"
#include "qf/iso.hpp"
#include "qf/search.hpp"
#include "qf/structure.hpp"

namespace {

using namespace qf;

void BM_VerifyOrder6(benchmark::State& state) {
  const Quandle q = q62();
  const std::vector<Permutation> mus(q.permutations().begin(), q.permutations().end());
  for (auto _ : state) benchmark::DoNotOptimize(Quandle::verify(mus));
}
BENCHMARK(BM_VerifyOrder6);

void BM_TableAxiomsOrder6(benchmark::State& state) {
  const Table table = q62().table();
  for (auto _ : state) benchmark::DoNotOptimize(table_axiom_violations(table));
}
BENCHMARK(BM_TableAxiomsOrder6);

void BM_Connectivity(benchmark::State& state) {
  const Quandle q = q62();
  for (auto _ : state) benchmark::DoNotOptimize(connectivity(q));
}
BENCHMARK(BM_Connectivity);

void BM_FindIsoRelabeled(benchmark::State& state) {
  const Quandle q = q62();
  std::mt19937 rng(5);
  std::vector<int> images(6);
  std::iota(images.begin(), images.end(), 1);
  std::shuffle(images.begin(), images.end(), rng);
  const Quandle moved = relabel(q, Permutation(images));
  for (auto _ : state) benchmark::DoNotOptimize(find_isomorphism(q, moved));
}
BENCHMARK(BM_FindIsoRelabeled);

void BM_EnumerateStructured62(benchmark::State& state) {
  SearchParams params;
  params.n = 6;
  params.f = 2;
  params.mode = SearchMode::Structured;
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_quandles(params));
}
BENCHMARK(BM_EnumerateStructured62);

void BM_EnumerateGeneral53(benchmark::State& state) {
  SearchParams params;
  params.n = 5;
  params.f = 3;
  params.mode = SearchMode::General;
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_quandles(params));
}
BENCHMARK(BM_EnumerateGeneral53);

void BM_BruteForceOracle42(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(brute_force_oracle(4, 2));
}
BENCHMARK(BM_BruteForceOracle42);

}  // namespace

BENCHMARK_MAIN();
