#include <benchmark/benchmark.h>

#include <random>

#include "msrlab/analysis.hpp"
#include "msrlab/bounds.hpp"
#include "msrlab/combinatorics.hpp"
#include "msrlab/construction.hpp"
#include "msrlab/search.hpp"

namespace msrlab {
namespace {

Matrix random_matrix(const FieldPtr& f, std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  Matrix m(f, n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) m(r, c) = static_cast<Elem>(rng() % f->order());
  return m;
}

void BM_RrefPrime(benchmark::State& state) {
  const auto m = random_matrix(Field::make(13), static_cast<std::size_t>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(rref(m));
}
BENCHMARK(BM_RrefPrime)->Arg(8)->Arg(32)->Arg(128);

void BM_RrefExtension(benchmark::State& state) {
  const auto m = random_matrix(Field::make(2, 8, find_irreducible(2, 8)), static_cast<std::size_t>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(rref(m));
}
BENCHMARK(BM_RrefExtension)->Arg(8)->Arg(32)->Arg(128);

void BM_MdsCheckCoupled(benchmark::State& state) {
  const auto b = build_coupled_example(Field::make(13), {.seed = 1});
  for (auto _ : state) benchmark::DoNotOptimize(mds_check(b.spec));
}
BENCHMARK(BM_MdsCheckCoupled);

void BM_BuildCase2(benchmark::State& state) {
  const auto f = Field::make(13);
  for (auto _ : state) benchmark::DoNotOptimize(build_case2(7, 3, 4, f, {.seed = 1}));
}
BENCHMARK(BM_BuildCase2);

void BM_BuildCoupled(benchmark::State& state) {
  const auto f = Field::make(13);
  for (auto _ : state) benchmark::DoNotOptimize(build_coupled_example(f, {.seed = 1}));
}
BENCHMARK(BM_BuildCoupled);

void BM_BuildCase1(benchmark::State& state) {
  const auto f = Field::make(17);
  for (auto _ : state) benchmark::DoNotOptimize(build_case1(7, 4, 5, f, {.seed = 1}));
}
BENCHMARK(BM_BuildCase1);

void BM_RepairSweepCoupled(benchmark::State& state) {
  const auto b = build_coupled_example(Field::make(13), {.seed = 1});
  for (auto _ : state) benchmark::DoNotOptimize(repair_sweep(b.spec, b.scheme));
}
BENCHMARK(BM_RepairSweepCoupled);

void BM_SearchRandomMds(benchmark::State& state) {
  const auto spec = random_mds_code(5, 3, 4, 2, Field::make(7), 1);
  for (auto _ : state) benchmark::DoNotOptimize(exhaustive_search({spec, iota_nodes(5)}));
}
BENCHMARK(BM_SearchRandomMds);

void BM_SearchCoupled(benchmark::State& state) {
  const auto b = build_coupled_example(Field::make(13), {.seed = 1});
  for (auto _ : state) benchmark::DoNotOptimize(exhaustive_search({b.spec, {0, 1, 2}}));
}
BENCHMARK(BM_SearchCoupled)->Unit(benchmark::kMillisecond);

void BM_ProofAuditCoupled(benchmark::State& state) {
  const auto b = build_coupled_example(Field::make(13), {.seed = 1});
  for (auto _ : state) benchmark::DoNotOptimize(proof_audit(b.spec, b.scheme, 3));
}
BENCHMARK(BM_ProofAuditCoupled);

void BM_BoundLarge(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(bound({BoundMode::MsrAllNode, 150, 148, 149, std::nullopt}));
}
BENCHMARK(BM_BoundLarge);

}  // namespace
}  // namespace msrlab

BENCHMARK_MAIN();
