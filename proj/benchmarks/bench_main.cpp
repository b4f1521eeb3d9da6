#include <benchmark/benchmark.h>

#include "excoll/diophantine.hpp"
#include "excoll/enumeration.hpp"
#include "excoll/mutation.hpp"
#include "excoll/pair_table.hpp"

using namespace excoll;

namespace {

VarietyTag tag_of(const benchmark::State& state) { return kAllVarieties[static_cast<std::size_t>(state.range(0))]; }

void BM_EulerChar(benchmark::State& state) {
  const auto& m = variety_model(tag_of(state));
  for (auto _ : state) {
    Coeff sum = 0;
    for (Coeff a = -30; a <= 30; ++a)
      for (Coeff b = -30; b <= 30; ++b) sum += euler_char(m, {a, b});
    benchmark::DoNotOptimize(sum);
  }
  state.SetItemsProcessed(state.iterations() * 61 * 61);
}
BENCHMARK(BM_EulerChar)->DenseRange(0, 2);

void BM_CohZero(benchmark::State& state) {
  const auto& m = variety_model(tag_of(state));
  for (auto _ : state) {
    int zero = 0;
    for (Coeff a = -30; a <= 30; ++a)
      for (Coeff b = -30; b <= 30; ++b) zero += coh_zero(m, {a, b}) == Verdict::Zero;
    benchmark::DoNotOptimize(zero);
  }
  state.SetItemsProcessed(state.iterations() * 61 * 61);
}
BENCHMARK(BM_CohZero)->DenseRange(0, 2);

void BM_Enumerate(benchmark::State& state) {
  const auto tag = tag_of(state);
  const Coeff window = state.range(1);
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_collections(tag, window));
}
BENCHMARK(BM_Enumerate)->ArgsProduct({{0, 1, 2}, {15, 30}})->UseRealTime()->Unit(benchmark::kMillisecond);

void BM_PairTable(benchmark::State& state) {
  const auto tag = tag_of(state);
  for (auto _ : state) benchmark::DoNotOptimize(pair_table(tag, 15));
}
BENCHMARK(BM_PairTable)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);

void BM_ConicTriples(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(solve_conic_triples(state.range(0)));
}
BENCHMARK(BM_ConicTriples)->Arg(50)->Arg(200)->Unit(benchmark::kMillisecond);

void BM_Relations(benchmark::State& state) {
  const auto tag = tag_of(state);
  for (auto _ : state) benchmark::DoNotOptimize(verify_mutation_relations(tag, 5));
}
BENCHMARK(BM_Relations)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
