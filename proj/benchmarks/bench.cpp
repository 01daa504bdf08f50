#include <benchmark/benchmark.h>

#include "aont/constructions.hpp"
#include "aont/equivalence.hpp"
#include "aont/search.hpp"
#include "aont/transforms.hpp"

using namespace aont;

static void BM_FieldMul(benchmark::State& state) {
  const auto f = Field::parse("256");
  unsigned acc = 1;
  for (auto _ : state) {
    for (unsigned a = 1; a < 256; ++a) acc = f->mul(Element{a}, Element{acc | 1U}).code;
    benchmark::DoNotOptimize(acc);
  }
  state.SetItemsProcessed(state.iterations() * 255);
}
BENCHMARK(BM_FieldMul);

static void BM_Determinant(benchmark::State& state) {
  const auto m = cauchy(Field::parse("256"), static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(determinant(m));
}
BENCHMARK(BM_Determinant)->Arg(8)->Arg(32)->Arg(64);

static void BM_VerifyLinear(benchmark::State& state) {
  const auto m = cauchy(Field::make(13, 1), 6);
  const int t = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(is_linear_aont(m, t));
}
BENCHMARK(BM_VerifyLinear)->DenseRange(1, 6);

static void BM_VerifyGeneral(benchmark::State& state) {
  const auto phi = linear_to_general(builtin_example("E3"));
  for (auto _ : state) benchmark::DoNotOptimize(verify_general_aont(phi, 2).valid);
}
BENCHMARK(BM_VerifyGeneral);

static void BM_SearchReduced(benchmark::State& state) {
  const auto f = Field::make(static_cast<unsigned>(state.range(0)), 1);
  for (auto _ : state) {
    const auto r = search_reduced(f);
    state.counters["nodes"] = static_cast<double>(r.nodes_visited);
    benchmark::DoNotOptimize(r.count);
  }
}
BENCHMARK(BM_SearchReduced)->Arg(5)->Arg(7)->Unit(benchmark::kMillisecond);

static void BM_Classify(benchmark::State& state) {
  const auto found = search_reduced(Field::make(7, 1)).matrices;
  for (auto _ : state) benchmark::DoNotOptimize(classify(found).classes.size());
}
BENCHMARK(BM_Classify)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
