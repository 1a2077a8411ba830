#include <benchmark/benchmark.h>

#include "hyperkalman/enumerate.hpp"
#include "hyperkalman/fixtures.hpp"
#include "hyperkalman/functors.hpp"
#include "hyperkalman/semantics.hpp"

using namespace hyperkalman;

static void BM_BuildHyperSwap(benchmark::State& state) {
  Hyperalgebra base = fixtures::ch3();
  for (auto _ : state)
    benchmark::DoNotOptimize(build_hyper_swap(base, Variant::Cw));
}
BENCHMARK(BM_BuildHyperSwap);

static void BM_EnumerateIHL(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(enumerate_structures(Kind::IHL, state.range(0)));
}
BENCHMARK(BM_EnumerateIHL)->Arg(3)->Arg(4);

static void BM_SchemaBattery(benchmark::State& state) {
  Hyperalgebra m = build_hyper_swap(fixtures::ch3(), Variant::Cw).algebra;
  for (auto _ : state) {
    Budget budget{1'000'000'000ull};
    for (const AxiomSchema* schema : system_schemas(System::Cw))
      benchmark::DoNotOptimize(schema_valid(m, *schema, budget));
  }
}
BENCHMARK(BM_SchemaBattery);

static void BM_DecideParaconsistency(benchmark::State& state) {
  Hyperalgebra m = build_hyper_swap(fixtures::ch3(), Variant::Cw).algebra;
  Formula p = Formula::var("p"), q = Formula::var("q");
  std::vector<Formula> gamma = {p, Formula::negate(p)};
  for (auto _ : state) {
    Budget budget{1'000'000'000ull};
    benchmark::DoNotOptimize(decide_consequence(m, gamma, q, budget));
  }
}
BENCHMARK(BM_DecideParaconsistency);

static void BM_RoundTripEquivalence(benchmark::State& state) {
  Hyperalgebra base = fixtures::eq3();
  for (auto _ : state) {
    Morphism iso = phi(base);
    benchmark::DoNotOptimize(verify_isomorphism(iso));
  }
}
BENCHMARK(BM_RoundTripEquivalence);

BENCHMARK_MAIN();
