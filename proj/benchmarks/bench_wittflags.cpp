#include "wittflags/marks.hpp"
#include "wittflags/repring.hpp"
#include "wittflags/sweep.hpp"
#include "wittflags/tate.hpp"
#include "wittflags/twists.hpp"

#include <benchmark/benchmark.h>

using namespace wittflags;

namespace {

ParabolicSubset parabolic(std::string_view diagram, std::string_view theta) {
  const auto d = DynkinDiagram::parse(diagram);
  return ParabolicSubset(d, parse_node_list(d, theta));
}

void BM_InverseCartan(benchmark::State& state) {
  const ComponentType t{Family::E, 8};
  for (auto _ : state) benchmark::DoNotOptimize(inverse_cartan(t));
}
BENCHMARK(BM_InverseCartan);

void BM_TwistMatrix(benchmark::State& state) {
  const auto p = parabolic("E8", "2,3,4,5,7");
  for (auto _ : state) benchmark::DoNotOptimize(self_dual_twist_matrix(p));
}
BENCHMARK(BM_TwistMatrix);

void BM_RuleMarks(benchmark::State& state) {
  const auto p = parabolic("B8", "2,5,6,7");
  for (auto _ : state) benchmark::DoNotOptimize(span_of_marks(rule_marks(p)));
}
BENCHMARK(BM_RuleMarks);

void BM_HPresentation(benchmark::State& state) {
  const auto r = rep_ring_model(parabolic("D6", "1,3,4,5,6"));
  for (auto _ : state) benchmark::DoNotOptimize(h_presentation(r));
}
BENCHMARK(BM_HPresentation);

void BM_BruteFixedMonomials(benchmark::State& state) {
  const auto r = rep_ring_model(parabolic("D6", "1,3,4,5,6"));
  const IntVector t(r.k_nodes.size(), 0);
  for (auto _ : state) benchmark::DoNotOptimize(brute_fixed_monomials(r, t, 4, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_BruteFixedMonomials)->Arg(2)->Arg(6);

void BM_MarksSweep(benchmark::State& state) {
  SweepOptions o;
  o.max_rank = static_cast<int>(state.range(0));
  o.presentations = false;
  for (auto _ : state) benchmark::DoNotOptimize(sweep(o));
}
BENCHMARK(BM_MarksSweep)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_K0Model(benchmark::State& state) {
  const auto p = state.range(0) == 0 ? parabolic("A4", "2,3,4") : parabolic("A3", "1,3");
  for (auto _ : state) benchmark::DoNotOptimize(k0_model(p));
}
BENCHMARK(BM_K0Model)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_TateDims(benchmark::State& state) {
  const auto model = k0_model(parabolic("A3", "1,3"));
  const auto unit = model.twist_unit({1});
  for (auto _ : state) benchmark::DoNotOptimize(tate_dims(model.module, unit));
}
BENCHMARK(BM_TateDims);

}  // namespace

BENCHMARK_MAIN();
