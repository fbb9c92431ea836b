// Serial reference kernels against their OpenMP counterparts.

#include <benchmark/benchmark.h>

#include "zekit/codesearch.hpp"
#include "zekit/klcodes.hpp"
#include "zekit/observables.hpp"
#include "zekit/opsys.hpp"

using namespace zekit;

namespace {

Exec exec_of(const benchmark::State& state) { return state.range(0) == 0 ? Exec::serial : Exec::parallel; }

const OperatorSystem& pair_system() {
  static const OperatorSystem s = tensor_systems(make_N_theta(Angle(1, 3)), make_N_theta(Angle(1, 6)));
  return s;
}

const OperatorSystem& triple_system() {
  static const OperatorSystem s = [] {
    const OperatorSystem f[] = {make_N_theta(Angle(1, 3)), make_N_theta(Angle(1, 3)), make_N_theta(Angle(1, 3))};
    return tensor_systems(f);
  }();
  return s;
}

void BM_SearchPair(benchmark::State& state) {
  SearchOptions o;
  o.restarts = 8;
  o.exec = exec_of(state);
  for (auto _ : state) benchmark::DoNotOptimize(search_code(pair_system(), o).objective_min);
}

void BM_VerifyTripartite(benchmark::State& state) {
  const auto code = theorem_B_code(3);
  for (auto _ : state) benchmark::DoNotOptimize(verify_code(triple_system(), code, 1e-9, exec_of(state)).pass);
}

void BM_Indistinguishable(benchmark::State& state) {
  const Observable f[] = {positive_basis(make_N_theta(Angle(1, 3))), positive_basis(make_N_theta(Angle(1, 3))),
                          positive_basis(make_N_theta(Angle(1, 3)))};
  const Observable obs = tensor_observables(f);
  const auto code = theorem_B_code(3);
  for (auto _ : state)
    benchmark::DoNotOptimize(indistinguishable_check(obs, code, 1e-9, 1000, 7, exec_of(state)).tv_spread);
}

}  // namespace

// Argument 0 = serial reference, 1 = OpenMP.
BENCHMARK(BM_SearchPair)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_VerifyTripartite)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Indistinguishable)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
