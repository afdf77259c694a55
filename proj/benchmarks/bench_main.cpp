// Copyright 2026 The ckpfock Authors
// SPDX-License-Identifier: Apache-2.0

#include <benchmark/benchmark.h>

#include "ckp/characters.hpp"
#include "ckp/heisenberg.hpp"
#include "ckp/hirota.hpp"
#include "ckp/hwv.hpp"
#include "ckp/modes.hpp"

namespace {

using namespace ckp;

void BM_ModeApply(benchmark::State& state) {
  int64_t d2 = state.range(0);
  FockVector v;
  for (const auto& m : monomials_of_degree(d2)) v.add_term(m, Rat(1));
  for (auto _ : state) {
    benchmark::DoNotOptimize(apply_mode(HalfOdd(1), v));
    benchmark::DoNotOptimize(apply_mode(HalfOdd(-3), v));
  }
}
BENCHMARK(BM_ModeApply)->Arg(12)->Arg(20)->Arg(28);

void BM_TwistedGrading(benchmark::State& state) {
  int64_t d2 = state.range(0);
  FockVector v;
  for (const auto& m : monomials_of_degree(d2)) v.add_term(m, Rat(1));
  for (auto _ : state) benchmark::DoNotOptimize(grade_Lt0(v));
}
BENCHMARK(BM_TwistedGrading)->Arg(10)->Arg(16);

void BM_HwvSolver(benchmark::State& state) {
  int64_t d2 = state.range(0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(hwv_basis(Algebra::untwisted, d2));
    benchmark::DoNotOptimize(hwv_basis(Algebra::twisted, d2));
  }
}
BENCHMARK(BM_HwvSolver)->Arg(13)->Arg(20)->Unit(benchmark::kMillisecond);

void BM_CharProduct(benchmark::State& state) {
  int64_t N = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(char_fock_product(N));
}
BENCHMARK(BM_CharProduct)->Arg(24)->Arg(40)->Unit(benchmark::kMillisecond);

void BM_HirotaScanDegree(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(no_solution_scan(state.range(0), 10, 99));
}
BENCHMARK(BM_HirotaScanDegree)->Arg(8)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
