// Copyright 2026 The bellgames Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Microbenchmarks for the hot paths: exhaustive profile enumeration, the
// Born rule, the Hermitian eigensolver, and one full see-saw restart.

#include <benchmark/benchmark.h>

#include "bellgames/bell.hpp"
#include "bellgames/complex_matrix.hpp"
#include "bellgames/game.hpp"
#include "bellgames/quantum.hpp"
#include "bellgames/rng.hpp"
#include "bellgames/seesaw.hpp"

namespace {

using namespace bellgames;

void bm_enumerate_profiles(benchmark::State& state) {
  const GameSpec game =
      builtin_game(state.range(0) == 0 ? "game1" : state.range(0) == 1 ? "game2" : "game3");
  for (auto _ : state) {
    benchmark::DoNotOptimize(enumerate_profiles(game));
  }
}
BENCHMARK(bm_enumerate_profiles)->Arg(0)->Arg(1)->Arg(2);

void bm_classical_optimum(benchmark::State& state) {
  const GameSpec game = builtin_game("game2");
  for (auto _ : state) {
    benchmark::DoNotOptimize(classical_optimum(game));
  }
}
BENCHMARK(bm_classical_optimum);

void bm_born_rule(benchmark::State& state) {
  const QuantumStrategy strategy =
      builtin_strategy(state.range(0) == 2 ? "game1" : "game2");
  for (auto _ : state) {
    benchmark::DoNotOptimize(behavior_from_quantum(strategy));
  }
}
BENCHMARK(bm_born_rule)->Arg(2)->Arg(3);

void bm_eigensystem(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  SplitMix64 rng(0xbe9c5ULL + static_cast<std::uint64_t>(n));
  ComplexMatrix a(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      const Complex v(rng.next_gaussian(), i == j ? 0.0 : rng.next_gaussian());
      a.at(i, j) = v;
      a.at(j, i) = std::conj(v);
    }
  }
  for (auto _ : state) {
    benchmark::DoNotOptimize(hermitian_eigensystem(a));
  }
}
BENCHMARK(bm_eigensystem)->Arg(4)->Arg(9)->Arg(16);

void bm_seesaw_restart(benchmark::State& state) {
  const BellFunctional f = builtin_functional("chsh");
  SeesawConfig cfg;
  cfg.restarts = 1;
  cfg.seed = 7;
  for (auto _ : state) {
    benchmark::DoNotOptimize(seesaw(f, cfg));
  }
}
BENCHMARK(bm_seesaw_restart);

void bm_measurement_update(benchmark::State& state) {
  const BellFunctional f = builtin_functional("collins3");
  const QuantumStrategy strategy = builtin_strategy("game2");
  for (auto _ : state) {
    benchmark::DoNotOptimize(measurement_update(f, strategy, Player::alice, 0));
  }
}
BENCHMARK(bm_measurement_update);

}  // namespace

BENCHMARK_MAIN();
