// Copyright 2026 The bellgames Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <vector>

#include "bellgames/bell.hpp"
#include "bellgames/quantum.hpp"

namespace bellgames {

struct SeesawConfig {
  int dim = 2;             // local Hilbert dimension, 2..4
  int restarts = 20;       // even restarts seed from the maximally entangled state
  int max_iters = 500;     // full (Alice, Bob, state) rounds per restart
  double tol = 1e-10;      // stop once the objective improves by less
  std::uint64_t seed = 1;  // restart r draws from stream split_stream(seed, r)
  int jobs = 1;            // worker threads; results are independent of this
};

struct SeesawResult {
  double best_value = 0.0;
  QuantumStrategy best_strategy;
  std::vector<double> trace;          // per-iteration objective of the winning restart
  bool converged = false;             // winning restart stopped on tol, not max_iters
  std::vector<double> restart_values; // final objective per restart
};

/// Maximize a Bell functional over quantum strategies of local dimension
/// cfg.dim by alternating optimization: improving-only measurement updates
/// for each input of each player, then an exact state update (principal
/// eigenvector of the fixed-measurement game operator). Deterministic for a
/// given (functional, config) regardless of cfg.jobs.
SeesawResult seesaw(const BellFunctional& f, const SeesawConfig& cfg);

/// One see-saw half-step: a new basis for the given player/input whose
/// substitution does not decrease evaluate(f, .). Binary-outcome settings use
/// the exact split through the eigenspaces of the effective operator
/// difference; larger settings cycle exact two-index rotations to a fixed
/// point of improving moves.
ProjectiveMeasurement measurement_update(const BellFunctional& f,
                                         const QuantumStrategy& strategy,
                                         Player player, int input);

/// Exact state step for fixed measurements: principal eigenvector of
/// G = sum coeff(x,y,a,b) Proj^x_a (x) Proj^y_b.
StateVector state_update(const BellFunctional& f, const QuantumStrategy& strategy);

/// Best unilateral quantum deviation for one player, with the state and the
/// other player's measurements frozen: re-optimizes the named player's
/// measurements against their own payoff and returns (best deviating payoff
/// - current payoff). Never meaningfully negative; 0 within tolerance means
/// the strategy is a best response.
double best_response_gap(const GameSpec& game, const QuantumStrategy& strategy,
                         Player player);

}  // namespace bellgames
