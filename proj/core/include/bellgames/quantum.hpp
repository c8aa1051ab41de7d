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

#include <string_view>
#include <vector>

#include "bellgames/complex_matrix.hpp"
#include "bellgames/game.hpp"

namespace bellgames {

/// Bipartite pure state on C^dA (x) C^dB; amplitude index is a*dB + b.
/// Unit norm within 1e-12.
class StateVector {
 public:
  StateVector(int dim_a, int dim_b, ComplexVector amplitudes);

  int dim_a, dim_b;
  ComplexVector amp;
};

/// Rank-1 projective measurement: an orthonormal basis, outcome k projecting
/// onto basis[k]. Unit norms within 1e-12, pairwise overlaps below 1e-10.
class ProjectiveMeasurement {
 public:
  explicit ProjectiveMeasurement(std::vector<ComplexVector> basis);

  int dim;
  std::vector<ComplexVector> basis;
};

/// Shared state plus one projective measurement per input per player.
struct QuantumStrategy {
  StateVector state;
  std::vector<ProjectiveMeasurement> alice;  // indexed by Alice's input
  std::vector<ProjectiveMeasurement> bob;
};

/// (1/sqrt(d)) sum_k |kk>. Requires d >= 2.
StateVector max_entangled_state(int d);

/// Real-plane qubit basis {(cos t, sin t), (-sin t, cos t)}.
ProjectiveMeasurement planar_qubit_measurement(double theta);

/// Born rule: P(k,l|i,j) = |<alpha^i_k (x) beta^j_l | state>|^2, with
/// dimensions taken from the strategy itself (na = dA, nb = dB).
Behavior behavior_from_quantum(const QuantumStrategy& strategy);

/// Same, validated against the game's input/output counts.
Behavior behavior_from_quantum(const GameSpec& game, const QuantumStrategy& strategy);

/// Frozen optimal strategies for the builtin games. game1 and game3 use the
/// maximally entangled qubit pair with real-plane bases; game2 uses the
/// maximally entangled qutrit pair with phased discrete-Fourier bases.
QuantumStrategy builtin_strategy(std::string_view name);

}  // namespace bellgames
