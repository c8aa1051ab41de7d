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

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bellgames/game.hpp"
#include "bellgames/rational.hpp"

namespace bellgames {

/// Linear functional on behaviors: sum coeff(x,y,a,b) * P(a,b|x,y) plus a
/// constant offset. Payoff sums and Bell expressions are both instances; the
/// offset makes correlator-form inequalities convert exactly.
class BellFunctional {
 public:
  BellFunctional(std::string name, int nx, int ny, int na, int nb,
                 std::vector<Rational> coeff, Rational constant_offset = Rational(0),
                 std::optional<Rational> claimed_classical_bound = std::nullopt);

  std::string name;
  int nx, ny, na, nb;
  std::vector<Rational> coeff;  // nx*ny*na*nb, row-major in (x,y,a,b)
  Rational constant_offset;
  std::optional<Rational> claimed_classical_bound;

  std::size_t index(int x, int y, int a, int b) const {
    return ((static_cast<std::size_t>(x) * ny + y) * na + a) * nb + b;
  }
  const Rational& at(int x, int y, int a, int b) const {
    return coeff[index(x, y, a, b)];
  }
};

double evaluate(const BellFunctional& f, const Behavior& behavior);

/// Rational evaluation; requires a behavior carrying its exact table.
Rational evaluate_exact(const BellFunctional& f, const Behavior& behavior);

/// Value on the deterministic behavior of a profile, exactly.
Rational evaluate_on_profile(const BellFunctional& f, const PureProfile& profile);

/// P00 + P11 - P01 - P10 for the setting pair (x, y); binary outcomes only.
double correlator(const Behavior& behavior, int x, int y);

/// Max over all deterministic profiles, exact. When the functional claims a
/// classical bound, a mismatch raises IntegrityError.
Rational classical_bound_bruteforce(const BellFunctional& f);

/// coeff = prior * (wa * payA + wb * payB); evaluating the result on any
/// behavior equals wa*$_A + wb*$_B.
BellFunctional functional_from_game(const GameSpec& game, const Rational& weight_a,
                                    const Rational& weight_b);

/// "cereceda1", "cereceda2", "collins3", "chained3", "chsh" with claimed
/// classical bounds 1, 1, 3, 4, 2.
BellFunctional builtin_functional(std::string_view name);
const std::vector<std::string>& builtin_functional_names();

}  // namespace bellgames
