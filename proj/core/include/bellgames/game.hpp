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

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bellgames/rational.hpp"

namespace bellgames {

// Hard cap on exhaustive enumeration: na^nx * nb^ny deterministic profiles.
inline constexpr long long kEnumerationCap = 1'000'000;

enum class Player { alice, bob };

/// Two-player Bayesian game: each player receives a private input drawn from
/// a common prior and answers with an output; payoffs depend on the joint
/// inputs and outputs. Inputs and outputs are 0-based internally; files and
/// display use 1-based inputs, 0-based outputs.
class GameSpec {
 public:
  GameSpec(std::string name, int nx, int ny, int na, int nb,
           std::vector<Rational> prior, std::vector<Rational> pay_a,
           std::vector<Rational> pay_b);

  std::string name;
  int nx, ny, na, nb;
  std::vector<Rational> prior;  // nx*ny entries, row-major in (x, y)
  std::vector<Rational> pay_a;  // nx*ny*na*nb entries, row-major in (x,y,a,b)
  std::vector<Rational> pay_b;

  std::size_t prior_index(int x, int y) const {
    return static_cast<std::size_t>(x) * ny + y;
  }
  std::size_t pay_index(int x, int y, int a, int b) const {
    return ((static_cast<std::size_t>(x) * ny + y) * na + a) * nb + b;
  }
  const Rational& prior_at(int x, int y) const { return prior[prior_index(x, y)]; }
  const Rational& pay_a_at(int x, int y, int a, int b) const {
    return pay_a[pay_index(x, y, a, b)];
  }
  const Rational& pay_b_at(int x, int y, int a, int b) const {
    return pay_b[pay_index(x, y, a, b)];
  }
};

/// Deterministic strategy pair: a full input->output map per player.
struct PureProfile {
  std::vector<int> alice;  // x -> a
  std::vector<int> bob;    // y -> b

  /// Concatenated output digits, Alice first ("0100", "000001").
  std::string str() const;
  /// Inverse of str() for single-digit outputs.
  static PureProfile parse(std::string_view text, int nx, int ny);

  auto operator<=>(const PureProfile&) const = default;
};

/// Common advice: a probability mix over deterministic profiles, sampled by
/// an arbitrator before inputs are dealt.
class AdviceDistribution {
 public:
  /// Validates weights >= 0 and an exact rational sum of 1.
  explicit AdviceDistribution(std::vector<std::pair<PureProfile, Rational>> weights);

  std::vector<std::pair<PureProfile, Rational>> weights;
};

/// Conditional probability table P(a,b|x,y) — the common currency of
/// classical and quantum play. Entries are clamped to [0,1] at construction
/// (inputs may stray by at most 1e-12) and each setting pair must be
/// normalized within 1e-12. Classical constructions also carry the exact
/// rational table so downstream arithmetic stays exact.
class Behavior {
 public:
  Behavior(int nx, int ny, int na, int nb, std::vector<double> probs,
           std::optional<std::vector<Rational>> exact = std::nullopt);

  int nx, ny, na, nb;
  std::vector<double> probs;                   // nx*ny*na*nb, row-major
  std::optional<std::vector<Rational>> exact;  // set on classical paths

  std::size_t index(int x, int y, int a, int b) const {
    return ((static_cast<std::size_t>(x) * ny + y) * na + a) * nb + b;
  }
  double at(int x, int y, int a, int b) const { return probs[index(x, y, a, b)]; }

  static constexpr double kEntrySlack = 1e-12;
  static constexpr double kNormalizationTol = 1e-12;
};

/// Expected payoffs for both players. The double view is always populated;
/// the exact view is present whenever the computation stayed rational.
struct PayoffPair {
  double pay_a = 0.0;
  double pay_b = 0.0;
  std::optional<Rational> exact_a;
  std::optional<Rational> exact_b;

  double total() const { return pay_a + pay_b; }
  bool is_exact() const { return exact_a.has_value() && exact_b.has_value(); }
  std::optional<Rational> exact_total() const;
};

struct ProfilePayoff {
  PureProfile profile;
  PayoffPair payoffs;
};

struct ClassicalOptimum {
  Rational value;                       // max of pay_a + pay_b over profiles
  std::vector<PureProfile> maximizers;  // all attaining profiles, in order
};

struct ConflictReport {
  bool conflicting = false;
  std::vector<ProfilePayoff> alice_preferred;  // argmax of own payoff over equilibria
  std::vector<ProfilePayoff> bob_preferred;
};

/// The games shipped with the library: "game1", "game2", "game3".
GameSpec builtin_game(std::string_view name);
const std::vector<std::string>& builtin_game_names();

/// Number of deterministic profiles na^nx * nb^ny; throws CapacityError
/// beyond kEnumerationCap.
long long profile_count(const GameSpec& game);

/// Delta behavior of a deterministic profile.
Behavior behavior_from_profile(const GameSpec& game, const PureProfile& profile);

/// Convex combination of deterministic behaviors, entry-exact in rationals.
Behavior behavior_from_advice(const GameSpec& game, const AdviceDistribution& advice);

PayoffPair expected_payoffs(const GameSpec& game, const Behavior& behavior);
PayoffPair expected_payoffs(const GameSpec& game, const PureProfile& profile);
PayoffPair expected_payoffs(const GameSpec& game, const AdviceDistribution& advice);

/// All deterministic profiles in lexicographic (alice, bob) order with exact
/// payoffs. game1 yields 16 rows, game2 81, game3 64.
std::vector<ProfilePayoff> enumerate_profiles(const GameSpec& game);

/// Weak pure Nash equilibria: no unilateral whole-map deviation strictly
/// improves the deviator's own expected payoff. Exact comparison, ties kept.
std::vector<ProfilePayoff> find_pure_equilibria(const GameSpec& game);

bool is_pure_equilibrium(const GameSpec& game, const PureProfile& profile);

/// A strictly improving whole-map deviation for the given player, if any.
std::optional<PureProfile> improving_deviation(const GameSpec& game,
                                               const PureProfile& profile,
                                               Player player);

/// Largest total payoff over deterministic profiles, with all maximizers.
/// By convexity this also bounds every advice distribution.
ClassicalOptimum classical_optimum(const GameSpec& game);

/// Each player's preferred equilibria (argmax of own payoff); the game has
/// conflicting interests iff the two argmax sets are disjoint.
ConflictReport conflict_report(const GameSpec& game);

}  // namespace bellgames
