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

#include "bellgames/bell.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "bellgames/errors.hpp"
#include "bellgames/quantum.hpp"
#include "bellgames/rng.hpp"
#include "doctest.h"
#include "test_support.hpp"

using namespace bellgames;
namespace bt = bellgames::testing;

TEST_CASE("builtin functional roster and claimed bounds") {
  CHECK(builtin_functional_names() ==
        std::vector<std::string>{"cereceda1", "cereceda2", "collins3", "chained3",
                                 "chsh"});
  CHECK(builtin_functional("cereceda1").claimed_classical_bound == Rational(1));
  CHECK(builtin_functional("cereceda2").claimed_classical_bound == Rational(1));
  CHECK(builtin_functional("collins3").claimed_classical_bound == Rational(3));
  CHECK(builtin_functional("chained3").claimed_classical_bound == Rational(4));
  CHECK(builtin_functional("chsh").claimed_classical_bound == Rational(2));
  CHECK_THROWS_AS(builtin_functional("nope"), NotFoundError);
}

TEST_CASE("cereceda coefficient tables, entry by entry") {
  const BellFunctional c1 = builtin_functional("cereceda1");
  const BellFunctional c2 = builtin_functional("cereceda2");
  for (int x = 0; x < 2; ++x) {
    for (int y = 0; y < 2; ++y) {
      for (int a = 0; a < 2; ++a) {
        for (int b = 0; b < 2; ++b) {
          Rational want1(0);
          if (x == 0 && y == 0 && a == 1 && b == 1) want1 = Rational(1);
          if (x == 0 && y == 1 && a == 0 && b == 1) want1 = Rational(1);
          if (x == 1 && y == 0 && a == 1 && b == 0) want1 = Rational(1);
          if (x == 1 && y == 1 && a == 1 && b == 1) want1 = Rational(-1);
          CHECK(c1.at(x, y, a, b) == want1);

          Rational want2(0);
          if (x == 0 && y == 0 && a == 0 && b == 0) want2 = Rational(1);
          if (x == 0 && y == 1 && a == 1 && b == 0) want2 = Rational(1);
          if (x == 1 && y == 0 && a == 0 && b == 1) want2 = Rational(1);
          if (x == 1 && y == 1 && a == 0 && b == 0) want2 = Rational(-1);
          CHECK(c2.at(x, y, a, b) == want2);
        }
      }
    }
  }
  CHECK(c1.constant_offset == Rational(0));
  CHECK(c2.constant_offset == Rational(0));
}

TEST_CASE("collins3 coefficient table") {
  const BellFunctional f = builtin_functional("collins3");
  int nonzero = 0;
  for (int x = 0; x < 2; ++x) {
    for (int y = 0; y < 2; ++y) {
      for (int a = 0; a < 3; ++a) {
        for (int b = 0; b < 3; ++b) {
          const bool hit = (x == 1 && y == 0) ? (b == (a + 1) % 3) : (a == b);
          CHECK(f.at(x, y, a, b) == (hit ? Rational(1) : Rational(0)));
          if (hit) ++nonzero;
        }
      }
    }
  }
  CHECK(nonzero == 12);
  CHECK(f.constant_offset == Rational(0));
}

TEST_CASE("chained3 coefficient table and offset") {
  const BellFunctional f = builtin_functional("chained3");
  CHECK(f.constant_offset == Rational(-6));
  const std::vector<std::pair<int, int>> diag_blocks = {{0, 0}, {1, 1}, {2, 2},
                                                        {1, 0}, {2, 1}};
  for (int x = 0; x < 3; ++x) {
    for (int y = 0; y < 3; ++y) {
      const bool diag = std::find(diag_blocks.begin(), diag_blocks.end(),
                                  std::pair{x, y}) != diag_blocks.end();
      const bool anti = x == 0 && y == 2;
      for (int a = 0; a < 2; ++a) {
        for (int b = 0; b < 2; ++b) {
          Rational want(0);
          if (diag && a == b) want = Rational(2);
          if (anti && a != b) want = Rational(2);
          CHECK(f.at(x, y, a, b) == want);
        }
      }
    }
  }
  // All-zero-outputs profile: five matched correlators saturate the bound.
  CHECK(evaluate_on_profile(f, PureProfile::parse("000000", 3, 3)) == Rational(4));
}

TEST_CASE("brute-forced classical bounds match the claims") {
  for (const auto& name : builtin_functional_names()) {
    const BellFunctional f = builtin_functional(name);
    CHECK(classical_bound_bruteforce(f) == *f.claimed_classical_bound);
  }
}

TEST_CASE("a wrong claimed bound trips the integrity check") {
  const BellFunctional good = builtin_functional("cereceda1");
  const BellFunctional bad("liar", good.nx, good.ny, good.na, good.nb, good.coeff,
                           good.constant_offset, Rational(1, 2));
  CHECK_THROWS_AS(classical_bound_bruteforce(bad), IntegrityError);
}

TEST_CASE("payoff functionals reach exactly the classical optimum") {
  for (const char* name : {"game1", "game2", "game3"}) {
    const GameSpec game = builtin_game(name);
    const BellFunctional f = functional_from_game(game, Rational(1), Rational(1));
    CHECK(classical_bound_bruteforce(f) == classical_optimum(game).value);
  }
}

TEST_CASE("game1 payoff functional is (3/4) * (cereceda1 + cereceda2)") {
  const BellFunctional f =
      functional_from_game(builtin_game("game1"), Rational(1), Rational(1));
  const BellFunctional c1 = builtin_functional("cereceda1");
  const BellFunctional c2 = builtin_functional("cereceda2");
  CHECK(f.name == "game1_payoff");
  CHECK(f.constant_offset == Rational(0));
  for (std::size_t i = 0; i < f.coeff.size(); ++i) {
    CHECK(f.coeff[i] == Rational(3, 4) * (c1.coeff[i] + c2.coeff[i]));
  }
}

TEST_CASE("game2 payoff functional is (3/4) * collins3") {
  const BellFunctional f =
      functional_from_game(builtin_game("game2"), Rational(1), Rational(1));
  const BellFunctional c = builtin_functional("collins3");
  CHECK(f.constant_offset == Rational(0));
  for (std::size_t i = 0; i < f.coeff.size(); ++i) {
    CHECK(f.coeff[i] == Rational(3, 4) * c.coeff[i]);
  }
}

TEST_CASE("game3 payoff equals chained3/6 on every behavior") {
  const GameSpec game = builtin_game("game3");
  const BellFunctional f = functional_from_game(game, Rational(1), Rational(1));
  const BellFunctional chained = builtin_functional("chained3");

  // Exactly on all 64 deterministic profiles (offsets included).
  for (const auto& row : enumerate_profiles(game)) {
    CHECK(evaluate_on_profile(f, row.profile) ==
          evaluate_on_profile(chained, row.profile) / Rational(6));
  }

  // And numerically on random quantum behaviors.
  SplitMix64 rng(0xc41a1edULL);
  for (int trial = 0; trial < 100; ++trial) {
    const Behavior b = behavior_from_quantum(bt::random_strategy(3, 3, 2, rng));
    CHECK(evaluate(f, b) ==
          doctest::Approx(evaluate(chained, b) / 6.0).epsilon(1e-12));
  }
}

TEST_CASE("payoff functional evaluation equals the weighted payoffs") {
  SplitMix64 rng(0xb71d6eULL);
  for (const char* name : {"game1", "game2", "game3"}) {
    const GameSpec game = builtin_game(name);
    const int dim = game.na;  // qubits for games 1/3, qutrits for game2
    const BellFunctional sum = functional_from_game(game, Rational(1), Rational(1));
    const BellFunctional alice_only =
        functional_from_game(game, Rational(1), Rational(0));
    const BellFunctional spread =
        functional_from_game(game, Rational(2, 3), Rational(-1, 5));
    CHECK(alice_only.name == game.name + "_payoff_1_0");
    CHECK(spread.name == game.name + "_payoff_2/3_-1/5");

    for (int trial = 0; trial < 100; ++trial) {
      const Behavior b =
          behavior_from_quantum(game, bt::random_strategy(game.nx, game.ny, dim, rng));
      const PayoffPair pp = expected_payoffs(game, b);
      CHECK(evaluate(sum, b) == doctest::Approx(pp.total()).epsilon(1e-12));
      CHECK(evaluate(alice_only, b) == doctest::Approx(pp.pay_a).epsilon(1e-12));
      CHECK(evaluate(spread, b) ==
            doctest::Approx(2.0 / 3.0 * pp.pay_a - 0.2 * pp.pay_b).epsilon(1e-12));
    }

    // Exact version of the same identity via advice behaviors.
    for (int trial = 0; trial < 20; ++trial) {
      const Behavior b =
          behavior_from_advice(game, bt::random_advice(game, rng, 4));
      const PayoffPair pp = expected_payoffs(game, b);
      CHECK(evaluate_exact(sum, b) == *pp.exact_a + *pp.exact_b);
      CHECK(evaluate_exact(alice_only, b) == *pp.exact_a);
      CHECK(evaluate_exact(spread, b) ==
            Rational(2, 3) * *pp.exact_a - Rational(1, 5) * *pp.exact_b);
    }
  }
}

TEST_CASE("evaluate_exact insists on an exact table") {
  const BellFunctional f = builtin_functional("chsh");
  const Behavior b(2, 2, 2, 2, std::vector<double>(16, 0.25));
  CHECK_THROWS_AS(evaluate_exact(f, b), ValidationError);
  CHECK(evaluate(f, b) == doctest::Approx(0.0));
}

TEST_CASE("chsh in correlator form") {
  const BellFunctional f = builtin_functional("chsh");
  SplitMix64 rng(0x9cabULL);
  for (int trial = 0; trial < 100; ++trial) {
    const Behavior b = behavior_from_quantum(bt::random_strategy(2, 2, 2, rng));
    const double via_correlators = correlator(b, 0, 0) + correlator(b, 0, 1) +
                                   correlator(b, 1, 0) - correlator(b, 1, 1);
    CHECK(evaluate(f, b) == doctest::Approx(via_correlators).epsilon(1e-12));
  }
}

TEST_CASE("correlator guards its domain") {
  const Behavior binary(1, 1, 2, 2, {0.5, 0.0, 0.0, 0.5});
  CHECK(correlator(binary, 0, 0) == doctest::Approx(1.0));
  CHECK_THROWS_AS(correlator(binary, 1, 0), ValidationError);
  CHECK_THROWS_AS(correlator(binary, 0, -1), ValidationError);
  const Behavior ternary(1, 1, 3, 1, {0.2, 0.3, 0.5});
  CHECK_THROWS_AS(correlator(ternary, 0, 0), ValidationError);
}

TEST_CASE("functional validation and dimension checks") {
  CHECK_THROWS_AS(BellFunctional("bad", 0, 1, 2, 2, {}), ValidationError);
  CHECK_THROWS_AS(BellFunctional("bad", 2, 2, 2, 2, std::vector<Rational>(15)),
                  ValidationError);
  const BellFunctional f = builtin_functional("collins3");
  const Behavior wrong(2, 2, 2, 2, std::vector<double>(16, 0.25));
  CHECK_THROWS_AS(evaluate(f, wrong), ValidationError);
}

TEST_CASE("evaluate_on_profile range checks") {
  const BellFunctional f = builtin_functional("cereceda1");
  // Profile 0011 hits only the (x=1, y=2) term: value 1.
  CHECK(evaluate_on_profile(f, PureProfile::parse("0011", 2, 2)) == Rational(1));
  CHECK_THROWS_AS(evaluate_on_profile(f, PureProfile::parse("0012", 2, 2)),
                  ValidationError);
  CHECK_THROWS_AS(evaluate_on_profile(f, PureProfile::parse("001", 2, 1)),
                  ValidationError);
}

TEST_CASE("capacity guard on brute force") {
  // 21 binary settings per side: 2^21 > 10^6 local strategies.
  const BellFunctional wide("wide", 21, 1, 2, 1,
                            std::vector<Rational>(21 * 1 * 2 * 1, Rational(0)));
  CHECK_THROWS_AS(classical_bound_bruteforce(wide), CapacityError);
}
