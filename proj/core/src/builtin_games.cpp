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

#include <string>
#include <vector>

#include "bellgames/errors.hpp"
#include "bellgames/game.hpp"

namespace bellgames {

namespace {

struct Builder {
  int nx, ny, na, nb;
  std::vector<Rational> prior;
  std::vector<Rational> pay_a;
  std::vector<Rational> pay_b;

  Builder(int nx_in, int ny_in, int na_in, int nb_in, Rational uniform_prior)
      : nx(nx_in), ny(ny_in), na(na_in), nb(nb_in),
        prior(static_cast<std::size_t>(nx) * ny, uniform_prior),
        pay_a(static_cast<std::size_t>(nx) * ny * na * nb, Rational(0)),
        pay_b(pay_a.size()) {}

  void set(int x, int y, int a, int b, Rational ua, Rational ub) {
    const std::size_t i = ((static_cast<std::size_t>(x) * ny + y) * na + a) * nb + b;
    pay_a[i] = ua;
    pay_b[i] = ub;
  }

  GameSpec build(std::string name) {
    return GameSpec(std::move(name), nx, ny, na, nb, std::move(prior),
                    std::move(pay_a), std::move(pay_b));
  }
};

// Binary-input, binary-output game whose total payoff is (3/4) times the sum
// of the two four-term probability inequalities with local bound 1.
GameSpec make_game1() {
  Builder g(2, 2, 2, 2, Rational(1, 4));
  const Rational pen(-3, 2);
  g.set(0, 0, 0, 0, Rational(2), Rational(1));
  g.set(0, 0, 1, 1, Rational(1), Rational(2));
  g.set(0, 1, 0, 1, Rational(2), Rational(1));
  g.set(0, 1, 1, 0, Rational(1), Rational(2));
  g.set(1, 0, 0, 1, Rational(1), Rational(2));
  g.set(1, 0, 1, 0, Rational(2), Rational(1));
  g.set(1, 1, 0, 0, pen, pen);
  g.set(1, 1, 1, 1, pen, pen);
  return g.build("game1");
}

// Ternary-output game; total payoff is (3/4) times the twelve-term
// three-outcome Bell expression with local bound 3.
GameSpec make_game2() {
  Builder g(2, 2, 3, 3, Rational(1, 4));
  const Rational mid(3, 2);
  for (int y : {0, 1}) {
    g.set(0, y, 0, 0, Rational(2), Rational(1));
    g.set(0, y, 1, 1, mid, mid);
    g.set(0, y, 2, 2, Rational(1), Rational(2));
  }
  g.set(1, 0, 0, 1, mid, mid);
  g.set(1, 0, 1, 2, mid, mid);
  g.set(1, 0, 2, 0, mid, mid);
  g.set(1, 1, 0, 0, Rational(2), Rational(1));
  g.set(1, 1, 1, 1, mid, mid);
  g.set(1, 1, 2, 2, Rational(1), Rational(2));
  return g.build("game2");
}

// Ternary-input game; total payoff is (1/6) times the three-setting chained
// correlator expression with local bound 4.
GameSpec make_game3() {
  Builder g(3, 3, 2, 2, Rational(1, 9));
  const Rational pen(-3, 2);
  const Rational mid(3, 2);
  // Reward blocks: A1B1, A2B1, A2B2, A3B2, A3B3.
  for (auto [x, y] : {std::pair{0, 0}, {1, 0}, {1, 1}, {2, 1}, {2, 2}}) {
    g.set(x, y, 0, 0, Rational(2), Rational(1));
    g.set(x, y, 1, 1, Rational(1), Rational(2));
  }
  // Penalty blocks: A1B2, A2B3, A3B1 — constant regardless of outputs.
  for (auto [x, y] : {std::pair{0, 1}, {1, 2}, {2, 0}}) {
    for (int a : {0, 1}) {
      for (int b : {0, 1}) g.set(x, y, a, b, pen, pen);
    }
  }
  // Anti-correlated block: A1B3.
  g.set(0, 2, 0, 1, mid, mid);
  g.set(0, 2, 1, 0, mid, mid);
  return g.build("game3");
}

}  // namespace

GameSpec builtin_game(std::string_view name) {
  if (name == "game1") return make_game1();
  if (name == "game2") return make_game2();
  if (name == "game3") return make_game3();
  throw NotFoundError("unknown builtin game '" + std::string(name) +
                      "'; expected one of game1, game2, game3");
}

const std::vector<std::string>& builtin_game_names() {
  static const std::vector<std::string> names = {"game1", "game2", "game3"};
  return names;
}

}  // namespace bellgames
