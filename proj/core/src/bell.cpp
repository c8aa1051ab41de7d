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

#include "bellgames/bell.hpp"

#include <string>
#include <utility>

#include "bellgames/errors.hpp"

namespace bellgames {

BellFunctional::BellFunctional(std::string name_in, int nx_in, int ny_in, int na_in,
                               int nb_in, std::vector<Rational> coeff_in,
                               Rational constant_offset_in,
                               std::optional<Rational> claimed_classical_bound_in)
    : name(std::move(name_in)),
      nx(nx_in),
      ny(ny_in),
      na(na_in),
      nb(nb_in),
      coeff(std::move(coeff_in)),
      constant_offset(std::move(constant_offset_in)),
      claimed_classical_bound(std::move(claimed_classical_bound_in)) {
  if (nx < 1 || ny < 1 || na < 1 || nb < 1) {
    throw ValidationError("functional '" + name + "': all dimensions must be >= 1");
  }
  if (coeff.size() != static_cast<std::size_t>(nx) * ny * na * nb) {
    throw ValidationError("functional '" + name +
                          "': coefficient tensor must be fully populated");
  }
}

namespace {

void check_dims(const BellFunctional& f, const Behavior& behavior) {
  if (behavior.nx != f.nx || behavior.ny != f.ny || behavior.na != f.na ||
      behavior.nb != f.nb) {
    throw ValidationError("behavior dimensions do not match functional '" + f.name +
                          "'");
  }
}

void check_profile_dims(const BellFunctional& f, const PureProfile& p) {
  if (static_cast<int>(p.alice.size()) != f.nx ||
      static_cast<int>(p.bob.size()) != f.ny) {
    throw ValidationError("profile shape does not match functional '" + f.name + "'");
  }
  for (int a : p.alice) {
    if (a < 0 || a >= f.na) {
      throw ValidationError("profile output out of range for functional '" + f.name +
                            "'");
    }
  }
  for (int b : p.bob) {
    if (b < 0 || b >= f.nb) {
      throw ValidationError("profile output out of range for functional '" + f.name +
                            "'");
    }
  }
}

}  // namespace

double evaluate(const BellFunctional& f, const Behavior& behavior) {
  check_dims(f, behavior);
  double value = to_double(f.constant_offset);
  for (int x = 0; x < f.nx; ++x) {
    for (int y = 0; y < f.ny; ++y) {
      for (int a = 0; a < f.na; ++a) {
        for (int b = 0; b < f.nb; ++b) {
          const Rational& c = f.at(x, y, a, b);
          if (c == Rational(0)) continue;
          value += to_double(c) * behavior.at(x, y, a, b);
        }
      }
    }
  }
  return value;
}

Rational evaluate_exact(const BellFunctional& f, const Behavior& behavior) {
  check_dims(f, behavior);
  if (!behavior.exact) {
    throw ValidationError("behavior has no exact table; use evaluate() instead");
  }
  Rational value = f.constant_offset;
  for (int x = 0; x < f.nx; ++x) {
    for (int y = 0; y < f.ny; ++y) {
      for (int a = 0; a < f.na; ++a) {
        for (int b = 0; b < f.nb; ++b) {
          const Rational& c = f.at(x, y, a, b);
          if (c == Rational(0)) continue;
          value += c * (*behavior.exact)[behavior.index(x, y, a, b)];
        }
      }
    }
  }
  return value;
}

Rational evaluate_on_profile(const BellFunctional& f, const PureProfile& profile) {
  check_profile_dims(f, profile);
  Rational value = f.constant_offset;
  for (int x = 0; x < f.nx; ++x) {
    for (int y = 0; y < f.ny; ++y) {
      value += f.at(x, y, profile.alice[x], profile.bob[y]);
    }
  }
  return value;
}

double correlator(const Behavior& behavior, int x, int y) {
  if (behavior.na != 2 || behavior.nb != 2) {
    throw ValidationError("correlator requires binary outputs");
  }
  if (x < 0 || x >= behavior.nx || y < 0 || y >= behavior.ny) {
    throw ValidationError("correlator setting pair out of range");
  }
  return behavior.at(x, y, 0, 0) + behavior.at(x, y, 1, 1) - behavior.at(x, y, 0, 1) -
         behavior.at(x, y, 1, 0);
}

Rational classical_bound_bruteforce(const BellFunctional& f) {
  long long alice_count = 1;
  long long bob_count = 1;
  for (int x = 0; x < f.nx; ++x) {
    alice_count *= f.na;
    if (alice_count > kEnumerationCap) break;
  }
  for (int y = 0; y < f.ny; ++y) {
    bob_count *= f.nb;
    if (bob_count > kEnumerationCap) break;
  }
  if (alice_count > kEnumerationCap || bob_count > kEnumerationCap ||
      alice_count > kEnumerationCap / bob_count) {
    throw CapacityError("functional '" + f.name + "' has more than " +
                        std::to_string(kEnumerationCap) + " deterministic profiles");
  }
  const long long total = alice_count * bob_count;
  std::optional<Rational> best;
  for (long long i = 0; i < total; ++i) {
    PureProfile p;
    p.alice.assign(static_cast<std::size_t>(f.nx), 0);
    p.bob.assign(static_cast<std::size_t>(f.ny), 0);
    long long ai = i / bob_count;
    long long bi = i % bob_count;
    for (int x = f.nx - 1; x >= 0; --x) {
      p.alice[static_cast<std::size_t>(x)] = static_cast<int>(ai % f.na);
      ai /= f.na;
    }
    for (int y = f.ny - 1; y >= 0; --y) {
      p.bob[static_cast<std::size_t>(y)] = static_cast<int>(bi % f.nb);
      bi /= f.nb;
    }
    const Rational value = evaluate_on_profile(f, p);
    if (!best || value > *best) best = value;
  }
  if (f.claimed_classical_bound && *best != *f.claimed_classical_bound) {
    throw IntegrityError("functional '" + f.name + "' claims classical bound " +
                         fraction_string(*f.claimed_classical_bound) +
                         " but enumeration finds " + fraction_string(*best));
  }
  return *best;
}

BellFunctional functional_from_game(const GameSpec& game, const Rational& weight_a,
                                    const Rational& weight_b) {
  std::vector<Rational> coeff(game.pay_a.size(), Rational(0));
  for (int x = 0; x < game.nx; ++x) {
    for (int y = 0; y < game.ny; ++y) {
      const Rational& pr = game.prior_at(x, y);
      for (int a = 0; a < game.na; ++a) {
        for (int b = 0; b < game.nb; ++b) {
          coeff[game.pay_index(x, y, a, b)] =
              pr * (weight_a * game.pay_a_at(x, y, a, b) +
                    weight_b * game.pay_b_at(x, y, a, b));
        }
      }
    }
  }
  std::string name = game.name + "_payoff";
  if (weight_a != Rational(1) || weight_b != Rational(1)) {
    name += "_" + compact_string(weight_a) + "_" + compact_string(weight_b);
  }
  return BellFunctional(std::move(name), game.nx, game.ny, game.na, game.nb,
                        std::move(coeff));
}

namespace {

struct FunctionalBuilder {
  int nx, ny, na, nb;
  std::vector<Rational> coeff;

  FunctionalBuilder(int nx_in, int ny_in, int na_in, int nb_in)
      : nx(nx_in), ny(ny_in), na(na_in), nb(nb_in),
        coeff(static_cast<std::size_t>(nx) * ny * na * nb, Rational(0)) {}

  void set(int x, int y, int a, int b, Rational c) {
    coeff[((static_cast<std::size_t>(x) * ny + y) * na + a) * nb + b] = std::move(c);
  }

  BellFunctional build(std::string name, Rational offset, Rational bound) {
    return BellFunctional(std::move(name), nx, ny, na, nb, std::move(coeff),
                          std::move(offset), std::move(bound));
  }
};

// P^{11}_{11} + P^{12}_{01} + P^{21}_{10} - P^{22}_{11} <= 1.
BellFunctional make_cereceda1() {
  FunctionalBuilder f(2, 2, 2, 2);
  f.set(0, 0, 1, 1, Rational(1));
  f.set(0, 1, 0, 1, Rational(1));
  f.set(1, 0, 1, 0, Rational(1));
  f.set(1, 1, 1, 1, Rational(-1));
  return f.build("cereceda1", Rational(0), Rational(1));
}

// P^{11}_{00} + P^{12}_{10} + P^{21}_{01} - P^{22}_{00} <= 1.
BellFunctional make_cereceda2() {
  FunctionalBuilder f(2, 2, 2, 2);
  f.set(0, 0, 0, 0, Rational(1));
  f.set(0, 1, 1, 0, Rational(1));
  f.set(1, 0, 0, 1, Rational(1));
  f.set(1, 1, 0, 0, Rational(-1));
  return f.build("cereceda2", Rational(0), Rational(1));
}

// Twelve-term three-outcome expression with local bound 3: matched outputs on
// blocks 11, 12, 22 and outputs shifted by one on block 21.
BellFunctional make_collins3() {
  FunctionalBuilder f(2, 2, 3, 3);
  for (int k = 0; k < 3; ++k) {
    f.set(0, 0, k, k, Rational(1));
    f.set(0, 1, k, k, Rational(1));
    f.set(1, 0, k, (k + 1) % 3, Rational(1));
    f.set(1, 1, k, k, Rational(1));
  }
  return f.build("collins3", Rational(0), Rational(3));
}

// Three-setting chained correlator expression
//   <A1B1> + <A2B2> + <A3B3> + <A2B1> + <A3B2> - <A1B3> <= 4,
// expanded via <AiBj> = 2(P00 + P11) - 1 (and the negated term via
// -<A1B3> = 2(P01 + P10) - 1), which leaves a constant offset of -6.
BellFunctional make_chained3() {
  FunctionalBuilder f(3, 3, 2, 2);
  for (auto [x, y] : {std::pair{0, 0}, {1, 1}, {2, 2}, {1, 0}, {2, 1}}) {
    f.set(x, y, 0, 0, Rational(2));
    f.set(x, y, 1, 1, Rational(2));
  }
  f.set(0, 2, 0, 1, Rational(2));
  f.set(0, 2, 1, 0, Rational(2));
  return f.build("chained3", Rational(-6), Rational(4));
}

// <A1B1> + <A1B2> + <A2B1> - <A2B2> <= 2, in direct +-1 correlator form.
// Cross-check fixture only; not tied to any builtin game.
BellFunctional make_chsh() {
  FunctionalBuilder f(2, 2, 2, 2);
  for (auto [x, y] : {std::pair{0, 0}, {0, 1}, {1, 0}}) {
    f.set(x, y, 0, 0, Rational(1));
    f.set(x, y, 1, 1, Rational(1));
    f.set(x, y, 0, 1, Rational(-1));
    f.set(x, y, 1, 0, Rational(-1));
  }
  f.set(1, 1, 0, 0, Rational(-1));
  f.set(1, 1, 1, 1, Rational(-1));
  f.set(1, 1, 0, 1, Rational(1));
  f.set(1, 1, 1, 0, Rational(1));
  return f.build("chsh", Rational(0), Rational(2));
}

}  // namespace

BellFunctional builtin_functional(std::string_view name) {
  if (name == "cereceda1") return make_cereceda1();
  if (name == "cereceda2") return make_cereceda2();
  if (name == "collins3") return make_collins3();
  if (name == "chained3") return make_chained3();
  if (name == "chsh") return make_chsh();
  throw NotFoundError("unknown builtin functional '" + std::string(name) +
                      "'; expected one of cereceda1, cereceda2, collins3, chained3, "
                      "chsh");
}

const std::vector<std::string>& builtin_functional_names() {
  static const std::vector<std::string> names = {"cereceda1", "cereceda2", "collins3",
                                                 "chained3", "chsh"};
  return names;
}

}  // namespace bellgames
