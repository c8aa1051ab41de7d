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

#include "bellgames/game.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "bellgames/errors.hpp"

namespace bellgames {

GameSpec::GameSpec(std::string name_in, int nx_in, int ny_in, int na_in, int nb_in,
                   std::vector<Rational> prior_in, std::vector<Rational> pay_a_in,
                   std::vector<Rational> pay_b_in)
    : name(std::move(name_in)),
      nx(nx_in),
      ny(ny_in),
      na(na_in),
      nb(nb_in),
      prior(std::move(prior_in)),
      pay_a(std::move(pay_a_in)),
      pay_b(std::move(pay_b_in)) {
  if (nx < 1 || ny < 1 || na < 1 || nb < 1) {
    throw ValidationError("game '" + name + "': all dimensions must be >= 1");
  }
  const std::size_t cells = static_cast<std::size_t>(nx) * ny;
  if (prior.size() != cells) {
    throw ValidationError("game '" + name + "': prior must cover all input pairs");
  }
  const std::size_t entries = cells * na * nb;
  if (pay_a.size() != entries || pay_b.size() != entries) {
    throw ValidationError("game '" + name + "': payoff tensors must be fully populated");
  }
  Rational sum(0);
  for (const Rational& p : prior) {
    if (p < Rational(0)) {
      throw ValidationError("game '" + name + "': negative prior entry");
    }
    sum += p;
  }
  if (sum != Rational(1)) {
    throw ValidationError("game '" + name + "': prior sums to " + fraction_string(sum) +
                          ", expected 1");
  }
}

std::string PureProfile::str() const {
  bool single_digit = true;
  for (int a : alice) single_digit = single_digit && a < 10;
  for (int b : bob) single_digit = single_digit && b < 10;
  std::string out;
  for (int a : alice) {
    out += std::to_string(a);
    if (!single_digit) out += '.';
  }
  for (int b : bob) {
    out += std::to_string(b);
    if (!single_digit) out += '.';
  }
  if (!single_digit && !out.empty()) out.pop_back();
  return out;
}

PureProfile PureProfile::parse(std::string_view text, int nx, int ny) {
  if (static_cast<int>(text.size()) != nx + ny) {
    throw ValidationError("profile '" + std::string(text) + "' must have " +
                          std::to_string(nx + ny) + " output digits");
  }
  PureProfile p;
  for (char c : text) {
    if (c < '0' || c > '9') {
      throw ValidationError("profile '" + std::string(text) + "' must be digits");
    }
    if (static_cast<int>(p.alice.size()) < nx) {
      p.alice.push_back(c - '0');
    } else {
      p.bob.push_back(c - '0');
    }
  }
  return p;
}

AdviceDistribution::AdviceDistribution(
    std::vector<std::pair<PureProfile, Rational>> weights_in)
    : weights(std::move(weights_in)) {
  Rational sum(0);
  for (const auto& [profile, w] : weights) {
    if (w < Rational(0)) throw ValidationError("advice weight must be >= 0");
    sum += w;
  }
  if (sum != Rational(1)) {
    throw ValidationError("advice weights sum to " + fraction_string(sum) +
                          ", expected 1");
  }
}

Behavior::Behavior(int nx_in, int ny_in, int na_in, int nb_in, std::vector<double> probs_in,
                   std::optional<std::vector<Rational>> exact_in)
    : nx(nx_in), ny(ny_in), na(na_in), nb(nb_in), probs(std::move(probs_in)),
      exact(std::move(exact_in)) {
  if (nx < 1 || ny < 1 || na < 1 || nb < 1) {
    throw ValidationError("behavior dimensions must be >= 1");
  }
  const std::size_t entries = static_cast<std::size_t>(nx) * ny * na * nb;
  if (probs.size() != entries) {
    throw ValidationError("behavior table has wrong size");
  }
  if (exact && exact->size() != entries) {
    throw ValidationError("behavior exact table has wrong size");
  }
  for (double& p : probs) {
    if (!std::isfinite(p) || p < -kEntrySlack || p > 1.0 + kEntrySlack) {
      throw ValidationError("behavior entry " + std::to_string(p) +
                            " is not a probability");
    }
    p = std::clamp(p, 0.0, 1.0);
  }
  for (int x = 0; x < nx; ++x) {
    for (int y = 0; y < ny; ++y) {
      double sum = 0.0;
      for (int a = 0; a < na; ++a) {
        for (int b = 0; b < nb; ++b) sum += at(x, y, a, b);
      }
      if (std::abs(sum - 1.0) > kNormalizationTol) {
        throw ValidationError("behavior not normalized at inputs (" +
                              std::to_string(x + 1) + "," + std::to_string(y + 1) +
                              "): sum " + std::to_string(sum));
      }
    }
  }
}

std::optional<Rational> PayoffPair::exact_total() const {
  if (!is_exact()) return std::nullopt;
  return *exact_a + *exact_b;
}

namespace {

void check_profile(const GameSpec& game, const PureProfile& p) {
  if (static_cast<int>(p.alice.size()) != game.nx ||
      static_cast<int>(p.bob.size()) != game.ny) {
    throw ValidationError("profile shape does not match game '" + game.name + "'");
  }
  for (int a : p.alice) {
    if (a < 0 || a >= game.na) {
      throw ValidationError("profile output " + std::to_string(a) +
                            " out of range for game '" + game.name + "'");
    }
  }
  for (int b : p.bob) {
    if (b < 0 || b >= game.nb) {
      throw ValidationError("profile output " + std::to_string(b) +
                            " out of range for game '" + game.name + "'");
    }
  }
}

PayoffPair make_exact_pair(Rational a, Rational b) {
  PayoffPair out;
  out.pay_a = to_double(a);
  out.pay_b = to_double(b);
  out.exact_a = std::move(a);
  out.exact_b = std::move(b);
  return out;
}

long long checked_pow(int base, int exp) {
  long long value = 1;
  for (int i = 0; i < exp; ++i) {
    if (value > kEnumerationCap) return kEnumerationCap + 1;
    value *= base;
  }
  return value;
}

// Decodes profile `index` (lexicographic, Alice most significant) without
// materializing the whole list.
PureProfile decode_profile(const GameSpec& game, long long index, long long bob_count) {
  long long ai = index / bob_count;
  long long bi = index % bob_count;
  PureProfile p;
  p.alice.assign(game.nx, 0);
  p.bob.assign(game.ny, 0);
  for (int x = game.nx - 1; x >= 0; --x) {
    p.alice[x] = static_cast<int>(ai % game.na);
    ai /= game.na;
  }
  for (int y = game.ny - 1; y >= 0; --y) {
    p.bob[y] = static_cast<int>(bi % game.nb);
    bi /= game.nb;
  }
  return p;
}

}  // namespace

long long profile_count(const GameSpec& game) {
  const long long alice_count = checked_pow(game.na, game.nx);
  const long long bob_count = checked_pow(game.nb, game.ny);
  if (alice_count > kEnumerationCap || bob_count > kEnumerationCap ||
      alice_count > kEnumerationCap / bob_count) {
    throw CapacityError("game '" + game.name + "' has more than " +
                        std::to_string(kEnumerationCap) + " deterministic profiles");
  }
  return alice_count * bob_count;
}

Behavior behavior_from_profile(const GameSpec& game, const PureProfile& profile) {
  check_profile(game, profile);
  const std::size_t entries = static_cast<std::size_t>(game.nx) * game.ny * game.na * game.nb;
  std::vector<double> probs(entries, 0.0);
  std::vector<Rational> exact(entries, Rational(0));
  const auto index = [&](int x, int y, int a, int b) {
    return ((static_cast<std::size_t>(x) * game.ny + y) * game.na + a) * game.nb + b;
  };
  for (int x = 0; x < game.nx; ++x) {
    for (int y = 0; y < game.ny; ++y) {
      const std::size_t i = index(x, y, profile.alice[x], profile.bob[y]);
      probs[i] = 1.0;
      exact[i] = Rational(1);
    }
  }
  return Behavior(game.nx, game.ny, game.na, game.nb, std::move(probs), std::move(exact));
}

Behavior behavior_from_advice(const GameSpec& game, const AdviceDistribution& advice) {
  const std::size_t entries = static_cast<std::size_t>(game.nx) * game.ny * game.na * game.nb;
  std::vector<Rational> exact(entries, Rational(0));
  const auto index = [&](int x, int y, int a, int b) {
    return ((static_cast<std::size_t>(x) * game.ny + y) * game.na + a) * game.nb + b;
  };
  for (const auto& [profile, w] : advice.weights) {
    check_profile(game, profile);
    if (w == Rational(0)) continue;
    for (int x = 0; x < game.nx; ++x) {
      for (int y = 0; y < game.ny; ++y) {
        exact[index(x, y, profile.alice[x], profile.bob[y])] += w;
      }
    }
  }
  std::vector<double> probs(entries);
  for (std::size_t i = 0; i < entries; ++i) probs[i] = to_double(exact[i]);
  return Behavior(game.nx, game.ny, game.na, game.nb, std::move(probs), std::move(exact));
}

PayoffPair expected_payoffs(const GameSpec& game, const Behavior& behavior) {
  if (behavior.nx != game.nx || behavior.ny != game.ny || behavior.na != game.na ||
      behavior.nb != game.nb) {
    throw ValidationError("behavior dimensions do not match game '" + game.name + "'");
  }
  if (behavior.exact) {
    Rational a(0), b(0);
    for (int x = 0; x < game.nx; ++x) {
      for (int y = 0; y < game.ny; ++y) {
        const Rational& pr = game.prior_at(x, y);
        if (pr == Rational(0)) continue;
        for (int oa = 0; oa < game.na; ++oa) {
          for (int ob = 0; ob < game.nb; ++ob) {
            const Rational& p = (*behavior.exact)[behavior.index(x, y, oa, ob)];
            if (p == Rational(0)) continue;
            a += pr * game.pay_a_at(x, y, oa, ob) * p;
            b += pr * game.pay_b_at(x, y, oa, ob) * p;
          }
        }
      }
    }
    return make_exact_pair(std::move(a), std::move(b));
  }
  PayoffPair out;
  for (int x = 0; x < game.nx; ++x) {
    for (int y = 0; y < game.ny; ++y) {
      const double pr = to_double(game.prior_at(x, y));
      if (pr == 0.0) continue;
      for (int oa = 0; oa < game.na; ++oa) {
        for (int ob = 0; ob < game.nb; ++ob) {
          const double p = behavior.at(x, y, oa, ob);
          out.pay_a += pr * to_double(game.pay_a_at(x, y, oa, ob)) * p;
          out.pay_b += pr * to_double(game.pay_b_at(x, y, oa, ob)) * p;
        }
      }
    }
  }
  return out;
}

PayoffPair expected_payoffs(const GameSpec& game, const PureProfile& profile) {
  check_profile(game, profile);
  Rational a(0), b(0);
  for (int x = 0; x < game.nx; ++x) {
    for (int y = 0; y < game.ny; ++y) {
      const Rational& pr = game.prior_at(x, y);
      if (pr == Rational(0)) continue;
      a += pr * game.pay_a_at(x, y, profile.alice[x], profile.bob[y]);
      b += pr * game.pay_b_at(x, y, profile.alice[x], profile.bob[y]);
    }
  }
  return make_exact_pair(std::move(a), std::move(b));
}

PayoffPair expected_payoffs(const GameSpec& game, const AdviceDistribution& advice) {
  Rational a(0), b(0);
  for (const auto& [profile, w] : advice.weights) {
    if (w == Rational(0)) {
      check_profile(game, profile);
      continue;
    }
    const PayoffPair pp = expected_payoffs(game, profile);
    a += w * *pp.exact_a;
    b += w * *pp.exact_b;
  }
  return make_exact_pair(std::move(a), std::move(b));
}

std::vector<ProfilePayoff> enumerate_profiles(const GameSpec& game) {
  const long long total = profile_count(game);
  const long long bob_count = checked_pow(game.nb, game.ny);
  std::vector<ProfilePayoff> rows;
  rows.reserve(static_cast<std::size_t>(total));
  for (long long i = 0; i < total; ++i) {
    PureProfile p = decode_profile(game, i, bob_count);
    PayoffPair pp = expected_payoffs(game, p);
    rows.push_back(ProfilePayoff{std::move(p), std::move(pp)});
  }
  return rows;
}

std::vector<ProfilePayoff> find_pure_equilibria(const GameSpec& game) {
  const std::vector<ProfilePayoff> rows = enumerate_profiles(game);
  const long long bob_count = checked_pow(game.nb, game.ny);
  const long long alice_count = static_cast<long long>(rows.size()) / bob_count;

  // Best-response values: rows are ordered alice-major, so row i pairs Alice
  // map i / bob_count with Bob map i % bob_count.
  std::vector<Rational> best_a(static_cast<std::size_t>(bob_count), Rational(0));
  std::vector<Rational> best_b(static_cast<std::size_t>(alice_count), Rational(0));
  for (long long i = 0; i < static_cast<long long>(rows.size()); ++i) {
    const std::size_t ai = static_cast<std::size_t>(i / bob_count);
    const std::size_t bi = static_cast<std::size_t>(i % bob_count);
    const Rational& a = *rows[static_cast<std::size_t>(i)].payoffs.exact_a;
    const Rational& b = *rows[static_cast<std::size_t>(i)].payoffs.exact_b;
    if (ai == 0 || a > best_a[bi]) best_a[bi] = a;
    if (bi == 0 || b > best_b[ai]) best_b[ai] = b;
  }
  std::vector<ProfilePayoff> equilibria;
  for (long long i = 0; i < static_cast<long long>(rows.size()); ++i) {
    const long long ai = i / bob_count;
    const long long bi = i % bob_count;
    const auto& row = rows[static_cast<std::size_t>(i)];
    if (*row.payoffs.exact_a == best_a[static_cast<std::size_t>(bi)] &&
        *row.payoffs.exact_b == best_b[static_cast<std::size_t>(ai)]) {
      equilibria.push_back(row);
    }
  }
  return equilibria;
}

bool is_pure_equilibrium(const GameSpec& game, const PureProfile& profile) {
  return !improving_deviation(game, profile, Player::alice).has_value() &&
         !improving_deviation(game, profile, Player::bob).has_value();
}

std::optional<PureProfile> improving_deviation(const GameSpec& game,
                                               const PureProfile& profile,
                                               Player player) {
  check_profile(game, profile);
  profile_count(game);  // capacity guard
  const PayoffPair current = expected_payoffs(game, profile);
  const Rational own = player == Player::alice ? *current.exact_a : *current.exact_b;
  const int inputs = player == Player::alice ? game.nx : game.ny;
  const int outputs = player == Player::alice ? game.na : game.nb;

  std::vector<int> map(static_cast<std::size_t>(inputs), 0);
  while (true) {
    PureProfile candidate = profile;
    (player == Player::alice ? candidate.alice : candidate.bob) = map;
    if (candidate != profile) {
      const PayoffPair pp = expected_payoffs(game, candidate);
      const Rational& value = player == Player::alice ? *pp.exact_a : *pp.exact_b;
      if (value > own) return candidate;
    }
    int pos = inputs - 1;
    while (pos >= 0 && map[static_cast<std::size_t>(pos)] == outputs - 1) {
      map[static_cast<std::size_t>(pos)] = 0;
      --pos;
    }
    if (pos < 0) break;
    ++map[static_cast<std::size_t>(pos)];
  }
  return std::nullopt;
}

ClassicalOptimum classical_optimum(const GameSpec& game) {
  const std::vector<ProfilePayoff> rows = enumerate_profiles(game);
  ClassicalOptimum out{*rows.front().payoffs.exact_total(), {}};
  for (const auto& row : rows) {
    const Rational total = *row.payoffs.exact_total();
    if (total > out.value) out.value = total;
  }
  for (const auto& row : rows) {
    if (*row.payoffs.exact_total() == out.value) out.maximizers.push_back(row.profile);
  }
  return out;
}

ConflictReport conflict_report(const GameSpec& game) {
  const std::vector<ProfilePayoff> equilibria = find_pure_equilibria(game);
  ConflictReport report;
  if (equilibria.empty()) return report;

  Rational best_a = *equilibria.front().payoffs.exact_a;
  Rational best_b = *equilibria.front().payoffs.exact_b;
  for (const auto& eq : equilibria) {
    best_a = std::max(best_a, *eq.payoffs.exact_a);
    best_b = std::max(best_b, *eq.payoffs.exact_b);
  }
  for (const auto& eq : equilibria) {
    if (*eq.payoffs.exact_a == best_a) report.alice_preferred.push_back(eq);
    if (*eq.payoffs.exact_b == best_b) report.bob_preferred.push_back(eq);
  }
  report.conflicting = true;
  for (const auto& a : report.alice_preferred) {
    for (const auto& b : report.bob_preferred) {
      if (a.profile == b.profile) report.conflicting = false;
    }
  }
  return report;
}

}  // namespace bellgames
