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

#include "bellgames/io.hpp"

#include <cctype>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <istream>
#include <optional>
#include <sstream>
#include <vector>

#include "bellgames/errors.hpp"

namespace bellgames {

namespace {

struct Line {
  int number;
  std::vector<std::string> tokens;
};

[[noreturn]] void fail(int line, const std::string& message) {
  throw ValidationError("line " + std::to_string(line) + ": " + message);
}

// Tokenized non-empty lines with comments stripped.
std::vector<Line> tokenize(std::istream& in) {
  std::vector<Line> lines;
  std::string raw;
  int number = 0;
  while (std::getline(in, raw)) {
    ++number;
    if (const std::size_t hash = raw.find('#'); hash != std::string::npos) {
      raw.erase(hash);
    }
    std::istringstream stream(raw);
    Line line{number, {}};
    std::string token;
    while (stream >> token) line.tokens.push_back(token);
    if (!line.tokens.empty()) lines.push_back(std::move(line));
  }
  return lines;
}

int parse_int(const Line& line, std::size_t pos, int min_value, const char* what) {
  const std::string& token = line.tokens[pos];
  int value = 0;
  const auto [ptr, ec] =
      std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    fail(line.number, std::string("expected integer ") + what + ", got '" + token + "'");
  }
  if (value < min_value) {
    fail(line.number, std::string(what) + " must be >= " + std::to_string(min_value));
  }
  return value;
}

Rational parse_rational_token(const Line& line, std::size_t pos, const char* what) {
  try {
    return parse_rational(line.tokens[pos]);
  } catch (const ValidationError& e) {
    fail(line.number, std::string("bad ") + what + ": " + e.what());
  }
}

double parse_double_token(const Line& line, std::size_t pos, const char* what) {
  const std::string& token = line.tokens[pos];
  try {
    std::size_t used = 0;
    const double value = std::stod(token, &used);
    if (used != token.size()) throw std::invalid_argument(token);
    return value;
  } catch (const std::exception&) {
    fail(line.number, std::string("expected number for ") + what + ", got '" + token +
                          "'");
  }
}

void expect_tokens(const Line& line, std::size_t count, const char* syntax) {
  if (line.tokens.size() != count) {
    fail(line.number, std::string("expected '") + syntax + "'");
  }
}

// Shortest decimal that reads back to the same double.
std::string float_string(double value) {
  char buffer[40];
  for (int precision = 1; precision <= 17; ++precision) {
    std::snprintf(buffer, sizeof buffer, "%.*g", precision, value);
    double readback = 0.0;
    std::sscanf(buffer, "%lf", &readback);
    if (readback == value) break;
  }
  return buffer;
}

void check_name(int line, const std::string& name) {
  if (name.empty()) fail(line, "empty name");
  for (char c : name) {
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_' && c != '-') {
      fail(line, "name '" + name + "' may use only letters, digits, '_', '-'");
    }
  }
}

}  // namespace

GameSpec parse_game(std::istream& in) {
  const std::vector<Line> lines = tokenize(in);
  if (lines.empty()) throw ValidationError("line 1: empty game file");
  const Line& header = lines.front();
  if (header.tokens[0] != "game") fail(header.number, "expected 'game' header");
  expect_tokens(header, 6, "game <name> <nx> <ny> <na> <nb>");
  const std::string name = header.tokens[1];
  check_name(header.number, name);
  const int nx = parse_int(header, 2, 1, "nx");
  const int ny = parse_int(header, 3, 1, "ny");
  const int na = parse_int(header, 4, 1, "na");
  const int nb = parse_int(header, 5, 1, "nb");

  std::vector<std::optional<Rational>> prior(static_cast<std::size_t>(nx) * ny);
  std::vector<std::optional<Rational>> pay_a(prior.size() * na * nb);
  std::vector<std::optional<Rational>> pay_b(pay_a.size());
  const auto prior_index = [&](int x, int y) {
    return static_cast<std::size_t>(x) * ny + y;
  };
  const auto pay_index = [&](int x, int y, int a, int b) {
    return ((static_cast<std::size_t>(x) * ny + y) * na + a) * nb + b;
  };

  for (std::size_t li = 1; li < lines.size(); ++li) {
    const Line& line = lines[li];
    if (line.tokens[0] == "prior") {
      expect_tokens(line, 4, "prior <x> <y> <num>/<den>");
      const int x = parse_int(line, 1, 1, "x");
      const int y = parse_int(line, 2, 1, "y");
      if (x > nx || y > ny) fail(line.number, "prior input pair out of range");
      auto& slot = prior[prior_index(x - 1, y - 1)];
      if (slot) fail(line.number, "duplicate prior entry");
      slot = parse_rational_token(line, 3, "prior probability");
    } else if (line.tokens[0] == "pay") {
      expect_tokens(line, 7, "pay <x> <y> <a> <b> <uA> <uB>");
      const int x = parse_int(line, 1, 1, "x");
      const int y = parse_int(line, 2, 1, "y");
      const int a = parse_int(line, 3, 0, "a");
      const int b = parse_int(line, 4, 0, "b");
      if (x > nx || y > ny || a >= na || b >= nb) {
        fail(line.number, "pay indices out of range");
      }
      auto& slot_a = pay_a[pay_index(x - 1, y - 1, a, b)];
      if (slot_a) fail(line.number, "duplicate pay entry");
      slot_a = parse_rational_token(line, 5, "Alice payoff");
      pay_b[pay_index(x - 1, y - 1, a, b)] = parse_rational_token(line, 6, "Bob payoff");
    } else {
      fail(line.number, "unknown directive '" + line.tokens[0] + "'");
    }
  }

  std::vector<Rational> prior_out, pay_a_out, pay_b_out;
  prior_out.reserve(prior.size());
  for (std::size_t i = 0; i < prior.size(); ++i) {
    if (!prior[i]) throw ValidationError("game '" + name + "' is missing prior entries");
    prior_out.push_back(*prior[i]);
  }
  pay_a_out.reserve(pay_a.size());
  pay_b_out.reserve(pay_b.size());
  for (std::size_t i = 0; i < pay_a.size(); ++i) {
    if (!pay_a[i]) throw ValidationError("game '" + name + "' is missing pay entries");
    pay_a_out.push_back(*pay_a[i]);
    pay_b_out.push_back(*pay_b[i]);
  }
  return GameSpec(name, nx, ny, na, nb, std::move(prior_out), std::move(pay_a_out),
                  std::move(pay_b_out));
}

std::string emit_game(const GameSpec& game) {
  std::ostringstream out;
  out << "game " << game.name << ' ' << game.nx << ' ' << game.ny << ' ' << game.na
      << ' ' << game.nb << '\n';
  for (int x = 0; x < game.nx; ++x) {
    for (int y = 0; y < game.ny; ++y) {
      out << "prior " << x + 1 << ' ' << y + 1 << ' '
          << fraction_string(game.prior_at(x, y)) << '\n';
    }
  }
  for (int x = 0; x < game.nx; ++x) {
    for (int y = 0; y < game.ny; ++y) {
      for (int a = 0; a < game.na; ++a) {
        for (int b = 0; b < game.nb; ++b) {
          out << "pay " << x + 1 << ' ' << y + 1 << ' ' << a << ' ' << b << ' '
              << fraction_string(game.pay_a_at(x, y, a, b)) << ' '
              << fraction_string(game.pay_b_at(x, y, a, b)) << '\n';
        }
      }
    }
  }
  return out.str();
}

BellFunctional parse_functional(std::istream& in) {
  const std::vector<Line> lines = tokenize(in);
  if (lines.empty()) throw ValidationError("line 1: empty functional file");
  const Line& header = lines.front();
  if (header.tokens[0] != "bell") fail(header.number, "expected 'bell' header");
  expect_tokens(header, 7, "bell <name> <nx> <ny> <na> <nb> <offset>");
  const std::string name = header.tokens[1];
  check_name(header.number, name);
  const int nx = parse_int(header, 2, 1, "nx");
  const int ny = parse_int(header, 3, 1, "ny");
  const int na = parse_int(header, 4, 1, "na");
  const int nb = parse_int(header, 5, 1, "nb");
  const Rational offset = parse_rational_token(header, 6, "offset");

  std::vector<Rational> coeff(static_cast<std::size_t>(nx) * ny * na * nb, Rational(0));
  std::vector<bool> seen(coeff.size(), false);
  for (std::size_t li = 1; li < lines.size(); ++li) {
    const Line& line = lines[li];
    if (line.tokens[0] != "coef") {
      fail(line.number, "unknown directive '" + line.tokens[0] + "'");
    }
    expect_tokens(line, 6, "coef <x> <y> <a> <b> <num>/<den>");
    const int x = parse_int(line, 1, 1, "x");
    const int y = parse_int(line, 2, 1, "y");
    const int a = parse_int(line, 3, 0, "a");
    const int b = parse_int(line, 4, 0, "b");
    if (x > nx || y > ny || a >= na || b >= nb) {
      fail(line.number, "coef indices out of range");
    }
    const std::size_t i =
        ((static_cast<std::size_t>(x - 1) * ny + (y - 1)) * na + a) * nb + b;
    if (seen[i]) fail(line.number, "duplicate coef entry");
    seen[i] = true;
    coeff[i] = parse_rational_token(line, 5, "coefficient");
  }
  return BellFunctional(name, nx, ny, na, nb, std::move(coeff), offset);
}

std::string emit_functional(const BellFunctional& f) {
  std::ostringstream out;
  out << "bell " << f.name << ' ' << f.nx << ' ' << f.ny << ' ' << f.na << ' ' << f.nb
      << ' ' << fraction_string(f.constant_offset) << '\n';
  for (int x = 0; x < f.nx; ++x) {
    for (int y = 0; y < f.ny; ++y) {
      for (int a = 0; a < f.na; ++a) {
        for (int b = 0; b < f.nb; ++b) {
          const Rational& c = f.at(x, y, a, b);
          if (c == Rational(0)) continue;
          out << "coef " << x + 1 << ' ' << y + 1 << ' ' << a << ' ' << b << ' '
              << fraction_string(c) << '\n';
        }
      }
    }
  }
  return out.str();
}

QuantumStrategy parse_strategy(std::istream& in) {
  const std::vector<Line> lines = tokenize(in);
  if (lines.empty()) throw ValidationError("line 1: empty strategy file");
  const Line& header = lines.front();
  if (header.tokens[0] != "dims") fail(header.number, "expected 'dims' header");
  expect_tokens(header, 3, "dims <dA> <dB>");
  const int da = parse_int(header, 1, 1, "dA");
  const int db = parse_int(header, 2, 1, "dB");

  ComplexVector amp;
  struct MeasLines {
    std::vector<std::pair<int, ComplexVector>> vectors;  // (outcome, components)
  };
  std::vector<MeasLines> alice, bob;

  for (std::size_t li = 1; li < lines.size(); ++li) {
    const Line& line = lines[li];
    if (line.tokens[0] == "state") {
      expect_tokens(line, 3, "state <re> <im>");
      if (static_cast<int>(amp.size()) >= da * db) {
        fail(line.number, "too many state amplitudes");
      }
      amp.emplace_back(parse_double_token(line, 1, "state amplitude"),
                       parse_double_token(line, 2, "state amplitude"));
    } else if (line.tokens[0] == "ameas" || line.tokens[0] == "bmeas") {
      const bool is_alice = line.tokens[0] == "ameas";
      const int dim = is_alice ? da : db;
      if (line.tokens.size() != static_cast<std::size_t>(3 + 2 * dim)) {
        fail(line.number, std::string(is_alice ? "ameas" : "bmeas") +
                              " needs <input> <outcome> plus " + std::to_string(dim) +
                              " (re, im) pairs");
      }
      const int input = parse_int(line, 1, 1, "input");
      const int outcome = parse_int(line, 2, 0, "outcome");
      if (outcome >= dim) fail(line.number, "outcome out of range");
      ComplexVector v;
      for (int c = 0; c < dim; ++c) {
        v.emplace_back(parse_double_token(line, 3 + 2 * c, "component"),
                       parse_double_token(line, 4 + 2 * c, "component"));
      }
      std::vector<MeasLines>& side = is_alice ? alice : bob;
      if (static_cast<int>(side.size()) < input) side.resize(static_cast<std::size_t>(input));
      side[static_cast<std::size_t>(input - 1)].vectors.emplace_back(outcome,
                                                                     std::move(v));
    } else {
      fail(line.number, "unknown directive '" + line.tokens[0] + "'");
    }
  }

  if (static_cast<int>(amp.size()) != da * db) {
    throw ValidationError("strategy file has " + std::to_string(amp.size()) +
                          " state amplitudes, expected " + std::to_string(da * db));
  }
  const auto build_side = [](const std::vector<MeasLines>& side, int dim,
                             const char* who) {
    std::vector<ProjectiveMeasurement> out;
    for (std::size_t i = 0; i < side.size(); ++i) {
      std::vector<ComplexVector> basis(static_cast<std::size_t>(dim));
      std::vector<bool> seen(static_cast<std::size_t>(dim), false);
      for (const auto& [outcome, v] : side[i].vectors) {
        if (seen[static_cast<std::size_t>(outcome)]) {
          throw ValidationError(std::string(who) + " input " + std::to_string(i + 1) +
                                " repeats outcome " + std::to_string(outcome));
        }
        seen[static_cast<std::size_t>(outcome)] = true;
        basis[static_cast<std::size_t>(outcome)] = v;
      }
      for (int k = 0; k < dim; ++k) {
        if (!seen[static_cast<std::size_t>(k)]) {
          throw ValidationError(std::string(who) + " input " + std::to_string(i + 1) +
                                " is missing outcome " + std::to_string(k));
        }
      }
      out.emplace_back(std::move(basis));
    }
    return out;
  };
  QuantumStrategy qs{StateVector(da, db, std::move(amp)), build_side(alice, da, "Alice"),
                     build_side(bob, db, "Bob")};
  if (qs.alice.empty() || qs.bob.empty()) {
    throw ValidationError("strategy file needs at least one measurement per player");
  }
  return qs;
}

std::string emit_strategy(const QuantumStrategy& strategy) {
  std::ostringstream out;
  const StateVector& st = strategy.state;
  out << "dims " << st.dim_a << ' ' << st.dim_b << '\n';
  for (const Complex& e : st.amp) {
    out << "state " << float_string(e.real()) << ' ' << float_string(e.imag()) << '\n';
  }
  const auto emit_side = [&out](const std::vector<ProjectiveMeasurement>& side,
                                const char* tag) {
    for (std::size_t i = 0; i < side.size(); ++i) {
      for (int k = 0; k < side[i].dim; ++k) {
        out << tag << ' ' << i + 1 << ' ' << k;
        for (const Complex& e : side[i].basis[static_cast<std::size_t>(k)]) {
          out << ' ' << float_string(e.real()) << ' ' << float_string(e.imag());
        }
        out << '\n';
      }
    }
  };
  emit_side(strategy.alice, "ameas");
  emit_side(strategy.bob, "bmeas");
  return out.str();
}

GameSpec parse_game_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open game file '" + path + "'");
  return parse_game(in);
}

BellFunctional parse_functional_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open functional file '" + path + "'");
  return parse_functional(in);
}

QuantumStrategy parse_strategy_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open strategy file '" + path + "'");
  return parse_strategy(in);
}

void write_file(const std::string& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ValidationError("cannot open '" + path + "' for writing");
  out << contents;
  if (!out) throw ValidationError("failed writing '" + path + "'");
}

}  // namespace bellgames
