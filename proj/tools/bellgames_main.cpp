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

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "bellgames/bell.hpp"
#include "bellgames/errors.hpp"
#include "bellgames/game.hpp"
#include "bellgames/io.hpp"
#include "bellgames/quantum.hpp"
#include "bellgames/seesaw.hpp"
#include "bellgames/version.hpp"

namespace {

using namespace bellgames;

std::string format_float(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%.8f", value);
  return buffer;
}

std::uint64_t fnv1a(std::string_view text, std::uint64_t h = 14695981039346656037ULL) {
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

std::string hex64(std::uint64_t v) {
  char buffer[20];
  std::snprintf(buffer, sizeof buffer, "%016llx", static_cast<unsigned long long>(v));
  return buffer;
}

// Everything a command run reports besides its payload. All of it except the
// duration is a pure function of the inputs, so stdout stays bit-reproducible;
// the wall-clock duration goes to stderr.
struct RunReport {
  std::string command;
  std::uint64_t digest = 14695981039346656037ULL;

  void absorb(std::string_view canonical_input) { digest = fnv1a(canonical_input, digest); }

  void print_header(std::ostream& out) const {
    out << "# bellgames " << kVersion << '\n';
    out << "# command: " << command << '\n';
    out << "# input-digest: " << hex64(digest) << '\n';
  }
};

GameSpec load_game(const std::string& ref, RunReport& report) {
  const auto& names = builtin_game_names();
  GameSpec game = std::find(names.begin(), names.end(), ref) != names.end()
                      ? builtin_game(ref)
                      : parse_game_file(ref);
  report.absorb(emit_game(game));
  return game;
}

BellFunctional load_functional(const std::string& ref, RunReport& report) {
  const auto& names = builtin_functional_names();
  BellFunctional f = std::find(names.begin(), names.end(), ref) != names.end()
                         ? builtin_functional(ref)
                         : parse_functional_file(ref);
  report.absorb(emit_functional(f));
  return f;
}

std::string join_args(int argc, char** argv) {
  std::string out;
  for (int i = 1; i < argc; ++i) {
    if (i > 1) out += ' ';
    out += argv[i];
  }
  return out;
}

std::string rational_text(const Rational& r) { return compact_string(r); }
std::string rational_csv(const Rational& r) { return fraction_string(r); }

struct TableOptions {
  std::string game_ref;
  std::string format = "text";
};

void run_table(const TableOptions& opt, RunReport& report) {
  const GameSpec game = load_game(opt.game_ref, report);
  const std::vector<ProfilePayoff> rows = enumerate_profiles(game);
  std::set<PureProfile> equilibria;
  for (const ProfilePayoff& eq : find_pure_equilibria(game)) {
    equilibria.insert(eq.profile);
  }

  report.print_header(std::cout);
  if (opt.format == "csv") {
    std::cout << "profile,payA,payB,total,equilibrium\n";
    for (const ProfilePayoff& row : rows) {
      std::cout << row.profile.str() << ',' << rational_csv(*row.payoffs.exact_a) << ','
                << rational_csv(*row.payoffs.exact_b) << ','
                << rational_csv(*row.payoffs.exact_total()) << ','
                << (equilibria.count(row.profile) ? "YES" : "no") << '\n';
    }
    return;
  }
  std::vector<std::vector<std::string>> cells;
  cells.push_back({"profile", "payA", "payB", "total", "equilibrium"});
  for (const ProfilePayoff& row : rows) {
    cells.push_back({row.profile.str(), rational_text(*row.payoffs.exact_a),
                     rational_text(*row.payoffs.exact_b),
                     rational_text(*row.payoffs.exact_total()),
                     equilibria.count(row.profile) ? "YES" : "no"});
  }
  std::vector<std::size_t> width(cells.front().size(), 0);
  for (const auto& row : cells) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      width[c] = std::max(width[c], row[c].size());
    }
  }
  for (const auto& row : cells) {
    std::string line;
    for (std::size_t c = 0; c < row.size(); ++c) {
      line += row[c];
      if (c + 1 < row.size()) {
        line.append(width[c] - row[c].size() + 2, ' ');
      }
    }
    std::cout << line << '\n';
  }
}

struct ClassicalOptions {
  std::string game_ref;
  std::string format = "text";
};

void run_classical(const ClassicalOptions& opt, RunReport& report) {
  const GameSpec game = load_game(opt.game_ref, report);
  const ClassicalOptimum optimum = classical_optimum(game);
  const std::vector<ProfilePayoff> equilibria = find_pure_equilibria(game);
  const ConflictReport conflict = conflict_report(game);

  report.print_header(std::cout);
  const bool csv = opt.format == "csv";
  const auto rat = csv ? rational_csv : rational_text;
  const char* sep = csv ? "," : ": ";

  std::cout << "game" << sep << game.name << '\n';
  std::cout << "profiles" << sep << profile_count(game) << '\n';
  std::cout << "classical_optimum" << sep << rat(optimum.value) << '\n';
  for (const PureProfile& p : optimum.maximizers) {
    std::cout << "maximizer" << sep << p.str() << '\n';
  }
  for (const ProfilePayoff& eq : equilibria) {
    std::cout << "equilibrium" << sep << eq.profile.str() << (csv ? "," : " ")
              << rat(*eq.payoffs.exact_a) << (csv ? "," : " ")
              << rat(*eq.payoffs.exact_b) << '\n';
  }
  std::cout << "conflicting" << sep << (conflict.conflicting ? "yes" : "no") << '\n';
  for (const ProfilePayoff& eq : conflict.alice_preferred) {
    std::cout << "alice_preferred" << sep << eq.profile.str() << '\n';
  }
  for (const ProfilePayoff& eq : conflict.bob_preferred) {
    std::cout << "bob_preferred" << sep << eq.profile.str() << '\n';
  }
}

struct QuantumOptions {
  std::string game_ref;
  bool builtin = false;
  std::string strategy_path;
  std::string format = "text";
};

void run_quantum(const QuantumOptions& opt, RunReport& report) {
  const GameSpec game = load_game(opt.game_ref, report);
  if (opt.builtin == !opt.strategy_path.empty()) {
    throw ValidationError("pass exactly one of --builtin or --strategy <path>");
  }
  const QuantumStrategy strategy =
      opt.builtin ? builtin_strategy(game.name) : parse_strategy_file(opt.strategy_path);
  report.absorb(emit_strategy(strategy));

  const Behavior behavior = behavior_from_quantum(game, strategy);
  const PayoffPair payoffs = expected_payoffs(game, behavior);

  report.print_header(std::cout);
  const bool csv = opt.format == "csv";
  const char* sep = csv ? "," : ": ";
  std::cout << "game" << sep << game.name << '\n';
  std::cout << "strategy" << sep << (opt.builtin ? "builtin" : opt.strategy_path) << '\n';
  if (!csv) std::cout << "behavior:\n";
  for (int x = 0; x < behavior.nx; ++x) {
    for (int y = 0; y < behavior.ny; ++y) {
      for (int a = 0; a < behavior.na; ++a) {
        for (int b = 0; b < behavior.nb; ++b) {
          if (csv) {
            std::cout << "P," << x + 1 << ',' << y + 1 << ',' << a << ',' << b << ','
                      << format_float(behavior.at(x, y, a, b)) << '\n';
          } else {
            std::cout << "  P(" << a << ',' << b << '|' << x + 1 << ',' << y + 1
                      << ") = " << format_float(behavior.at(x, y, a, b)) << '\n';
          }
        }
      }
    }
  }
  std::cout << "payoff_alice" << sep << format_float(payoffs.pay_a) << '\n';
  std::cout << "payoff_bob" << sep << format_float(payoffs.pay_b) << '\n';
  std::cout << "total" << sep << format_float(payoffs.total()) << '\n';
  std::cout << "fairness_gap" << sep
            << format_float(std::abs(payoffs.pay_a - payoffs.pay_b)) << '\n';
  for (const std::string& name : builtin_functional_names()) {
    const BellFunctional f = builtin_functional(name);
    if (f.nx != behavior.nx || f.ny != behavior.ny || f.na != behavior.na ||
        f.nb != behavior.nb) {
      continue;
    }
    std::cout << "functional" << sep << name << (csv ? "," : " = ")
              << format_float(evaluate(f, behavior)) << '\n';
  }
}

struct OptimizeOptions {
  std::string game_ref;
  std::string bell_ref;
  int dim = 0;  // 0 = derive from outcome counts
  SeesawConfig cfg;
  std::string emit_path;
  std::string format = "text";
};

void run_optimize(const OptimizeOptions& opt, RunReport& report) {
  if (opt.game_ref.empty() == opt.bell_ref.empty()) {
    throw ValidationError("pass exactly one of <game-ref> or --bell <functional-ref>");
  }
  std::optional<BellFunctional> functional;
  if (!opt.game_ref.empty()) {
    const GameSpec game = load_game(opt.game_ref, report);
    functional = functional_from_game(game, Rational(1), Rational(1));
  } else {
    functional = load_functional(opt.bell_ref, report);
  }
  SeesawConfig cfg = opt.cfg;
  cfg.dim = opt.dim > 0 ? opt.dim : std::max({2, functional->na, functional->nb});
  const SeesawResult result = seesaw(*functional, cfg);
  if (!opt.emit_path.empty()) {
    write_file(opt.emit_path, emit_strategy(result.best_strategy));
  }

  report.print_header(std::cout);
  const bool csv = opt.format == "csv";
  const char* sep = csv ? "," : ": ";
  std::cout << "objective" << sep << functional->name << '\n';
  std::cout << "dim" << sep << cfg.dim << '\n';
  std::cout << "restarts" << sep << cfg.restarts << '\n';
  std::cout << "seed" << sep << cfg.seed << '\n';
  std::cout << "best_value" << sep << format_float(result.best_value) << '\n';
  std::cout << "converged" << sep << (result.converged ? "yes" : "no") << '\n';
  std::cout << "trace_iterations" << sep << result.trace.size() << '\n';
  std::cout << "trace_first" << sep << format_float(result.trace.front()) << '\n';
  std::cout << "trace_last" << sep << format_float(result.trace.back()) << '\n';
  for (std::size_t r = 0; r < result.restart_values.size(); ++r) {
    std::cout << "restart" << sep << r << (csv ? "," : " ")
              << format_float(result.restart_values[r]) << '\n';
  }
  if (!opt.emit_path.empty()) {
    std::cout << "strategy_written" << sep << opt.emit_path << '\n';
  }
}

struct BellOptions {
  std::string functional_ref;
  std::string profile;
  std::string builtin_strategy_name;
  std::string strategy_path;
  std::string assert_bound;
  std::string format = "text";
};

Behavior delta_behavior(const BellFunctional& f, const PureProfile& profile) {
  const std::size_t entries = static_cast<std::size_t>(f.nx) * f.ny * f.na * f.nb;
  std::vector<double> probs(entries, 0.0);
  std::vector<Rational> exact(entries, Rational(0));
  for (int x = 0; x < f.nx; ++x) {
    for (int y = 0; y < f.ny; ++y) {
      const std::size_t i = f.index(x, y, profile.alice[static_cast<std::size_t>(x)],
                                    profile.bob[static_cast<std::size_t>(y)]);
      probs[i] = 1.0;
      exact[i] = Rational(1);
    }
  }
  return Behavior(f.nx, f.ny, f.na, f.nb, std::move(probs), std::move(exact));
}

void run_bell(const BellOptions& opt, RunReport& report) {
  BellFunctional f = load_functional(opt.functional_ref, report);
  const int sources = (opt.profile.empty() ? 0 : 1) +
                      (opt.builtin_strategy_name.empty() ? 0 : 1) +
                      (opt.strategy_path.empty() ? 0 : 1);
  if (sources > 1) {
    throw ValidationError("pass at most one of --profile, --builtin-strategy, "
                          "--strategy");
  }
  if (!opt.assert_bound.empty()) {
    f.claimed_classical_bound = parse_rational(opt.assert_bound);
  }
  const Rational bound = classical_bound_bruteforce(f);

  report.print_header(std::cout);
  const bool csv = opt.format == "csv";
  const char* sep = csv ? "," : ": ";
  const auto rat = csv ? rational_csv : rational_text;
  std::cout << "functional" << sep << f.name << '\n';
  std::cout << "classical_bound" << sep << rat(bound) << '\n';
  if (sources == 0) return;

  if (!opt.profile.empty()) {
    const PureProfile profile = PureProfile::parse(opt.profile, f.nx, f.ny);
    for (int a : profile.alice) {
      if (a >= f.na) throw ValidationError("profile output out of range");
    }
    for (int b : profile.bob) {
      if (b >= f.nb) throw ValidationError("profile output out of range");
    }
    const Behavior behavior = delta_behavior(f, profile);
    const Rational value = evaluate_exact(f, behavior);
    std::cout << "source" << sep << "profile " << opt.profile << '\n';
    std::cout << "value" << sep << rat(value) << '\n';
    std::cout << "violated" << sep << (value > bound ? "yes" : "no") << '\n';
    return;
  }
  const QuantumStrategy strategy = !opt.builtin_strategy_name.empty()
                                       ? builtin_strategy(opt.builtin_strategy_name)
                                       : parse_strategy_file(opt.strategy_path);
  report.absorb(emit_strategy(strategy));
  const Behavior behavior = behavior_from_quantum(strategy);
  if (behavior.nx != f.nx || behavior.ny != f.ny || behavior.na != f.na ||
      behavior.nb != f.nb) {
    throw ValidationError("strategy dimensions do not match functional '" + f.name +
                          "'");
  }
  const double value = evaluate(f, behavior);
  std::cout << "source" << sep
            << (!opt.builtin_strategy_name.empty()
                    ? "builtin-strategy " + opt.builtin_strategy_name
                    : "strategy " + opt.strategy_path)
            << '\n';
  std::cout << "value" << sep << format_float(value) << '\n';
  std::cout << "violated" << sep << (value > to_double(bound) + 1e-9 ? "yes" : "no")
            << '\n';
}

struct ShowOptions {
  std::string ref;
  std::string type = "auto";
};

void run_show(const ShowOptions& opt) {
  const auto is_builtin = [](const std::vector<std::string>& names,
                             const std::string& ref) {
    return std::find(names.begin(), names.end(), ref) != names.end();
  };
  if (opt.type == "game" || opt.type == "auto") {
    if (is_builtin(builtin_game_names(), opt.ref)) {
      std::cout << emit_game(builtin_game(opt.ref));
      return;
    }
  }
  if (opt.type == "bell" || opt.type == "auto") {
    if (is_builtin(builtin_functional_names(), opt.ref)) {
      std::cout << emit_functional(builtin_functional(opt.ref));
      return;
    }
  }
  if (opt.type == "strategy") {
    if (opt.ref == "game1" || opt.ref == "game2" || opt.ref == "game3" ||
        opt.ref == "chsh") {
      std::cout << emit_strategy(builtin_strategy(opt.ref));
      return;
    }
  }
  if (!std::filesystem::exists(opt.ref)) {
    throw NotFoundError("'" + opt.ref + "' is neither a builtin name nor a file");
  }
  // Sniff the header keyword to pick a parser.
  std::ifstream in(opt.ref);
  std::string first;
  in >> first;
  in.close();
  if (first == "game" && (opt.type == "auto" || opt.type == "game")) {
    std::cout << emit_game(parse_game_file(opt.ref));
  } else if (first == "bell" && (opt.type == "auto" || opt.type == "bell")) {
    std::cout << emit_functional(parse_functional_file(opt.ref));
  } else if (first == "dims" && (opt.type == "auto" || opt.type == "strategy")) {
    std::cout << emit_strategy(parse_strategy_file(opt.ref));
  } else {
    throw ValidationError("file '" + opt.ref + "' does not start with a known header");
  }
}

}  // namespace

int main(int argc, char** argv) {
  const auto start = std::chrono::steady_clock::now();

  CLI::App app{"Bayesian games, Bell functionals, and quantum strategies"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);

  TableOptions table_opt;
  CLI::App* table = app.add_subcommand(
      "table", "List every deterministic profile with exact payoffs");
  table->add_option("game", table_opt.game_ref, "builtin name or game file")->required();
  table->add_option("--format", table_opt.format, "text or csv")
      ->check(CLI::IsMember({"text", "csv"}));

  ClassicalOptions classical_opt;
  CLI::App* classical = app.add_subcommand(
      "classical", "Classical optimum, equilibria, and conflict structure");
  classical->add_option("game", classical_opt.game_ref, "builtin name or game file")
      ->required();
  classical->add_option("--format", classical_opt.format, "text or csv")
      ->check(CLI::IsMember({"text", "csv"}));

  QuantumOptions quantum_opt;
  CLI::App* quantum = app.add_subcommand(
      "quantum", "Evaluate a quantum strategy on a game via the Born rule");
  quantum->add_option("game", quantum_opt.game_ref, "builtin name or game file")
      ->required();
  quantum->add_flag("--builtin", quantum_opt.builtin,
                    "use the frozen strategy shipped for this builtin game");
  quantum->add_option("--strategy", quantum_opt.strategy_path, "strategy file");
  quantum->add_option("--format", quantum_opt.format, "text or csv")
      ->check(CLI::IsMember({"text", "csv"}));

  OptimizeOptions optimize_opt;
  CLI::App* optimize = app.add_subcommand(
      "optimize", "Maximize a payoff or Bell functional over quantum strategies");
  optimize->add_option("game", optimize_opt.game_ref,
                       "builtin name or game file (total payoff objective)");
  optimize->add_option("--bell", optimize_opt.bell_ref,
                       "builtin functional name or functional file");
  optimize->add_option("--dim", optimize_opt.dim, "local Hilbert dimension (2-4)");
  optimize->add_option("--restarts", optimize_opt.cfg.restarts, "restart count");
  optimize->add_option("--max-iters", optimize_opt.cfg.max_iters,
                       "iteration cap per restart");
  optimize->add_option("--tol", optimize_opt.cfg.tol, "convergence threshold");
  optimize->add_option("--seed", optimize_opt.cfg.seed, "RNG seed (u64)");
  optimize->add_option("--jobs", optimize_opt.cfg.jobs,
                       "worker threads (does not affect results)");
  optimize->add_option("--emit-strategy", optimize_opt.emit_path,
                       "write the winning strategy to this file");
  optimize->add_option("--format", optimize_opt.format, "text or csv")
      ->check(CLI::IsMember({"text", "csv"}));

  BellOptions bell_opt;
  CLI::App* bell = app.add_subcommand(
      "bell", "Evaluate a Bell functional and its brute-force classical bound");
  bell->add_option("functional", bell_opt.functional_ref,
                   "builtin functional name or functional file")
      ->required();
  bell->add_option("--profile", bell_opt.profile,
                   "deterministic profile digits (Alice outputs then Bob's)");
  bell->add_option("--builtin-strategy", bell_opt.builtin_strategy_name,
                   "builtin quantum strategy name");
  bell->add_option("--strategy", bell_opt.strategy_path, "strategy file");
  bell->add_option("--assert-bound", bell_opt.assert_bound,
                   "rational the brute-forced classical bound must equal "
                   "(integrity failure otherwise)");
  bell->add_option("--format", bell_opt.format, "text or csv")
      ->check(CLI::IsMember({"text", "csv"}));

  ShowOptions show_opt;
  CLI::App* show = app.add_subcommand(
      "show", "Emit the canonical file form of a builtin or file object");
  show->add_option("ref", show_opt.ref, "builtin name or file path")->required();
  show->add_option("--type", show_opt.type, "game, bell, strategy, or auto")
      ->check(CLI::IsMember({"auto", "game", "bell", "strategy"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }

  int code = 0;
  try {
    RunReport report;
    report.command = join_args(argc, argv);
    if (table->parsed()) {
      run_table(table_opt, report);
    } else if (classical->parsed()) {
      run_classical(classical_opt, report);
    } else if (quantum->parsed()) {
      run_quantum(quantum_opt, report);
    } else if (optimize->parsed()) {
      run_optimize(optimize_opt, report);
    } else if (bell->parsed()) {
      run_bell(bell_opt, report);
    } else if (show->parsed()) {
      run_show(show_opt);
    }
  } catch (const CapacityError& e) {
    std::cerr << "capacity error: " << e.what() << '\n';
    code = 2;
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    code = 1;
  } catch (const IntegrityError& e) {
    std::cerr << "integrity error: " << e.what() << '\n';
    code = 3;
  } catch (const std::exception& e) {
    std::cerr << "integrity error: " << e.what() << '\n';
    code = 3;
  }

  const auto elapsed = std::chrono::steady_clock::now() - start;
  std::fprintf(stderr, "duration_ms: %.3f\n",
               std::chrono::duration<double, std::milli>(elapsed).count());
  return code;
}
