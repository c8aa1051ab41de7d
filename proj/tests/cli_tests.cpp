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

// End-to-end tests against the installed binary: exit codes, output
// wording, and reproducibility guarantees.

#include <cmath>
#include <cstdio>
#include <sstream>
#include <string>
#include <vector>

#include "bellgames/game.hpp"
#include "bellgames/io.hpp"
#include "doctest.h"
#include "subprocess.hpp"
#include "test_support.hpp"

using namespace bellgames;
namespace bt = bellgames::testing;

namespace {

const std::string kCli = BELLGAMES_CLI_PATH;

std::string tmp_path(const std::string& stem) {
  return "/tmp/bellgames_cli_" + std::to_string(static_cast<long>(getpid())) + "_" +
         stem;
}

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) out.push_back(line);
  return out;
}

bool has_line(const std::string& text, const std::string& wanted) {
  for (const auto& line : lines_of(text)) {
    if (line == wanted) return true;
  }
  return false;
}

// First line starting with `key` returns its remainder, "" otherwise.
std::string value_after(const std::string& text, const std::string& key) {
  for (const auto& line : lines_of(text)) {
    if (line.rfind(key, 0) == 0) return line.substr(key.size());
  }
  return "";
}

std::string strip_command_echo(const std::string& text) {
  std::string out;
  for (const auto& line : lines_of(text)) {
    if (line.rfind("# command:", 0) == 0) continue;
    out += line;
    out += '\n';
  }
  return out;
}

}  // namespace

TEST_CASE("table game1 csv reproduces the full payoff table") {
  const auto r = bt::run_command(kCli + " table game1 --format csv");
  REQUIRE(r.exit_code == 0);
  CHECK(has_line(r.out, "profile,payA,payB,total,equilibrium"));
  const auto rows = bt::game1_rows();
  int yes_count = 0;
  for (const auto& row : rows) {
    const Rational pa(row.pa_num, row.pa_den);
    const Rational pb(row.pb_num, row.pb_den);
    const std::string want = std::string(row.profile) + "," + fraction_string(pa) +
                             "," + fraction_string(pb) + "," +
                             fraction_string(pa + pb) + "," +
                             (row.equilibrium ? "YES" : "no");
    CHECK(has_line(r.out, want));
    if (row.equilibrium) ++yes_count;
  }
  CHECK(yes_count == 3);
  CHECK(value_after(r.out, "# bellgames ") != "");
  CHECK(value_after(r.out, "# input-digest: ").size() == 16);
  CHECK(r.out.find("duration") == std::string::npos);
  CHECK(r.err.find("duration_ms:") != std::string::npos);
}

TEST_CASE("table text format uses compact rationals") {
  const auto r = bt::run_command(kCli + " table game1");
  REQUIRE(r.exit_code == 0);
  CHECK(r.out.find("profile") != std::string::npos);
  CHECK(r.out.find("0011") != std::string::npos);
  CHECK(r.out.find("YES") != std::string::npos);
  CHECK(r.out.find("3/2") != std::string::npos);
  CHECK(r.out.find("0/1") == std::string::npos);  // compact zero is "0"
}

TEST_CASE("classical summaries for all builtin games") {
  const auto r1 = bt::run_command(kCli + " classical game1");
  REQUIRE(r1.exit_code == 0);
  CHECK(has_line(r1.out, "classical_optimum: 3/2"));
  CHECK(has_line(r1.out, "profiles: 16"));
  CHECK(has_line(r1.out, "conflicting: yes"));
  CHECK(has_line(r1.out, "alice_preferred: 0100"));
  CHECK(has_line(r1.out, "bob_preferred: 1110"));
  int maximizers = 0;
  for (const auto& line : lines_of(r1.out)) {
    if (line.rfind("maximizer: ", 0) == 0) ++maximizers;
  }
  CHECK(maximizers == 8);

  const auto r2 = bt::run_command(kCli + " classical game2");
  REQUIRE(r2.exit_code == 0);
  CHECK(has_line(r2.out, "classical_optimum: 9/4"));
  CHECK(has_line(r2.out, "profiles: 81"));
  CHECK(has_line(r2.out, "conflicting: yes"));
  CHECK(has_line(r2.out, "alice_preferred: 0010"));
  CHECK(has_line(r2.out, "bob_preferred: 2122"));
  for (const auto& eq : bt::game2_equilibria()) {
    CHECK(r2.out.find("equilibrium: " + eq + " ") != std::string::npos);
  }

  const auto r3 = bt::run_command(kCli + " classical game3");
  REQUIRE(r3.exit_code == 0);
  CHECK(has_line(r3.out, "classical_optimum: 2/3"));
  CHECK(has_line(r3.out, "profiles: 64"));
  CHECK(has_line(r3.out, "conflicting: yes"));
  CHECK(has_line(r3.out, "alice_preferred: 000001"));
  CHECK(has_line(r3.out, "bob_preferred: 011111"));
}

TEST_CASE("the input digest identifies the game, not the command") {
  const auto a = bt::run_command(kCli + " table game1");
  const auto b = bt::run_command(kCli + " classical game1");
  const auto c = bt::run_command(kCli + " classical game2");
  const std::string da = value_after(a.out, "# input-digest: ");
  const std::string db = value_after(b.out, "# input-digest: ");
  const std::string dc = value_after(c.out, "# input-digest: ");
  CHECK(da == db);
  CHECK(da != dc);
}

TEST_CASE("quantum game1 --builtin reports the lifted fair point") {
  const auto r = bt::run_command(kCli + " quantum game1 --builtin");
  REQUIRE(r.exit_code == 0);
  CHECK(has_line(r.out, "total: 1.81066017"));
  CHECK(has_line(r.out, "payoff_alice: 0.90533009"));
  CHECK(has_line(r.out, "payoff_bob: 0.90533009"));
  CHECK(has_line(r.out, "fairness_gap: 0.00000000"));
  CHECK(has_line(r.out, "functional: cereceda1 = 1.20710678"));
  CHECK(has_line(r.out, "functional: cereceda2 = 1.20710678"));
  CHECK(r.out.find("P(0,0|1,1)") != std::string::npos);

  // quantum needs exactly one strategy source
  CHECK(bt::run_command(kCli + " quantum game1").exit_code == 1);
  CHECK(bt::run_command(kCli + " quantum game1 --builtin --strategy /tmp/x").exit_code ==
        1);
}

TEST_CASE("bell evaluations: profiles exactly, strategies numerically") {
  const auto profile = bt::run_command(kCli + " bell cereceda1 --profile 0011");
  REQUIRE(profile.exit_code == 0);
  CHECK(has_line(profile.out, "classical_bound: 1"));
  CHECK(has_line(profile.out, "value: 1"));
  CHECK(has_line(profile.out, "violated: no"));

  const auto quantum =
      bt::run_command(kCli + " bell cereceda1 --builtin-strategy game1");
  REQUIRE(quantum.exit_code == 0);
  CHECK(has_line(quantum.out, "value: 1.20710678"));
  CHECK(has_line(quantum.out, "violated: yes"));

  const auto bare = bt::run_command(kCli + " bell collins3");
  REQUIRE(bare.exit_code == 0);
  CHECK(has_line(bare.out, "classical_bound: 3"));
  CHECK(bare.out.find("value") == std::string::npos);

  const auto chained = bt::run_command(kCli + " bell chained3 --profile 000000");
  REQUIRE(chained.exit_code == 0);
  CHECK(has_line(chained.out, "classical_bound: 4"));
  CHECK(has_line(chained.out, "value: 4"));
  CHECK(has_line(chained.out, "violated: no"));

  // at most one source
  CHECK(bt::run_command(kCli +
                        " bell cereceda1 --profile 0011 --builtin-strategy game1")
            .exit_code == 1);
}

TEST_CASE("exit codes cover the documented failure classes") {
  // 0: success
  CHECK(bt::run_command(kCli + " bell cereceda1 --assert-bound 1").exit_code == 0);

  // 1: validation problems
  CHECK(bt::run_command(kCli + " table nonexistent_game_file").exit_code == 1);
  CHECK(bt::run_command(kCli + " nonsense").exit_code == 1);
  CHECK(bt::run_command(kCli + " table").exit_code == 1);
  const std::string bad = tmp_path("bad.game");
  write_file(bad, "game t 1 1 2 2\nprior 1 1 oops\n");
  const auto malformed = bt::run_command(kCli + " table " + bad);
  CHECK(malformed.exit_code == 1);
  CHECK(malformed.err.find("line 2") != std::string::npos);
  std::remove(bad.c_str());

  // 2: enumeration over the cap
  const std::string big = tmp_path("big.game");
  {
    std::string text = "game big 20 1 2 1\n";
    for (int x = 1; x <= 20; ++x) {
      text += "prior " + std::to_string(x) + " 1 1/20\n";
    }
    for (int x = 1; x <= 20; ++x) {
      for (int a = 0; a < 2; ++a) {
        text += "pay " + std::to_string(x) + " 1 " + std::to_string(a) +
                " 0 0/1 0/1\n";
      }
    }
    write_file(big, text);
  }
  const auto capacity = bt::run_command(kCli + " classical " + big);
  CHECK(capacity.exit_code == 2);
  CHECK(capacity.err.find("capacity") != std::string::npos);
  std::remove(big.c_str());

  // 3: integrity breach (asserted bound contradicts enumeration)
  const auto integrity =
      bt::run_command(kCli + " bell cereceda1 --assert-bound 1/2");
  CHECK(integrity.exit_code == 3);
  CHECK(integrity.err.find("integrity") != std::string::npos);
}

TEST_CASE("optimize finds the chsh optimum and is bit-reproducible") {
  const std::string cmd = kCli + " optimize --bell chsh --restarts 4 --seed 9";
  const auto first = bt::run_command(cmd);
  REQUIRE(first.exit_code == 0);
  const double best = std::stod(value_after(first.out, "best_value: "));
  CHECK(std::abs(best - bt::chsh_quantum()) <= 1e-6);
  CHECK(has_line(first.out, "converged: yes"));
  CHECK(has_line(first.out, "dim: 2"));
  CHECK(value_after(first.out, "trace_first: ") != "");
  CHECK(value_after(first.out, "trace_last: ") != "");
  int restarts = 0;
  for (const auto& line : lines_of(first.out)) {
    if (line.rfind("restart: ", 0) == 0) ++restarts;
  }
  CHECK(restarts == 4);

  const auto second = bt::run_command(cmd);
  CHECK(first.out == second.out);  // byte-identical rerun

  const auto threaded = bt::run_command(cmd + " --jobs 3");
  REQUIRE(threaded.exit_code == 0);
  CHECK(strip_command_echo(threaded.out) == strip_command_echo(first.out));
}

TEST_CASE("optimize game1 reaches the quantum total and emits a strategy") {
  const std::string emitted = tmp_path("winner.strategy");
  const auto r = bt::run_command(kCli + " optimize game1 --restarts 6 --seed 1" +
                                 " --emit-strategy " + emitted);
  REQUIRE(r.exit_code == 0);
  CHECK(has_line(r.out, "objective: game1_payoff"));
  const double best = std::stod(value_after(r.out, "best_value: "));
  CHECK(std::abs(best - bt::game1_quantum_total()) <= 1e-4);
  CHECK(has_line(r.out, "strategy_written: " + emitted));

  // The emitted file must parse and reproduce the reported value.
  const auto replay = bt::run_command(kCli + " quantum game1 --strategy " + emitted);
  REQUIRE(replay.exit_code == 0);
  const double total = std::stod(value_after(replay.out, "total: "));
  CHECK(std::abs(total - best) <= 1e-6);
  std::remove(emitted.c_str());

  // exactly one objective source
  CHECK(bt::run_command(kCli + " optimize game1 --bell chsh").exit_code == 1);
  CHECK(bt::run_command(kCli + " optimize").exit_code == 1);
}

TEST_CASE("show emits canonical text byte-identically") {
  const auto game = bt::run_command(kCli + " show game1");
  REQUIRE(game.exit_code == 0);
  CHECK(game.out == emit_game(builtin_game("game1")));

  const auto bell = bt::run_command(kCli + " show cereceda1");
  REQUIRE(bell.exit_code == 0);
  CHECK(bell.out.rfind("bell cereceda1 2 2 2 2 0/1\n", 0) == 0);

  const auto strategy = bt::run_command(kCli + " show game2 --type strategy");
  REQUIRE(strategy.exit_code == 0);
  CHECK(strategy.out.rfind("dims 3 3\n", 0) == 0);

  // Round trip through a file: canonical in, canonical out.
  const std::string path = tmp_path("roundtrip.game");
  write_file(path, game.out);
  const auto again = bt::run_command(kCli + " show " + path);
  REQUIRE(again.exit_code == 0);
  CHECK(again.out == game.out);
  std::remove(path.c_str());

  CHECK(bt::run_command(kCli + " show nonexistent_thing").exit_code == 1);
}

TEST_CASE("stdout is clean of wall-clock noise") {
  for (const char* cmd : {" classical game1", " bell chsh", " show game3"}) {
    const auto r = bt::run_command(kCli + cmd);
    REQUIRE(r.exit_code == 0);
    CHECK(r.out.find("duration") == std::string::npos);
    CHECK(r.err.find("duration_ms:") != std::string::npos);
  }
}
