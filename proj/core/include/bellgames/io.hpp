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

#include <iosfwd>
#include <string>
#include <string_view>

#include "bellgames/bell.hpp"
#include "bellgames/game.hpp"
#include "bellgames/quantum.hpp"

namespace bellgames {

// Plain-text, line-oriented formats with '#' comments. Inputs are 1-based,
// outputs 0-based. Parse errors carry line numbers. Emission is canonical:
// emit(parse(emit(x))) == emit(x) byte for byte (floats print with enough
// digits to round-trip).
//
//   game <name> <nx> <ny> <na> <nb>
//   prior <x> <y> <num>/<den>                      (all nx*ny cells)
//   pay <x> <y> <a> <b> <uA>/<den> <uB>/<den>      (all tuples)
//
//   bell <name> <nx> <ny> <na> <nb> <offset_num>/<offset_den>
//   coef <x> <y> <a> <b> <num>/<den>               (omitted tuples are 0)
//
//   dims <dA> <dB>
//   state <re> <im>                                (dA*dB lines, index a*dB+b)
//   ameas <i> <k> <re> <im> ...                    (basis vector k of Alice input i)
//   bmeas <j> <l> <re> <im> ...

GameSpec parse_game(std::istream& in);
GameSpec parse_game_file(const std::string& path);
std::string emit_game(const GameSpec& game);

BellFunctional parse_functional(std::istream& in);
BellFunctional parse_functional_file(const std::string& path);
std::string emit_functional(const BellFunctional& f);

QuantumStrategy parse_strategy(std::istream& in);
QuantumStrategy parse_strategy_file(const std::string& path);
std::string emit_strategy(const QuantumStrategy& strategy);

void write_file(const std::string& path, std::string_view contents);

}  // namespace bellgames
