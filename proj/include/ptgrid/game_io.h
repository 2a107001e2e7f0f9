// Copyright 2026 The ptgrid Authors
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

#ifndef PTGRID_GAME_IO_H_
#define PTGRID_GAME_IO_H_

// Plain-text game format:
//
//   # comments start with '#', blank lines are ignored
//   players K
//   actions n1 n2 ... nK
//   <K payoffs for joint action (0,...,0)>
//   <K payoffs for joint action (0,...,1)>
//   ...
//
// One payoff line per joint action in lexicographic order (last player's
// action varies fastest); entry k of a line is player k's payoff.

#include <filesystem>
#include <iosfwd>
#include <string>

#include "ptgrid/game.h"

namespace ptgrid::game {

// Throws InputError with a line number on malformed input.
FiniteGame parse_game(std::istream& in, const std::string& source = "<input>");
FiniteGame load_game(const std::filesystem::path& path);

void write_game(std::ostream& out, const FiniteGame& game);

}  // namespace ptgrid::game

#endif  // PTGRID_GAME_IO_H_
