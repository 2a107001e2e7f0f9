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

#include "ptgrid/game_io.h"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

#include "ptgrid/errors.h"

namespace ptgrid::game {
namespace {

class LineReader {
 public:
  LineReader(std::istream& in, std::string source)
      : in_(in), source_(std::move(source)) {}

  // Next non-blank, comment-stripped line; false at end of input.
  bool next(std::string& line) {
    while (std::getline(in_, line)) {
      ++number_;
      if (const auto hash = line.find('#'); hash != std::string::npos) {
        line.erase(hash);
      }
      if (line.find_first_not_of(" \t\r") != std::string::npos) return true;
    }
    return false;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw InputError(source_ + ":" + std::to_string(number_) + ": " + what);
  }

 private:
  std::istream& in_;
  std::string source_;
  int number_ = 0;
};

}  // namespace

FiniteGame parse_game(std::istream& in, const std::string& source) {
  LineReader reader(in, source);
  std::string line;
  std::string keyword;

  if (!reader.next(line)) reader.fail("missing 'players' header");
  std::istringstream header(line);
  int players = 0;
  if (!(header >> keyword >> players) || keyword != "players" || players < 2) {
    reader.fail("expected 'players K' with K >= 2");
  }

  if (!reader.next(line)) reader.fail("missing 'actions' line");
  std::istringstream actions_line(line);
  std::vector<int> counts;
  if (!(actions_line >> keyword) || keyword != "actions") {
    reader.fail("expected 'actions n1 ... nK'");
  }
  for (int n; actions_line >> n;) counts.push_back(n);
  if (!actions_line.eof() || static_cast<int>(counts.size()) != players) {
    reader.fail("expected " + std::to_string(players) + " action counts");
  }
  std::size_t joints = 1;
  for (int n : counts) {
    if (n < 2) reader.fail("every player needs at least 2 actions");
    joints *= static_cast<std::size_t>(n);
  }

  std::vector<double> payoffs;
  payoffs.reserve(joints * players);
  for (std::size_t r = 0; r < joints; ++r) {
    if (!reader.next(line)) {
      reader.fail("expected " + std::to_string(joints) +
                  " payoff lines, found " + std::to_string(r));
    }
    std::istringstream row(line);
    int k = 0;
    for (double v; row >> v; ++k) payoffs.push_back(v);
    if (!row.eof() || k != players) {
      reader.fail("expected " + std::to_string(players) + " numeric payoffs");
    }
  }
  if (reader.next(line)) reader.fail("trailing content after payoff table");
  try {
    return FiniteGame(std::move(counts), std::move(payoffs));
  } catch (const std::invalid_argument& e) {
    throw InputError(source + ": " + e.what());
  }
}

FiniteGame load_game(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open game file " + path.string());
  return parse_game(in, path.string());
}

void write_game(std::ostream& out, const FiniteGame& game) {
  const auto old_precision = out.precision(17);
  out << "players " << game.num_players() << "\nactions";
  for (int n : game.action_counts()) out << ' ' << n;
  out << '\n';
  for (std::size_t r = 0; r < game.num_joint_actions(); ++r) {
    for (int i = 0; i < game.num_players(); ++i) {
      out << (i ? " " : "") << game.payoff(i, r);
    }
    out << '\n';
  }
  out.precision(old_precision);
}

}  // namespace ptgrid::game
