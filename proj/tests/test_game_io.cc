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

#include <gtest/gtest.h>

#include <sstream>

#include "ptgrid/errors.h"
#include "ptgrid/game_io.h"

namespace ptgrid::game {
namespace {

TEST(GameIo, ParsesCommentsAndBlankLines) {
  std::istringstream in(
      "# header comment\n\nplayers 2\nactions 2 3  # trailing\n"
      "1 2\n3 4\n5 6\n7 8\n9 10\n11 12\n");
  const FiniteGame g = parse_game(in);
  EXPECT_EQ(g.num_actions(1), 3);
  EXPECT_EQ(g.payoff(1, std::vector<int>{1, 2}), 12.0);
  EXPECT_EQ(g.payoff(0, std::vector<int>{0, 1}), 3.0);
}

TEST(GameIo, RoundTripIsExact) {
  const FiniteGame g({2, 2, 2}, {0.1, -1e-7, 3.0, 1.0 / 3.0, 2, 3, 4, 5, 6, 7, 8, 9,
                                 10, 11, 12, 13, 14, 15, 16, 17, 18, 19, 20, 21});
  std::stringstream s;
  write_game(s, g);
  const FiniteGame h = parse_game(s);
  for (std::size_t r = 0; r < g.num_joint_actions(); ++r) {
    for (int i = 0; i < 3; ++i) EXPECT_EQ(g.payoff(i, r), h.payoff(i, r));
  }
}

TEST(GameIo, ErrorsCarryLineNumbers) {
  auto message = [](const std::string& text) {
    std::istringstream in(text);
    try {
      parse_game(in, "g.game");
    } catch (const InputError& e) {
      return std::string(e.what());
    }
    return std::string("no error");
  };
  EXPECT_NE(message("players 2\nactions 2 2\n1 1\n1 x\n1 1\n1 1\n").find("g.game:4"),
            std::string::npos);
  EXPECT_NE(message("players 2\nactions 2 2\n1 1\n1 1\n").find("g.game"), std::string::npos);
  EXPECT_NE(message("actions 2 2\n").find("g.game:1"), std::string::npos);
  EXPECT_NE(message("players 2\nactions 2 2\n1 1 1\n").find("g.game:3"), std::string::npos);
}

TEST(GameIo, MissingFileIsInputError) {
  EXPECT_THROW(load_game("/nonexistent/file.game"), InputError);
}

TEST(GameIo, BundledFixturesLoad) {
  for (const char* name : {"matching_pennies", "dominance", "random2x2"}) {
    const FiniteGame g =
        load_game(std::string(PTGRID_DATA_DIR) + "/games/" + name + ".game");
    EXPECT_EQ(g.num_players(), 2);
  }
}

}  // namespace
}  // namespace ptgrid::game
