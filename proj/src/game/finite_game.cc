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

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

#include "ptgrid/game.h"

namespace ptgrid::game {

FiniteGame::FiniteGame(std::vector<int> action_counts,
                       std::vector<double> payoffs)
    : action_counts_(std::move(action_counts)), payoffs_(std::move(payoffs)) {
  if (action_counts_.size() < 2) {
    throw std::invalid_argument("a game needs at least two players");
  }
  for (int n : action_counts_) {
    if (n < 2) throw std::invalid_argument("every player needs >= 2 actions");
    num_joint_ *= static_cast<std::size_t>(n);
  }
  const std::size_t players = action_counts_.size();
  if (payoffs_.size() != num_joint_ * players) {
    throw std::invalid_argument(
        "payoff table has " + std::to_string(payoffs_.size()) +
        " entries, expected " + std::to_string(num_joint_ * players));
  }
  for (double v : payoffs_) {
    if (!std::isfinite(v)) throw std::invalid_argument("non-finite payoff");
  }

  slices_.resize(players);
  std::vector<int> joint(players);
  for (int i = 0; i < num_players(); ++i) {
    const std::size_t opp = num_opponent_joints(i);
    slices_[i].assign(static_cast<std::size_t>(action_counts_[i]) * opp, 0.0);
  }
  // Opponent index of a joint action for player i: mixed radix over the
  // other players, in increasing order.
  for (std::size_t r = 0; r < num_joint_; ++r) {
    decode(r, joint);
    for (int i = 0; i < num_players(); ++i) {
      std::size_t opp_index = 0;
      for (int j = 0; j < num_players(); ++j) {
        if (j == i) continue;
        opp_index = opp_index * action_counts_[j] + joint[j];
      }
      slices_[i][joint[i] * num_opponent_joints(i) + opp_index] =
          payoffs_[r * players + i];
    }
  }
}

FiniteGame FiniteGame::from_function(std::vector<int> action_counts,
                                     const PayoffFn& payoff) {
  std::size_t joints = 1;
  for (int n : action_counts) joints *= static_cast<std::size_t>(std::max(n, 0));
  const std::size_t players = action_counts.size();
  std::vector<double> table(joints * players);
  std::vector<int> joint(players, 0);
  for (std::size_t r = 0; r < joints; ++r) {
    std::size_t rest = r;
    for (std::size_t k = players; k-- > 0;) {
      joint[k] = static_cast<int>(rest % action_counts[k]);
      rest /= action_counts[k];
    }
    for (std::size_t i = 0; i < players; ++i) {
      table[r * players + i] = payoff(static_cast<int>(i), joint);
    }
  }
  return FiniteGame(std::move(action_counts), std::move(table));
}

std::size_t FiniteGame::num_opponent_joints(int player) const {
  return num_joint_ / static_cast<std::size_t>(action_counts_.at(player));
}

std::size_t FiniteGame::joint_index(std::span<const int> joint) const {
  if (joint.size() != action_counts_.size()) {
    throw std::out_of_range("joint action has wrong arity");
  }
  std::size_t index = 0;
  for (std::size_t k = 0; k < joint.size(); ++k) {
    if (joint[k] < 0 || joint[k] >= action_counts_[k]) {
      throw std::out_of_range("action index out of range");
    }
    index = index * action_counts_[k] + joint[k];
  }
  return index;
}

void FiniteGame::decode(std::size_t index, std::span<int> joint) const {
  for (std::size_t k = action_counts_.size(); k-- > 0;) {
    joint[k] = static_cast<int>(index % action_counts_[k]);
    index /= action_counts_[k];
  }
}

double FiniteGame::payoff(int player, std::size_t joint_index) const {
  if (player < 0 || player >= num_players()) {
    throw std::out_of_range("player index out of range");
  }
  return payoffs_.at(joint_index * action_counts_.size() + player);
}

std::span<const double> FiniteGame::own_action_slice(int player,
                                                     int action) const {
  const std::size_t opp = num_opponent_joints(player);
  return std::span<const double>(slices_.at(player)).subspan(action * opp, opp);
}

double FiniteGame::min_payoff(int player) const {
  return *std::min_element(slices_.at(player).begin(), slices_[player].end());
}

double FiniteGame::max_payoff(int player) const {
  return *std::max_element(slices_.at(player).begin(), slices_[player].end());
}

MixedProfile MixedProfile::uniform(const FiniteGame& game) {
  MixedProfile p;
  for (int n : game.action_counts()) p.strategies.emplace_back(n, 1.0 / n);
  return p;
}

MixedProfile MixedProfile::pure(const FiniteGame& game,
                                std::span<const int> actions) {
  if (static_cast<int>(actions.size()) != game.num_players()) {
    throw std::invalid_argument("pure profile has wrong arity");
  }
  MixedProfile p;
  for (int i = 0; i < game.num_players(); ++i) {
    p.strategies.emplace_back(game.num_actions(i), 0.0);
    p.strategies.back().at(actions[i]) = 1.0;
  }
  return p;
}

void MixedProfile::validate(const FiniteGame& game) const {
  if (num_players() != game.num_players()) {
    throw std::invalid_argument("profile has " + std::to_string(num_players()) +
                                " players, game has " +
                                std::to_string(game.num_players()));
  }
  for (int i = 0; i < num_players(); ++i) {
    const auto& s = strategies[i];
    if (static_cast<int>(s.size()) != game.num_actions(i)) {
      throw std::invalid_argument("strategy length mismatch for player " +
                                  std::to_string(i));
    }
    double total = 0.0;
    for (double v : s) {
      if (!(v >= 0.0) || !std::isfinite(v)) {
        throw std::invalid_argument("negative or non-finite probability");
      }
      total += v;
    }
    if (std::abs(total - 1.0) > 1e-9) {
      throw std::invalid_argument("strategy of player " + std::to_string(i) +
                                  " sums to " + std::to_string(total));
    }
  }
}

double max_abs_difference(const MixedProfile& a, const MixedProfile& b) {
  double d = 0.0;
  for (int i = 0; i < a.num_players(); ++i) {
    for (std::size_t k = 0; k < a[i].size(); ++k) {
      d = std::max(d, std::abs(a[i][k] - b[i][k]));
    }
  }
  return d;
}

}  // namespace ptgrid::game
