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

#ifndef PTGRID_GAME_H_
#define PTGRID_GAME_H_

// Finite normal-form games and their EUT / prospect-theoretic utilities.
//
// Joint actions are indexed lexicographically with player 0 most significant
// (the last player's action varies fastest). The same order is used by the
// plain-text game format and by opponent joint actions, which list the
// opponents in increasing player order.

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "ptgrid/prospect.h"

namespace ptgrid::game {

class FiniteGame {
 public:
  // `payoffs` holds num_joint_actions() rows of num_players() entries, row r
  // being the payoff vector of joint action r.
  FiniteGame(std::vector<int> action_counts, std::vector<double> payoffs);

  using PayoffFn = std::function<double(int player, std::span<const int> joint)>;
  static FiniteGame from_function(std::vector<int> action_counts,
                                  const PayoffFn& payoff);

  int num_players() const { return static_cast<int>(action_counts_.size()); }
  const std::vector<int>& action_counts() const { return action_counts_; }
  int num_actions(int player) const { return action_counts_.at(player); }
  std::size_t num_joint_actions() const { return num_joint_; }
  std::size_t num_opponent_joints(int player) const;

  std::size_t joint_index(std::span<const int> joint) const;
  void decode(std::size_t index, std::span<int> joint) const;

  double payoff(int player, std::size_t joint_index) const;
  double payoff(int player, std::span<const int> joint) const {
    return payoff(player, joint_index(joint));
  }

  // Payoffs of `player` playing `action`, over the opponents' joint actions.
  std::span<const double> own_action_slice(int player, int action) const;

  double min_payoff(int player) const;
  double max_payoff(int player) const;

 private:
  std::vector<int> action_counts_;
  std::size_t num_joint_ = 1;
  std::vector<double> payoffs_;
  // Per player: num_actions(player) blocks of num_opponent_joints(player).
  std::vector<std::vector<double>> slices_;
};

// Per-player probability vectors over own actions.
struct MixedProfile {
  std::vector<std::vector<double>> strategies;

  static MixedProfile uniform(const FiniteGame& game);
  static MixedProfile pure(const FiniteGame& game, std::span<const int> actions);

  const std::vector<double>& operator[](int player) const {
    return strategies[player];
  }
  std::vector<double>& operator[](int player) { return strategies[player]; }
  int num_players() const { return static_cast<int>(strategies.size()); }

  // Throws std::invalid_argument unless every vector matches the game's
  // action count, is non-negative and sums to 1 within 1e-9.
  void validate(const FiniteGame& game) const;
};

double max_abs_difference(const MixedProfile& a, const MixedProfile& b);

// How opponents' probabilities become decision weights.
struct WeightingOptions {
  enum class Mode {
    kJointThenWeight,    // w(prod_j x_j(o_j))
    kWeightThenMultiply  // prod_j w(x_j(o_j))
  };
  Mode mode = Mode::kJointThenWeight;
  // Divide the decision weights by their sum. Off by default: prospect theory
  // applies the weights directly.
  bool renormalize = false;
};

using Behaviors = std::vector<pt::PtProfile>;

Behaviors eut_behaviors(int num_players);
Behaviors weighting_behaviors(std::span<const double> alphas);

double eut_utility(const FiniteGame& game, int player,
                   const MixedProfile& profile);

// Evaluates prospect-theoretic action values for a fixed game and fixed
// per-player behavior. Framed payoffs are computed once at construction; the
// evaluator is immutable afterwards and safe to share across threads.
class UtilityEvaluator {
 public:
  UtilityEvaluator(const FiniteGame& game, Behaviors behaviors,
                   WeightingOptions options = {});

  int num_players() const { return static_cast<int>(action_counts_.size()); }
  int num_actions(int player) const { return action_counts_[player]; }
  const Behaviors& behaviors() const { return behaviors_; }

  // Decision weights over the opponents' joint actions of `player`.
  std::vector<double> decision_weights(int player,
                                       const MixedProfile& profile) const;

  // values[a] = sum_o w(q(o)) v(payoff(player, a, o)). Returns the weight
  // mass sum_o w(q(o)).
  double action_values(int player, const MixedProfile& profile,
                       std::span<double> values) const;

  double utility(int player, const MixedProfile& profile) const;

  // Lowest-index-first set of actions maximizing the action value.
  std::vector<int> best_response(int player, const MixedProfile& profile) const;

  // max_i (best pure deviation value - current value).
  double residual(const MixedProfile& profile) const;
  // Same gap per player, divided by that player's weight mass; equal to
  // residual() under EUT.
  double normalized_residual(const MixedProfile& profile) const;

  // max - min of the framed payoffs of `player`; 1 if the game is flat.
  double payoff_spread(int player) const { return spread_[player]; }

 private:
  std::vector<int> action_counts_;
  Behaviors behaviors_;
  WeightingOptions options_;
  std::vector<std::vector<double>> framed_;
  std::vector<std::size_t> opp_joints_;
  std::vector<double> spread_;
};

double pt_utility(const FiniteGame& game, int player,
                  const MixedProfile& profile, const Behaviors& behaviors,
                  WeightingOptions options = {});

std::vector<int> best_response(const FiniteGame& game, int player,
                               const MixedProfile& profile,
                               const Behaviors& behaviors,
                               WeightingOptions options = {});

}  // namespace ptgrid::game

#endif  // PTGRID_GAME_H_
