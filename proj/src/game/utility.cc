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
#include <stdexcept>

#include "ptgrid/game.h"
#include "ptgrid/kernels.h"

namespace ptgrid::game {
namespace {

constexpr double kTieTolerance = 1e-12;

// Opponents' joint probabilities of `player`, lexicographic over opponents.
std::vector<double> opponent_joint(const MixedProfile& profile, int player,
                                   std::size_t size_hint) {
  std::vector<double> q{1.0};
  q.reserve(size_hint);
  std::vector<double> next;
  next.reserve(size_hint);
  for (int j = 0; j < profile.num_players(); ++j) {
    if (j == player) continue;
    next.resize(q.size() * profile[j].size());
    simd::outer(q, profile[j], next);
    q.swap(next);
  }
  return q;
}

void check_player(int player, int n) {
  if (player < 0 || player >= n) {
    throw std::out_of_range("player index " + std::to_string(player) +
                            " out of range");
  }
}

}  // namespace

Behaviors eut_behaviors(int num_players) {
  return Behaviors(static_cast<std::size_t>(num_players), pt::PtProfile::eut());
}

Behaviors weighting_behaviors(std::span<const double> alphas) {
  Behaviors b;
  b.reserve(alphas.size());
  for (double a : alphas) b.push_back(pt::PtProfile::weighting_only(a));
  return b;
}

double eut_utility(const FiniteGame& game, int player,
                   const MixedProfile& profile) {
  check_player(player, game.num_players());
  profile.validate(game);
  const std::vector<double> q =
      opponent_joint(profile, player, game.num_opponent_joints(player));
  double total = 0.0;
  for (int a = 0; a < game.num_actions(player); ++a) {
    const double pa = profile[player][a];
    if (pa == 0.0) continue;
    total += pa * simd::dot(q, game.own_action_slice(player, a));
  }
  return total;
}

UtilityEvaluator::UtilityEvaluator(const FiniteGame& game, Behaviors behaviors,
                                   WeightingOptions options)
    : action_counts_(game.action_counts()),
      behaviors_(std::move(behaviors)),
      options_(options) {
  if (static_cast<int>(behaviors_.size()) != game.num_players()) {
    throw std::invalid_argument("need one behavioral profile per player");
  }
  const int n = game.num_players();
  framed_.resize(n);
  opp_joints_.resize(n);
  spread_.resize(n);
  for (int i = 0; i < n; ++i) {
    behaviors_[i].frame.validate();
    opp_joints_[i] = game.num_opponent_joints(i);
    auto& f = framed_[i];
    f.reserve(opp_joints_[i] * action_counts_[i]);
    for (int a = 0; a < action_counts_[i]; ++a) {
      for (double u : game.own_action_slice(i, a)) {
        f.push_back(behaviors_[i].frame.is_identity()
                        ? u
                        : pt::frame_value(u, behaviors_[i].frame));
      }
    }
    const auto [lo, hi] = std::minmax_element(f.begin(), f.end());
    spread_[i] = *hi > *lo ? *hi - *lo : 1.0;
  }
}

std::vector<double> UtilityEvaluator::decision_weights(
    int player, const MixedProfile& profile) const {
  check_player(player, num_players());
  const pt::PrelecWeighting& w = behaviors_[player].weighting;
  std::vector<double> q;
  if (options_.mode == WeightingOptions::Mode::kJointThenWeight ||
      w.is_rational()) {
    q = opponent_joint(profile, player, opp_joints_[player]);
    if (!w.is_rational()) {
      for (double& v : q) v = w(std::min(v, 1.0));
    }
  } else {
    MixedProfile weighted = profile;
    for (int j = 0; j < weighted.num_players(); ++j) {
      if (j == player) continue;
      for (double& v : weighted[j]) v = w(std::min(v, 1.0));
    }
    q = opponent_joint(weighted, player, opp_joints_[player]);
  }
  if (options_.renormalize) {
    const double mass = simd::sum(q);
    if (mass > 0.0) {
      for (double& v : q) v /= mass;
    }
  }
  return q;
}

double UtilityEvaluator::action_values(int player, const MixedProfile& profile,
                                       std::span<double> values) const {
  const std::vector<double> q = decision_weights(player, profile);
  const std::size_t opp = opp_joints_[player];
  const std::span<const double> framed(framed_[player]);
  for (int a = 0; a < action_counts_[player]; ++a) {
    values[a] = simd::dot(q, framed.subspan(a * opp, opp));
  }
  return simd::sum(q);
}

double UtilityEvaluator::utility(int player, const MixedProfile& profile) const {
  check_player(player, num_players());
  std::vector<double> values(action_counts_[player]);
  action_values(player, profile, values);
  double total = 0.0;
  for (int a = 0; a < action_counts_[player]; ++a) {
    total += profile[player][a] * values[a];
  }
  return total;
}

std::vector<int> UtilityEvaluator::best_response(
    int player, const MixedProfile& profile) const {
  check_player(player, num_players());
  std::vector<double> values(action_counts_[player]);
  action_values(player, profile, values);
  const double best = *std::max_element(values.begin(), values.end());
  const double tol = kTieTolerance * std::max(1.0, std::abs(best));
  std::vector<int> out;
  for (int a = 0; a < action_counts_[player]; ++a) {
    if (values[a] >= best - tol) out.push_back(a);
  }
  return out;
}

double UtilityEvaluator::residual(const MixedProfile& profile) const {
  double worst = 0.0;
  std::vector<double> values;
  for (int i = 0; i < num_players(); ++i) {
    values.assign(action_counts_[i], 0.0);
    action_values(i, profile, values);
    double current = 0.0;
    for (int a = 0; a < action_counts_[i]; ++a) current += profile[i][a] * values[a];
    const double best = *std::max_element(values.begin(), values.end());
    worst = std::max(worst, best - current);
  }
  return worst;
}

double UtilityEvaluator::normalized_residual(const MixedProfile& profile) const {
  double worst = 0.0;
  std::vector<double> values;
  for (int i = 0; i < num_players(); ++i) {
    values.assign(action_counts_[i], 0.0);
    const double mass = action_values(i, profile, values);
    double current = 0.0;
    for (int a = 0; a < action_counts_[i]; ++a) current += profile[i][a] * values[a];
    const double best = *std::max_element(values.begin(), values.end());
    worst = std::max(worst, (best - current) / (mass > 0.0 ? mass : 1.0));
  }
  return worst;
}

double pt_utility(const FiniteGame& game, int player,
                  const MixedProfile& profile, const Behaviors& behaviors,
                  WeightingOptions options) {
  check_player(player, game.num_players());
  profile.validate(game);
  return UtilityEvaluator(game, behaviors, options).utility(player, profile);
}

std::vector<int> best_response(const FiniteGame& game, int player,
                               const MixedProfile& profile,
                               const Behaviors& behaviors,
                               WeightingOptions options) {
  profile.validate(game);
  return UtilityEvaluator(game, behaviors, options).best_response(player, profile);
}

}  // namespace ptgrid::game
