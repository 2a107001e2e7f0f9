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

#include <array>
#include <cmath>
#include <stdexcept>

#include "ptgrid/solvers.h"

namespace ptgrid::game {
namespace {

// ln w(p) - ln w(1-p) for Prelec weighting; increasing in p.
double log_weight_ratio(double p, double alpha) {
  return -std::pow(-std::log(p), alpha) + std::pow(-std::log1p(-p), alpha);
}

}  // namespace

const EquilibriumResult* TwoByTwoSolution::interior_equilibrium() const {
  if (interior != InteriorStatus::kFound || equilibria.empty()) return nullptr;
  return &equilibria.back();
}

double indifference_probability(double d0, double d1,
                                const pt::PrelecWeighting& weighting) {
  if (!(d0 * d1 < 0.0)) return -1.0;
  if (weighting.is_rational()) return d1 / (d1 - d0);
  // w(p)/w(1-p) = -d1/d0 =: k > 0.
  const double target = std::log(-d1 / d0);
  const double alpha = weighting.alpha();
  double lo = 0.0;
  double hi = 1.0;
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (log_weight_ratio(mid, alpha) < target) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  const double p = 0.5 * (lo + hi);
  return (p > 0.0 && p < 1.0) ? p : -1.0;
}

TwoByTwoSolution solve_2x2(const FiniteGame& game, const Behaviors& behaviors,
                           WeightingOptions options) {
  if (game.num_players() != 2 || game.num_actions(0) != 2 ||
      game.num_actions(1) != 2) {
    throw std::invalid_argument("solve_2x2 needs a two-player 2x2 game");
  }
  const UtilityEvaluator eval(game, behaviors, options);
  TwoByTwoSolution out;

  for (int a0 = 0; a0 < 2; ++a0) {
    for (int a1 = 0; a1 < 2; ++a1) {
      const std::array<int, 2> joint{a0, a1};
      MixedProfile pure = MixedProfile::pure(game, joint);
      const double res = eval.normalized_residual(pure);
      if (res <= kTwoByTwoTolerance) {
        out.equilibria.push_back({std::move(pure), res, 0, true});
      }
    }
  }

  // v[i][a0][a1]: framed payoff of player i.
  double v[2][2][2];
  for (int i = 0; i < 2; ++i) {
    for (int a0 = 0; a0 < 2; ++a0) {
      for (int a1 = 0; a1 < 2; ++a1) {
        const std::array<int, 2> joint{a0, a1};
        v[i][a0][a1] = pt::frame_value(game.payoff(i, joint), behaviors[i].frame);
      }
    }
  }
  // Player 1's indifference pins player 0's mix and vice versa.
  const double d1_opp0 = v[1][0][0] - v[1][0][1];
  const double d1_opp1 = v[1][1][0] - v[1][1][1];
  const double d0_opp0 = v[0][0][0] - v[0][1][0];
  const double d0_opp1 = v[0][0][1] - v[0][1][1];

  if ((d1_opp0 == 0.0 && d1_opp1 == 0.0) || (d0_opp0 == 0.0 && d0_opp1 == 0.0)) {
    out.interior = InteriorStatus::kDegenerate;
    out.note = "a player is indifferent against every opponent strategy";
    return out;
  }
  const double p0 =
      indifference_probability(d1_opp0, d1_opp1, behaviors[1].weighting);
  const double p1 =
      indifference_probability(d0_opp0, d0_opp1, behaviors[0].weighting);
  if (p0 < 0.0 || p1 < 0.0) {
    out.interior = InteriorStatus::kNone;
    out.note = "no interior equilibrium";
    return out;
  }
  MixedProfile mixed{{{p0, 1.0 - p0}, {p1, 1.0 - p1}}};
  const double res = eval.normalized_residual(mixed);
  if (res > kTwoByTwoTolerance) {
    out.interior = InteriorStatus::kNone;
    out.note = "interior indifference point failed the residual check";
    return out;
  }
  out.equilibria.push_back({std::move(mixed), res, 0, true});
  out.interior = InteriorStatus::kFound;
  return out;
}

}  // namespace ptgrid::game
