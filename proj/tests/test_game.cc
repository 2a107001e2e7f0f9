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

#include <cmath>
#include <random>

#include "ptgrid/game.h"

namespace ptgrid::game {
namespace {

FiniteGame random_game(std::mt19937_64& rng, std::vector<int> counts) {
  std::uniform_real_distribution<double> u(-10.0, 10.0);
  std::size_t joints = 1;
  for (int c : counts) joints *= c;
  std::vector<double> pay(joints * counts.size());
  for (double& v : pay) v = u(rng);
  return FiniteGame(std::move(counts), std::move(pay));
}

MixedProfile random_profile(std::mt19937_64& rng, const FiniteGame& g) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  MixedProfile p = MixedProfile::uniform(g);
  for (auto& s : p.strategies) {
    double t = 0.0;
    for (double& v : s) t += v = u(rng);
    for (double& v : s) v /= t;
  }
  return p;
}

TEST(FiniteGame, LexicographicIndexingPlayerZeroMostSignificant) {
  const FiniteGame g({2, 3}, std::vector<double>(12, 0.0));
  EXPECT_EQ(g.num_joint_actions(), 6u);
  EXPECT_EQ(g.joint_index(std::vector<int>{0, 0}), 0u);
  EXPECT_EQ(g.joint_index(std::vector<int>{0, 2}), 2u);
  EXPECT_EQ(g.joint_index(std::vector<int>{1, 0}), 3u);
  std::vector<int> joint(2);
  for (std::size_t r = 0; r < 6; ++r) {
    g.decode(r, joint);
    EXPECT_EQ(g.joint_index(joint), r);
  }
  EXPECT_THROW(g.joint_index(std::vector<int>{2, 0}), std::out_of_range);
}

TEST(FiniteGame, OwnActionSlices) {
  // payoff of player p at joint (a0, a1) = 10 * a0 + a1 + 100 * p
  const FiniteGame g = FiniteGame::from_function(
      {2, 3}, [](int p, std::span<const int> j) { return 10.0 * j[0] + j[1] + 100.0 * p; });
  const auto s0 = g.own_action_slice(0, 1);
  EXPECT_EQ(std::vector<double>(s0.begin(), s0.end()), (std::vector<double>{10, 11, 12}));
  const auto s1 = g.own_action_slice(1, 2);
  EXPECT_EQ(std::vector<double>(s1.begin(), s1.end()), (std::vector<double>{102, 112}));
  EXPECT_EQ(g.min_payoff(1), 100.0);
  EXPECT_EQ(g.max_payoff(0), 12.0);
}

TEST(FiniteGame, RejectsMalformedInput) {
  EXPECT_THROW(FiniteGame({2}, {0, 0}), std::invalid_argument);
  EXPECT_THROW(FiniteGame({2, 1}, {0, 0, 0, 0}), std::invalid_argument);
  EXPECT_THROW(FiniteGame({2, 2}, {0, 0, 0}), std::invalid_argument);
  EXPECT_THROW(FiniteGame({2, 2}, {0, 0, 0, 0, 0, 0, 0, NAN}), std::invalid_argument);
}

TEST(MixedProfile, Validation) {
  const FiniteGame g({2, 2}, std::vector<double>(8, 0.0));
  EXPECT_NO_THROW(MixedProfile::uniform(g).validate(g));
  MixedProfile bad = MixedProfile::uniform(g);
  bad[0][0] = 0.7;
  EXPECT_THROW(bad.validate(g), std::invalid_argument);
  bad[0] = {1.2, -0.2};
  EXPECT_THROW(bad.validate(g), std::invalid_argument);
}

// Hand evaluation: 2x2 game, player 0 payoffs (4, 0 | 1, 3), opponent plays
// (0.3, 0.7). EUT value of action 0 = 1.2, action 1 = 2.4.
TEST(Utility, HandOracle) {
  const FiniteGame g({2, 2}, {4, 0, 0, 0, 1, 0, 3, 0});
  MixedProfile x = MixedProfile::uniform(g);
  x[1] = {0.3, 0.7};
  x[0] = {0.25, 0.75};
  EXPECT_NEAR(eut_utility(g, 0, x), 0.25 * 1.2 + 0.75 * 2.4, 1e-14);
  const Behaviors pt = weighting_behaviors(std::vector<double>{0.5, 0.5});
  const double w3 = pt::prelec_weight(0.3, 0.5), w7 = pt::prelec_weight(0.7, 0.5);
  const double v0 = 4 * w3, v1 = 1 * w3 + 3 * w7;
  EXPECT_NEAR(pt_utility(g, 0, x, pt), 0.25 * v0 + 0.75 * v1, 1e-14);
  EXPECT_EQ(best_response(g, 0, x, pt), std::vector<int>{1});
}

TEST(Utility, EutReductionOnRandomGames) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const FiniteGame g = random_game(rng, {2 + trial % 3, 3, 2});
    const MixedProfile x = random_profile(rng, g);
    const Behaviors b = weighting_behaviors(std::vector<double>{1.0, 1.0, 1.0});
    for (int i = 0; i < 3; ++i) {
      EXPECT_NEAR(pt_utility(g, i, x, b), eut_utility(g, i, x), 1e-12);
    }
  }
}

TEST(Utility, WeightingModesAgreeForTwoPlayers) {
  // With a single opponent both modes weight the same marginals.
  std::mt19937_64 rng(9);
  const FiniteGame g = random_game(rng, {3, 4});
  const MixedProfile x = random_profile(rng, g);
  const Behaviors b = weighting_behaviors(std::vector<double>{0.4, 0.7});
  WeightingOptions wtm;
  wtm.mode = WeightingOptions::Mode::kWeightThenMultiply;
  for (int i = 0; i < 2; ++i) {
    EXPECT_NEAR(pt_utility(g, i, x, b), pt_utility(g, i, x, b, wtm), 1e-12);
  }
}

TEST(Utility, WeightThenMultiplyUsesProductOfWeights) {
  const FiniteGame g({2, 2, 2}, std::vector<double>{
      1, 0, 0,  0, 0, 0,  0, 0, 0,  0, 0, 0,
      0, 0, 0,  0, 0, 0,  0, 0, 0,  0, 0, 0});
  MixedProfile x = MixedProfile::uniform(g);
  x[1] = {0.2, 0.8};
  x[2] = {0.6, 0.4};
  x[0] = {1.0, 0.0};
  const Behaviors b = weighting_behaviors(std::vector<double>{0.5, 1.0, 1.0});
  WeightingOptions wtm;
  wtm.mode = WeightingOptions::Mode::kWeightThenMultiply;
  EXPECT_NEAR(pt_utility(g, 0, x, b), pt::prelec_weight(0.12, 0.5), 1e-14);
  EXPECT_NEAR(pt_utility(g, 0, x, b, wtm),
              pt::prelec_weight(0.2, 0.5) * pt::prelec_weight(0.6, 0.5), 1e-14);
}

TEST(Utility, RenormalizedWeightsSumToOne) {
  std::mt19937_64 rng(3);
  const FiniteGame g = random_game(rng, {2, 3, 3});
  const MixedProfile x = random_profile(rng, g);
  WeightingOptions opt;
  opt.renormalize = true;
  const UtilityEvaluator e(g, weighting_behaviors(std::vector<double>{0.3, 0.3, 0.3}), opt);
  double s = 0.0;
  for (double w : e.decision_weights(0, x)) s += w;
  EXPECT_NEAR(s, 1.0, 1e-14);
}

TEST(Utility, EutBestResponseInvariantUnderPositiveAffineMaps) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    const FiniteGame g = random_game(rng, {3, 3});
    std::vector<double> scaled;
    for (std::size_t r = 0; r < g.num_joint_actions(); ++r) {
      for (int i = 0; i < 2; ++i) scaled.push_back(2.5 * g.payoff(i, r) - 7.0);
    }
    const FiniteGame h({3, 3}, scaled);
    const MixedProfile x = random_profile(rng, g);
    const Behaviors eut = eut_behaviors(2);
    for (int i = 0; i < 2; ++i) {
      EXPECT_EQ(best_response(g, i, x, eut), best_response(h, i, x, eut));
    }
  }
}

TEST(Utility, PureProfileResidualCertifiesNash) {
  // Prisoner's dilemma: (1, 1) is the only pure equilibrium.
  const FiniteGame g({2, 2}, {3, 3, 0, 5, 5, 0, 1, 1});
  const UtilityEvaluator e(g, eut_behaviors(2));
  EXPECT_EQ(e.residual(MixedProfile::pure(g, std::vector<int>{1, 1})), 0.0);
  EXPECT_DOUBLE_EQ(e.residual(MixedProfile::pure(g, std::vector<int>{0, 0})), 2.0);
  EXPECT_DOUBLE_EQ(e.normalized_residual(MixedProfile::pure(g, std::vector<int>{0, 0})), 2.0);
}

TEST(Utility, DeterministicAcrossCalls) {
  std::mt19937_64 rng(21);
  const FiniteGame g = random_game(rng, {4, 4, 4});
  const MixedProfile x = random_profile(rng, g);
  const Behaviors b = weighting_behaviors(std::vector<double>{0.3, 0.6, 0.9});
  const double first = pt_utility(g, 1, x, b);
  for (int k = 0; k < 5; ++k) EXPECT_EQ(pt_utility(g, 1, x, b), first);
}

}  // namespace
}  // namespace ptgrid::game
