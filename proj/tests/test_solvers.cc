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

#include "ptgrid/errors.h"
#include "ptgrid/solvers.h"

namespace ptgrid::game {
namespace {

const FiniteGame kPennies({2, 2}, {1, -1, -1, 1, -1, 1, 1, -1});
const FiniteGame kDilemma({2, 2}, {3, 3, 0, 5, 5, 0, 1, 1});
// Coordination game: two pure equilibria and one mixed.
const FiniteGame kCoordination({2, 2}, {2, 1, 0, 0, 0, 0, 1, 2});

TEST(IndifferenceProbability, EutClosedForm) {
  EXPECT_DOUBLE_EQ(indifference_probability(1.0, -3.0, pt::PrelecWeighting(1.0)), 0.75);
  EXPECT_LT(indifference_probability(1.0, 2.0, pt::PrelecWeighting(1.0)), 0.0);
  EXPECT_LT(indifference_probability(0.0, 2.0, pt::PrelecWeighting(0.5)), 0.0);
}

TEST(IndifferenceProbability, SolvesWeightedCondition) {
  for (double alpha : {0.2, 0.5, 0.65, 0.9}) {
    for (auto [d0, d1] : {std::pair{1.0, -3.0}, {2.0, -0.5}, {-1.0, 1.0}}) {
      const pt::PrelecWeighting w(alpha);
      const double p = indifference_probability(d0, d1, w);
      ASSERT_GT(p, 0.0);
      ASSERT_LT(p, 1.0);
      EXPECT_NEAR(w(p) * d0 + w(1.0 - p) * d1, 0.0, 1e-12);
    }
  }
}

TEST(IndifferenceProbability, SymmetricStakesGiveOneHalf) {
  // w(p) = w(1-p) only at p = 1/2 for any alpha.
  EXPECT_NEAR(indifference_probability(1.0, -1.0, pt::PrelecWeighting(0.3)), 0.5, 1e-15);
}

TEST(Solve2x2, MatchingPenniesMixesEvenly) {
  for (double alpha : {1.0, 0.5}) {
    const auto sol = solve_2x2(kPennies, weighting_behaviors(std::vector<double>{alpha, alpha}));
    ASSERT_EQ(sol.equilibria.size(), 1u);
    ASSERT_EQ(sol.interior, InteriorStatus::kFound);
    const auto& p = sol.interior_equilibrium()->profile;
    EXPECT_NEAR(p[0][0], 0.5, 1e-12);
    EXPECT_NEAR(p[1][0], 0.5, 1e-12);
  }
}

TEST(Solve2x2, DominanceGivesUniquePure) {
  const auto sol = solve_2x2(kDilemma, eut_behaviors(2));
  ASSERT_EQ(sol.equilibria.size(), 1u);
  EXPECT_EQ(sol.interior, InteriorStatus::kNone);
  EXPECT_EQ(sol.equilibria[0].profile[0], (std::vector<double>{0.0, 1.0}));
  EXPECT_EQ(sol.equilibria[0].profile[1], (std::vector<double>{0.0, 1.0}));
}

TEST(Solve2x2, CoordinationHasThreeEquilibria) {
  const auto sol = solve_2x2(kCoordination, eut_behaviors(2));
  ASSERT_EQ(sol.equilibria.size(), 3u);
  // Player 1 indifferent when player 0 plays action 0 with prob 2/3.
  const auto& m = sol.interior_equilibrium()->profile;
  EXPECT_NEAR(m[0][0], 2.0 / 3.0, 1e-12);
  EXPECT_NEAR(m[1][0], 1.0 / 3.0, 1e-12);
}

TEST(Solve2x2, DegenerateGameIsFlagged) {
  const FiniteGame flat({2, 2}, std::vector<double>(8, 1.0));
  const auto sol = solve_2x2(flat, eut_behaviors(2));
  EXPECT_EQ(sol.interior, InteriorStatus::kDegenerate);
  EXPECT_EQ(sol.equilibria.size(), 4u);
}

TEST(Solve2x2, AgreesWithBruteForceOnRandomGames) {
  std::mt19937_64 rng(77);
  std::uniform_real_distribution<double> u(-1.0, 1.0), ua(0.2, 1.0);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<double> pay(8);
    for (double& v : pay) v = u(rng);
    const FiniteGame g({2, 2}, pay);
    const Behaviors b = weighting_behaviors(std::vector<double>{ua(rng), ua(rng)});
    const auto sol = solve_2x2(g, b);
    const auto grid = brute_force_equilibrium(g, b, 100);
    for (const auto& e : sol.equilibria) {
      EXPECT_LE(e.residual, kTwoByTwoTolerance);
      double nearest = 1.0;
      for (const auto& p : grid) nearest = std::min(nearest, max_abs_difference(e.profile, p.profile));
      EXPECT_LE(nearest, 1e-2) << "trial " << trial;
    }
  }
}

TEST(FixedPoint, ConvergesToDominantPureEquilibrium) {
  const auto r = solve_fixed_point(kDilemma, eut_behaviors(2), MixedProfile::uniform(kDilemma));
  EXPECT_TRUE(r.converged);
  EXPECT_LE(r.residual, 1e-9);
  EXPECT_NEAR(r.profile[0][1], 1.0, 1e-9);
  EXPECT_NEAR(r.profile[1][1], 1.0, 1e-9);
}

TEST(FixedPoint, EquilibriumStartReturnsImmediately) {
  const MixedProfile start = MixedProfile::pure(kDilemma, std::vector<int>{1, 1});
  const auto r = solve_fixed_point(kDilemma, eut_behaviors(2), start);
  EXPECT_TRUE(r.converged);
  EXPECT_EQ(r.iterations, 0);
}

TEST(FixedPoint, ReportsNonConvergenceWithoutThrowing) {
  FixedPointOptions opt;
  opt.max_iter = 5;
  const auto r = solve_fixed_point(kPennies, eut_behaviors(2), MixedProfile::pure(kPennies, std::vector<int>{0, 0}), opt);
  EXPECT_FALSE(r.converged);
  EXPECT_EQ(r.iterations, 5);
}

TEST(FixedPoint, LogitFloorReachesSmoothedFixedPoint) {
  FixedPointOptions opt;
  opt.final_temperature = 0.05;
  opt.tol = 1.0;
  opt.stationarity_tol = 1e-12;
  opt.max_iter = 100000;
  const auto r = solve_fixed_point(kCoordination, eut_behaviors(2),
                                   MixedProfile::uniform(kCoordination), opt);
  ASSERT_TRUE(r.converged);
  // At the logit fixed point each strategy is the softmax of its own values.
  const UtilityEvaluator e(kCoordination, eut_behaviors(2));
  for (int i = 0; i < 2; ++i) {
    std::vector<double> v(2);
    e.action_values(i, r.profile, v);
    const double t = 0.05 * e.payoff_spread(i);
    const double p0 = 1.0 / (1.0 + std::exp((v[1] - v[0]) / t));
    EXPECT_NEAR(r.profile[i][0], p0, 1e-9);
  }
}

TEST(FixedPoint, ThreePlayerResidualCertificate) {
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<double> pay(27 * 3);
  for (double& v : pay) v = u(rng);
  const FiniteGame g({3, 3, 3}, pay);
  const Behaviors b = weighting_behaviors(std::vector<double>{0.7, 0.8, 0.9});
  const auto r = solve_fixed_point(g, b, MixedProfile::uniform(g));
  if (r.converged) {
    EXPECT_LE(UtilityEvaluator(g, b).normalized_residual(r.profile), 1e-9);
  }
  EXPECT_NO_THROW(r.profile.validate(g));
}

TEST(FixedPoint, RejectsBadOptions) {
  FixedPointOptions opt;
  opt.step = 0.0;
  EXPECT_THROW(solve_fixed_point(kPennies, eut_behaviors(2), MixedProfile::uniform(kPennies), opt),
               std::invalid_argument);
}

TEST(BruteForce, FindsPureAndMixedEquilibria) {
  const auto pts = brute_force_equilibrium(kCoordination, eut_behaviors(2), 30);
  ASSERT_GE(pts.size(), 3u);
  EXPECT_EQ(pts[0].residual, 0.0);
  for (std::size_t k = 1; k < pts.size(); ++k) EXPECT_GE(pts[k].residual, pts[k - 1].residual);
}

TEST(BruteForce, BudgetExceededThrows) {
  BruteForceOptions opt;
  opt.budget = 100;
  EXPECT_THROW(brute_force_equilibrium(kPennies, eut_behaviors(2), 50, opt), SolverError);
}

}  // namespace
}  // namespace ptgrid::game
