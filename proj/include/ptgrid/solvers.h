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

#ifndef PTGRID_SOLVERS_H_
#define PTGRID_SOLVERS_H_

// Equilibrium solvers over FiniteGame:
//   solve_2x2                closed-form pure + interior equilibria of 2x2 games
//   solve_fixed_point        damped smoothed best-response iteration, n players
//   brute_force_equilibrium  simplex-grid enumeration, used as a test oracle
//
// Residuals reported here are weight-normalized: each player's best-deviation
// gap is divided by the sum of that player's decision weights, i.e. measured
// in certainty-equivalent payoff units. Under EUT the weight sum is 1 and the
// residual is the plain unilateral-improvement gap.

#include <cstddef>
#include <limits>
#include <string>
#include <vector>

#include "ptgrid/game.h"

namespace ptgrid::game {

struct EquilibriumResult {
  MixedProfile profile;
  double residual = 0.0;
  int iterations = 0;
  bool converged = false;
};

enum class InteriorStatus {
  kFound,       // interior mixed equilibrium returned
  kNone,        // indifference solution lies outside (0,1)
  kDegenerate,  // a player is indifferent everywhere; continuum, not reported
};

struct TwoByTwoSolution {
  // Pure equilibria in joint-action order, then the interior one if any.
  std::vector<EquilibriumResult> equilibria;
  InteriorStatus interior = InteriorStatus::kNone;
  std::string note;

  const EquilibriumResult* interior_equilibrium() const;
};

inline constexpr double kTwoByTwoTolerance = 1e-9;

// Mixing probability of the opponent's action 0 that makes a player with
// payoff differences d0 (opponent plays 0) and d1 (opponent plays 1)
// indifferent, i.e. the root of w(p) d0 + w(1-p) d1 = 0 in (0,1). Returns a
// negative value when there is no interior root.
double indifference_probability(double d0, double d1,
                                const pt::PrelecWeighting& weighting);

TwoByTwoSolution solve_2x2(const FiniteGame& game, const Behaviors& behaviors,
                           WeightingOptions options = {});

struct FixedPointOptions {
  double step = 0.1;  // damping, in (0,1]
  double tol = 1e-9;
  int max_iter = 10000;
  // Softmax temperature, relative to each player's framed payoff spread.
  // tau_k = max(final, initial * decay^k). With final_temperature == 0 the
  // response switches to hard argmax (lowest index on ties) once tau drops
  // below hard_switch; with a positive floor the iteration targets the logit
  // fixed point at that temperature.
  double initial_temperature = 1.0;
  double temperature_decay = 0.99;
  double final_temperature = 0.0;
  double hard_switch = 1e-6;
  // Largest per-iteration profile change accepted at termination.
  double stationarity_tol = std::numeric_limits<double>::infinity();
  WeightingOptions weighting;
};

// Terminates once the schedule has reached its final phase and the residual
// is <= tol (and the last step moved the profile by <= stationarity_tol).
// Without a temperature floor, an initial profile already within tol is
// returned with zero iterations.
// Non-convergence is reported through `converged`, never thrown.
EquilibriumResult solve_fixed_point(const FiniteGame& game,
                                    const Behaviors& behaviors,
                                    const MixedProfile& init,
                                    const FixedPointOptions& options = {});

struct BruteForcePoint {
  MixedProfile profile;
  double residual = 0.0;  // support regret
};

struct BruteForceOptions {
  std::size_t budget = 5'000'000;  // max number of grid profiles
  double max_residual = std::numeric_limits<double>::infinity();
  WeightingOptions weighting;
};

// Enumerates every profile whose probabilities are multiples of 1/grid and
// returns the local minima (no single-player grid neighbor is strictly
// better) of the support regret: the largest weight-normalized gap between a
// player's best action and any action it plays with positive probability.
// Sorted by that regret. Throws SolverError when the grid exceeds the budget.
std::vector<BruteForcePoint> brute_force_equilibrium(
    const FiniteGame& game, const Behaviors& behaviors, int grid,
    const BruteForceOptions& options = {});

}  // namespace ptgrid::game

#endif  // PTGRID_SOLVERS_H_
