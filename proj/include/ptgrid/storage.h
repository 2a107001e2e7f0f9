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

#ifndef PTGRID_STORAGE_H_
#define PTGRID_STORAGE_H_

// Two-consumer storage charge/discharge game.
//
// Each active consumer either charges (buys its load L_i at the company
// price rho) or discharges (sells its surplus S_i at the selling price b).
// Aggregate generation is
//
//   G = passive_load + sum_{charging j} L_j - sum_{discharging j} S_j
//
// and the regulation penalty kappa * (G - G0)^2 is split between the two
// consumers (penalty_share to consumer 0, the rest to consumer 1; the default
// 0.5 gives each kappa * (G - G0)^2 / 2). Payoffs:
//
//   charge:     -rho * L_i - P_i
//   discharge:   b   * S_i - P_i

#include <array>
#include <string>
#include <vector>

#include "ptgrid/game.h"
#include "ptgrid/prospect.h"
#include "ptgrid/series.h"
#include "ptgrid/solvers.h"

namespace ptgrid::storage {

enum Action : int { kCharge = 0, kDischarge = 1 };

struct StorageConsumer {
  double load = 0.0;     // kWh bought when charging
  double surplus = 0.0;  // kWh sold when discharging
  pt::PtProfile behavior;

  void validate() const;
};

using Consumers = std::array<StorageConsumer, 2>;

struct StorageGridConfig {
  double passive_load = 0.0;        // kWh
  double nominal_generation = 0.0;  // G0, kWh
  double penalty_coeff = 0.0;       // kappa, $/kWh^2
  double company_price = 0.0;       // rho, $/kWh
  double selling_price = 0.0;       // b, $/kWh
  double penalty_share = 0.5;       // consumer 0's share of the penalty

  void validate() const;
};

// passive + (L0 + L1 - S0 - S1) / 2: no pure joint action is penalty-free.
double default_nominal_generation(const Consumers& consumers,
                                  double passive_load);

double total_generation(const Consumers& consumers,
                        const StorageGridConfig& grid, int action0,
                        int action1);

struct PayoffTerms {
  double economic = 0.0;
  double penalty = 0.0;  // this consumer's share
  double total() const { return economic - penalty; }
};

PayoffTerms payoff_terms(const Consumers& consumers,
                         const StorageGridConfig& grid, int player,
                         int action0, int action1);

game::FiniteGame build_storage_game(const Consumers& consumers,
                                    const StorageGridConfig& grid);

// rho * sum_i Pr[i charges] * L_i
double company_revenue(const game::MixedProfile& profile,
                       const Consumers& consumers,
                       const StorageGridConfig& grid);

// sum_i (Pr[i charges] L_i - Pr[i discharges] S_i)
double expected_load(const game::MixedProfile& profile,
                     const Consumers& consumers);

// The equilibrium used for reporting: the interior one when it exists,
// otherwise the first pure one in joint-action order.
const game::EquilibriumResult* reported_equilibrium(
    const game::TwoByTwoSolution& solution);

struct SolvedPoint {
  double alpha = 1.0;  // 1 for the EUT baseline
  bool found = false;
  bool interior = false;
  game::MixedProfile profile;
  std::array<double, 2> buy_probability{};
  double revenue = 0.0;
  double expected_load = 0.0;
  std::array<double, 2> eut_utility{};
  std::array<double, 2> pt_utility{};
};

SolvedPoint solve_point(const Consumers& consumers,
                        const StorageGridConfig& grid,
                        const game::Behaviors& behaviors, double alpha_label);

struct SweepRow {
  double value = 0.0;               // swept parameter
  std::vector<SolvedPoint> points;  // [0] = EUT, then one per alpha
};

// Each consumer keeps its own value frame; the PT columns replace the
// weighting with Prelec(alpha).
std::vector<SweepRow> sweep_selling_price(const Consumers& consumers,
                                          const StorageGridConfig& grid,
                                          const std::vector<double>& b_grid,
                                          const std::vector<double>& alphas);

std::vector<SweepRow> sweep_company_price(const Consumers& consumers,
                                          const StorageGridConfig& grid,
                                          const std::vector<double>& rho_grid,
                                          const std::vector<double>& alphas);

struct FramingSettings {
  double alpha = 1.0;
  double beta_gain = pt::kDefaultBeta;
  double beta_loss = pt::kDefaultBeta;
};

struct FramingRow {
  double reference = 0.0;
  double gamma = 1.0;
  bool found = false;
  double pt_total = 0.0;   // sum of PT utilities at the framed equilibrium
  double eut_total = 0.0;  // sum of EUT utilities at the EUT equilibrium
  std::array<double, 2> buy_probability{};
};

// Both consumers share the frame {reference, gamma, betas}. Rows are ordered
// gamma-major, then by reference point.
std::vector<FramingRow> framing_sweep(const Consumers& consumers,
                                      const StorageGridConfig& grid,
                                      const std::vector<double>& ref_grid,
                                      const std::vector<double>& gammas,
                                      const FramingSettings& settings);

// Calibration of (rho, kappa, G0 - passive) by exhaustive grid search. A
// candidate is admissible when, over the whole b grid, the EUT equilibrium
// is interior with buy probabilities in [min_prob, 1 - min_prob] for both
// consumers and, for every alpha in `alphas`, each consumer's
// (PT - EUT) buy probability changes sign exactly once, from positive to
// negative. Among admissible candidates the one whose crossover prices
// (measured at alphas.back()) are closest to `targets` wins; ties go to the
// widest EUT probability range.
struct StorageCalibrationGrid {
  std::vector<double> company_prices;
  std::vector<double> penalty_coeffs;
  std::vector<double> nominal_offsets;
  std::vector<double> b_grid;
  std::vector<double> alphas;
  std::array<double, 2> targets{};
  double min_prob = 0.05;
};

struct StorageCalibration {
  bool found = false;
  double company_price = 0.0;
  double penalty_coeff = 0.0;
  double nominal_offset = 0.0;
  std::array<double, 2> crossover{};
  double error = 0.0;
  double probability_range = 0.0;
  int candidates = 0;
  int admissible = 0;
};

StorageCalibration calibrate_storage(const Consumers& consumers,
                                     double passive_load,
                                     const StorageCalibrationGrid& search);

// b values where consumer `player`'s (PT - EUT) buy probability changes sign
// in column `column` (>= 1) of a selling-price sweep.
std::vector<double> buy_crossovers(const std::vector<SweepRow>& rows,
                                   int player, std::size_t column);

}  // namespace ptgrid::storage

#endif  // PTGRID_STORAGE_H_
