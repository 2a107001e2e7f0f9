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

#ifndef PTGRID_DSM_H_
#define PTGRID_DSM_H_

// N-consumer demand-side-management participation game.
//
// Each consumer picks a start hour t from the window or opts out. A
// participant moves flexible_fraction of its load in hours [t, t + shift_span)
// evenly onto the trough hours. The hourly price is
// price_fn_coeff * (total load)^price_exponent over all consumers, and a
// consumer's payoff is minus its own bill.

#include <array>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "ptgrid/game.h"
#include "ptgrid/solvers.h"

namespace ptgrid::dsm {

inline constexpr int kHours = 24;
using Hourly = std::array<double, kHours>;

struct LoadProfile {
  Hourly hourly_demand{};
  double flexible_fraction = 0.0;

  double total() const;
  void validate() const;
};

// Evening-peaked synthetic profiles (peak in 17-21h, trough in 2-5h). The
// same seed always yields the same profiles on every platform.
std::vector<LoadProfile> synth_profile(std::uint64_t seed, int n,
                                       double flexible_fraction = 0.5);

// CSV with header consumer,flexible_fraction,h00,...,h23 and one row per
// consumer. Values are written with 17 significant digits.
void write_profiles(std::ostream& out, const std::vector<LoadProfile>& profiles);
// Throws InputError naming the row and column of the first bad cell.
std::vector<LoadProfile> read_profiles(std::istream& in,
                                       const std::string& source = "<input>");
std::vector<LoadProfile> load_profiles(const std::string& path);

struct DsmSolverSettings {
  double step = 0.2;
  double initial_temperature = 1.0;
  double temperature_decay = 0.99;
  // Temperature floor relative to each player's payoff spread. A positive
  // floor makes the solution the logit (smoothed) equilibrium at that
  // temperature; 0 runs plain best-response dynamics.
  double final_temperature = 0.03;
  double tol = 1e-9;
  double stationarity_tol = 1e-10;
  int max_iter = 20000;
};

struct DsmConfig {
  int n_consumers = 6;
  std::vector<int> start_window{18, 19, 20};
  bool include_opt_out = true;
  double price_fn_coeff = 0.01;  // $/kWh per kWh
  double price_exponent = 1.0;
  int shift_span = 3;
  std::vector<int> trough_hours{1, 2, 3, 4};
  std::vector<double> alphas;  // per consumer; empty means all EUT
  DsmSolverSettings solver;

  int num_actions() const;
  // Index of the opt-out action, or -1.
  int opt_out_action() const;
  void validate() const;
};

// Own hourly load of a consumer for every action, in action order.
std::vector<Hourly> action_loads(const LoadProfile& profile,
                                 const DsmConfig& config);

game::FiniteGame build_dsm_game(const std::vector<LoadProfile>& profiles,
                                const DsmConfig& config);

game::Behaviors dsm_behaviors(const std::vector<double>& alphas, int n);

struct DsmSolution {
  game::EquilibriumResult result;
  double tolerance = 0.0;  // residual bound the solution was certified against
};

// Runs the fixed-point solver from the uniform profile. With a positive
// temperature floor tau, the tolerance is tau * ln|A| * max payoff spread,
// which bounds the residual of any logit equilibrium at that temperature.
DsmSolution solve_dsm(const game::FiniteGame& game,
                      const game::Behaviors& behaviors,
                      const DsmSolverSettings& settings);

// Per hour: sum_i Pr[i opts out] * demand_i(h).
Hourly nonparticipating_load(const game::MixedProfile& profile,
                             const std::vector<LoadProfile>& profiles,
                             const DsmConfig& config);

Hourly total_demand(const std::vector<LoadProfile>& profiles);

struct HourlyLoadReport {
  Hourly eut{};
  Hourly pt{};
  bool converged = false;
};

// EUT versus the per-consumer alphas of `config`.
HourlyLoadReport hourly_report(const std::vector<LoadProfile>& profiles,
                               const DsmConfig& config);

struct RationalityRow {
  double alpha = 1.0;
  double pt = 0.0;
  double eut = 0.0;
  bool converged = false;
};

// Homogeneous alpha applied to every consumer, per grid point.
std::vector<RationalityRow> rationality_sweep(
    const std::vector<LoadProfile>& profiles, const DsmConfig& config,
    const std::vector<double>& alpha_grid, int hour);

// Search over flexible fraction, shift span, trough placement and temperature
// floor. Admissible: EUT nonparticipating share at `hour` in
// [share_bounds], exactly one sign change of (PT - EUT) at `hour` over
// alpha_grid from positive to negative, and PT above EUT summed over
// late_hours for the heterogeneous alphas. Best: share closest to
// target_share.
struct DsmCalibrationGrid {
  std::vector<double> flexible_fractions;
  std::vector<int> shift_spans;
  std::vector<std::vector<int>> trough_sets;
  std::vector<double> final_temperatures;
  std::vector<double> alpha_grid;
  std::vector<double> heterogeneous_alphas;
  std::vector<int> late_hours;
  int hour = 19;
  double share_low = 0.4;
  double share_high = 0.8;
  double target_share = 0.657;
};

struct DsmCalibration {
  bool found = false;
  double flexible_fraction = 0.0;
  int shift_span = 0;
  std::vector<int> trough_hours;
  double final_temperature = 0.0;
  double eut_share = 0.0;
  double late_gap = 0.0;
  int candidates = 0;
  int admissible = 0;
};

DsmCalibration calibrate_dsm(const std::vector<LoadProfile>& profiles,
                             const DsmConfig& base,
                             const DsmCalibrationGrid& search);

}  // namespace ptgrid::dsm

#endif  // PTGRID_DSM_H_
