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

#include "ptgrid/dsm.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace ptgrid::dsm {
namespace {

void require(bool ok, const char* what) {
  if (!ok) throw std::invalid_argument(what);
}

bool valid_hour(int h) { return h >= 0 && h < kHours; }

}  // namespace

int DsmConfig::num_actions() const {
  return static_cast<int>(start_window.size()) + (include_opt_out ? 1 : 0);
}

int DsmConfig::opt_out_action() const {
  return include_opt_out ? static_cast<int>(start_window.size()) : -1;
}

void DsmConfig::validate() const {
  require(n_consumers >= 2, "DSM game needs at least two consumers");
  require(!start_window.empty(), "start window must not be empty");
  require(shift_span >= 1, "shift_span must be >= 1");
  for (int t : start_window) {
    require(valid_hour(t), "start hours must lie in [0,23]");
    require(t + shift_span <= kHours, "shift window runs past the end of the day");
  }
  require(!trough_hours.empty(), "trough hours must not be empty");
  for (int h : trough_hours) require(valid_hour(h), "trough hours must lie in [0,23]");
  require(std::isfinite(price_fn_coeff) && price_fn_coeff >= 0.0,
          "price_fn_coeff must be >= 0");
  require(std::isfinite(price_exponent) && price_exponent > 0.0,
          "price_exponent must be > 0");
  require(alphas.empty() || static_cast<int>(alphas.size()) == n_consumers,
          "need one alpha per consumer");
  for (double a : alphas) require(a > 0.0 && a <= 1.0, "alpha must lie in (0,1]");
}

std::vector<Hourly> action_loads(const LoadProfile& profile,
                                 const DsmConfig& config) {
  std::vector<Hourly> out;
  for (int t : config.start_window) {
    Hourly l = profile.hourly_demand;
    double moved = 0.0;
    for (int h = t; h < t + config.shift_span; ++h) {
      const double d = profile.flexible_fraction * l[h];
      l[h] -= d;
      moved += d;
    }
    const double each = moved / static_cast<double>(config.trough_hours.size());
    for (int h : config.trough_hours) l[h] += each;
    out.push_back(l);
  }
  if (config.include_opt_out) out.push_back(profile.hourly_demand);
  return out;
}

game::FiniteGame build_dsm_game(const std::vector<LoadProfile>& profiles,
                                const DsmConfig& config) {
  config.validate();
  require(static_cast<int>(profiles.size()) == config.n_consumers,
          "profile count must equal n_consumers");
  for (const auto& p : profiles) p.validate();

  const int n = config.n_consumers;
  const int m = config.num_actions();
  std::vector<std::vector<Hourly>> loads;
  for (const auto& p : profiles) loads.push_back(action_loads(p, config));

  std::size_t joints = 1;
  for (int i = 0; i < n; ++i) joints *= static_cast<std::size_t>(m);
  std::vector<double> payoffs(joints * static_cast<std::size_t>(n));
  std::vector<int> joint(n, 0);
  Hourly price{};
  for (std::size_t r = 0; r < joints; ++r) {
    price.fill(0.0);
    for (int i = 0; i < n; ++i) {
      const Hourly& l = loads[i][joint[i]];
      for (int h = 0; h < kHours; ++h) price[h] += l[h];
    }
    for (double& p : price) {
      p = config.price_fn_coeff *
          (config.price_exponent == 1.0 ? p : std::pow(p, config.price_exponent));
    }
    for (int i = 0; i < n; ++i) {
      const Hourly& l = loads[i][joint[i]];
      double bill = 0.0;
      for (int h = 0; h < kHours; ++h) bill += price[h] * l[h];
      payoffs[r * n + i] = -bill;
    }
    // Lexicographic successor, player 0 most significant.
    for (int i = n - 1; i >= 0; --i) {
      if (++joint[i] < m) break;
      joint[i] = 0;
    }
  }
  return game::FiniteGame(std::vector<int>(n, m), std::move(payoffs));
}

game::Behaviors dsm_behaviors(const std::vector<double>& alphas, int n) {
  if (alphas.empty()) return game::eut_behaviors(n);
  require(static_cast<int>(alphas.size()) == n, "need one alpha per consumer");
  return game::weighting_behaviors(alphas);
}

DsmSolution solve_dsm(const game::FiniteGame& game,
                      const game::Behaviors& behaviors,
                      const DsmSolverSettings& settings) {
  game::FixedPointOptions opt;
  opt.step = settings.step;
  opt.initial_temperature = settings.initial_temperature;
  opt.temperature_decay = settings.temperature_decay;
  opt.final_temperature = settings.final_temperature;
  opt.stationarity_tol = settings.stationarity_tol;
  opt.max_iter = settings.max_iter;
  opt.tol = settings.tol;
  if (settings.final_temperature > 0.0) {
    const game::UtilityEvaluator eval(game, behaviors);
    double spread = 0.0;
    int actions = 1;
    for (int i = 0; i < game.num_players(); ++i) {
      spread = std::max(spread, eval.payoff_spread(i));
      actions = std::max(actions, game.num_actions(i));
    }
    const double bound = settings.final_temperature * std::log(actions) * spread;
    opt.tol = std::max(opt.tol, bound * (1.0 + 1e-6));
  }
  DsmSolution s;
  s.tolerance = opt.tol;
  s.result = game::solve_fixed_point(game, behaviors,
                                     game::MixedProfile::uniform(game), opt);
  return s;
}

Hourly nonparticipating_load(const game::MixedProfile& profile,
                             const std::vector<LoadProfile>& profiles,
                             const DsmConfig& config) {
  Hourly out{};
  const int opt_out = config.opt_out_action();
  if (opt_out < 0) return out;
  for (std::size_t i = 0; i < profiles.size(); ++i) {
    const double q = profile[static_cast<int>(i)][opt_out];
    for (int h = 0; h < kHours; ++h) out[h] += q * profiles[i].hourly_demand[h];
  }
  return out;
}

Hourly total_demand(const std::vector<LoadProfile>& profiles) {
  Hourly out{};
  for (const auto& p : profiles) {
    for (int h = 0; h < kHours; ++h) out[h] += p.hourly_demand[h];
  }
  return out;
}

HourlyLoadReport hourly_report(const std::vector<LoadProfile>& profiles,
                               const DsmConfig& config) {
  const game::FiniteGame g = build_dsm_game(profiles, config);
  const int n = config.n_consumers;
  const DsmSolution eut = solve_dsm(g, game::eut_behaviors(n), config.solver);
  const DsmSolution pt =
      solve_dsm(g, dsm_behaviors(config.alphas, n), config.solver);
  HourlyLoadReport r;
  r.eut = nonparticipating_load(eut.result.profile, profiles, config);
  r.pt = nonparticipating_load(pt.result.profile, profiles, config);
  r.converged = eut.result.converged && pt.result.converged;
  return r;
}

std::vector<RationalityRow> rationality_sweep(
    const std::vector<LoadProfile>& profiles, const DsmConfig& config,
    const std::vector<double>& alpha_grid, int hour) {
  require(valid_hour(hour), "hour must lie in [0,23]");
  const game::FiniteGame g = build_dsm_game(profiles, config);
  const int n = config.n_consumers;
  const DsmSolution eut = solve_dsm(g, game::eut_behaviors(n), config.solver);
  const double eut_load =
      nonparticipating_load(eut.result.profile, profiles, config)[hour];
  std::vector<RationalityRow> rows;
  for (double a : alpha_grid) {
    const DsmSolution pt = solve_dsm(
        g, dsm_behaviors(std::vector<double>(n, a), n), config.solver);
    RationalityRow row;
    row.alpha = a;
    row.eut = eut_load;
    row.pt = nonparticipating_load(pt.result.profile, profiles, config)[hour];
    row.converged = eut.result.converged && pt.result.converged;
    rows.push_back(row);
  }
  return rows;
}

}  // namespace ptgrid::dsm
