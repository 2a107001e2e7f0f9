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

#include "ptgrid/solvers.h"

namespace ptgrid::game {
namespace {

struct Snapshot {
  std::vector<std::vector<double>> values;
  std::vector<double> mass;
  double residual = 0.0;
};

Snapshot evaluate(const UtilityEvaluator& eval, const MixedProfile& x) {
  Snapshot s;
  const int n = eval.num_players();
  s.values.resize(n);
  s.mass.resize(n);
  for (int i = 0; i < n; ++i) {
    auto& v = s.values[i];
    v.assign(eval.num_actions(i), 0.0);
    const double m = eval.action_values(i, x, v);
    s.mass[i] = m > 0.0 ? m : 1.0;
    double current = 0.0;
    for (std::size_t a = 0; a < v.size(); ++a) current += x[i][a] * v[a];
    const double best = *std::max_element(v.begin(), v.end());
    s.residual = std::max(s.residual, (best - current) / s.mass[i]);
  }
  return s;
}

void smoothed_response(std::span<const double> values, double mass,
                       double temperature, bool hard, std::span<double> out) {
  const auto best_it = std::max_element(values.begin(), values.end());
  if (hard) {
    std::fill(out.begin(), out.end(), 0.0);
    out[best_it - values.begin()] = 1.0;
    return;
  }
  const double best = *best_it;
  double total = 0.0;
  for (std::size_t a = 0; a < values.size(); ++a) {
    out[a] = std::exp((values[a] - best) / (mass * temperature));
    total += out[a];
  }
  for (double& o : out) o /= total;
}

}  // namespace

EquilibriumResult solve_fixed_point(const FiniteGame& game,
                                    const Behaviors& behaviors,
                                    const MixedProfile& init,
                                    const FixedPointOptions& options) {
  if (!(options.step > 0.0 && options.step <= 1.0)) {
    throw std::invalid_argument("fixed-point step must lie in (0,1]");
  }
  if (options.max_iter < 0 || !(options.tol >= 0.0)) {
    throw std::invalid_argument("invalid fixed-point tolerance or budget");
  }
  if (!(options.initial_temperature > 0.0) ||
      !(options.temperature_decay > 0.0 && options.temperature_decay <= 1.0) ||
      !(options.final_temperature >= 0.0)) {
    throw std::invalid_argument("invalid temperature schedule");
  }
  init.validate(game);
  const UtilityEvaluator eval(game, behaviors, options.weighting);
  const int n = game.num_players();

  MixedProfile x = init;
  double tau = std::max(options.initial_temperature, options.final_temperature);
  bool hard = false;
  bool final_phase = false;
  const bool logit_target = options.final_temperature > 0.0;
  double last_change = std::numeric_limits<double>::infinity();
  std::vector<double> target;

  for (int it = 0;; ++it) {
    const Snapshot s = evaluate(eval, x);
    const bool done =
        it == 0 ? !logit_target && s.residual <= options.tol
                : final_phase && s.residual <= options.tol &&
                      last_change <= options.stationarity_tol;
    if (done || it == options.max_iter) {
      return {std::move(x), s.residual, it, done};
    }

    last_change = 0.0;
    for (int i = 0; i < n; ++i) {
      target.assign(game.num_actions(i), 0.0);
      smoothed_response(s.values[i], s.mass[i], tau * eval.payoff_spread(i),
                        hard, target);
      for (std::size_t a = 0; a < target.size(); ++a) {
        const double next = (1.0 - options.step) * x[i][a] + options.step * target[a];
        last_change = std::max(last_change, std::abs(next - x[i][a]));
        x[i][a] = next;
      }
    }
    final_phase = hard || (options.final_temperature > 0.0 &&
                           tau <= options.final_temperature);
    tau = std::max(tau * options.temperature_decay, options.final_temperature);
    if (options.final_temperature == 0.0 && tau < options.hard_switch) hard = true;
  }
}

}  // namespace ptgrid::game
