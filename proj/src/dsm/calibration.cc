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

#include <cmath>
#include <limits>

#include "ptgrid/dsm.h"
#include "ptgrid/series.h"

namespace ptgrid::dsm {

DsmCalibration calibrate_dsm(const std::vector<LoadProfile>& profiles,
                             const DsmConfig& base,
                             const DsmCalibrationGrid& search) {
  DsmCalibration best;
  double best_error = std::numeric_limits<double>::infinity();
  const int n = base.n_consumers;
  const double hour_total = total_demand(profiles)[search.hour];

  for (double frac : search.flexible_fractions) {
    std::vector<LoadProfile> prof = profiles;
    for (auto& p : prof) p.flexible_fraction = frac;
    for (int span : search.shift_spans) {
      for (const auto& trough : search.trough_sets) {
        for (double tau : search.final_temperatures) {
          ++best.candidates;
          DsmConfig cfg = base;
          cfg.shift_span = span;
          cfg.trough_hours = trough;
          cfg.solver.final_temperature = tau;
          cfg.alphas.clear();
          const game::FiniteGame g = build_dsm_game(prof, cfg);

          const DsmSolution eut = solve_dsm(g, game::eut_behaviors(n), cfg.solver);
          if (!eut.result.converged) continue;
          const Hourly eut_load =
              nonparticipating_load(eut.result.profile, prof, cfg);
          const double share = eut_load[search.hour] / hour_total;
          if (share <= search.share_low || share >= search.share_high) continue;

          const DsmSolution het = solve_dsm(
              g, dsm_behaviors(search.heterogeneous_alphas, n), cfg.solver);
          if (!het.result.converged) continue;
          const Hourly het_load =
              nonparticipating_load(het.result.profile, prof, cfg);
          double gap = 0.0;
          for (int h : search.late_hours) gap += het_load[h] - eut_load[h];
          if (!(gap > 0.0)) continue;

          std::vector<double> diff;
          bool ok = true;
          for (double a : search.alpha_grid) {
            const DsmSolution pt = solve_dsm(
                g, dsm_behaviors(std::vector<double>(n, a), n), cfg.solver);
            if (!pt.result.converged) {
              ok = false;
              break;
            }
            diff.push_back(
                nonparticipating_load(pt.result.profile, prof, cfg)[search.hour] -
                eut_load[search.hour]);
          }
          if (!ok || count_sign_changes(diff, 1e-9 * hour_total) != 1) continue;
          if (!(diff.front() > 0.0)) continue;

          ++best.admissible;
          const double err = std::abs(share - search.target_share);
          if (!(err < best_error)) continue;
          best_error = err;
          best.found = true;
          best.flexible_fraction = frac;
          best.shift_span = span;
          best.trough_hours = trough;
          best.final_temperature = tau;
          best.eut_share = share;
          best.late_gap = gap;
        }
      }
    }
  }
  return best;
}

}  // namespace ptgrid::dsm
