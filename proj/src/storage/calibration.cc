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
#include <limits>

#include "ptgrid/series.h"
#include "ptgrid/storage.h"

namespace ptgrid::storage {
namespace {

struct Assessment {
  bool admissible = false;
  std::array<double, 2> crossover{};
  double probability_range = 0.0;
};

Assessment assess(const std::vector<SweepRow>& rows, double min_prob,
                  std::size_t num_alphas) {
  Assessment a;
  std::array<double, 2> lo{1.0, 1.0}, hi{0.0, 0.0};
  for (const auto& r : rows) {
    for (const auto& p : r.points) {
      if (!p.found) return a;
    }
    const SolvedPoint& e = r.points[0];
    if (!e.interior) return a;
    for (int i = 0; i < 2; ++i) {
      const double q = e.buy_probability[i];
      if (q < min_prob || q > 1.0 - min_prob) return a;
      lo[i] = std::min(lo[i], q);
      hi[i] = std::max(hi[i], q);
    }
  }
  double prev_dev = std::numeric_limits<double>::infinity();
  for (std::size_t col = 0; col <= num_alphas; ++col) {
    std::vector<double> revenue;
    double max_dev = 0.0;
    for (const auto& r : rows) {
      revenue.push_back(r.points[col].revenue);
      max_dev = std::max(max_dev,
                         std::abs(r.points[col].revenue - r.points[0].revenue));
    }
    if (!is_non_increasing(revenue, 1e-12)) return a;
    if (col == 0) continue;
    // Deviation from EUT shrinks as alpha approaches 1.
    if (!(max_dev < prev_dev) || max_dev == 0.0) return a;
    prev_dev = max_dev;
    for (int i = 0; i < 2; ++i) {
      std::vector<double> d;
      for (const auto& r : rows) {
        d.push_back(r.points[col].buy_probability[i] -
                    r.points[0].buy_probability[i]);
      }
      if (count_sign_changes(d, 1e-12) != 1) return a;
      if (!(d.front() > 1e-12) || !(d.back() < -1e-12)) return a;
      if (col == num_alphas) a.crossover[i] = buy_crossovers(rows, i, col)[0];
    }
  }
  a.admissible = true;
  a.probability_range = std::min(hi[0] - lo[0], hi[1] - lo[1]);
  return a;
}

}  // namespace

StorageCalibration calibrate_storage(const Consumers& consumers,
                                     double passive_load,
                                     const StorageCalibrationGrid& search) {
  StorageCalibration best;
  if (search.alphas.empty() || search.b_grid.empty()) return best;
  double best_error = std::numeric_limits<double>::infinity();
  for (double rho : search.company_prices) {
    for (double kappa : search.penalty_coeffs) {
      for (double offset : search.nominal_offsets) {
        ++best.candidates;
        StorageGridConfig grid;
        grid.passive_load = passive_load;
        grid.nominal_generation = passive_load + offset;
        grid.penalty_coeff = kappa;
        grid.company_price = rho;
        grid.selling_price = search.b_grid.front();
        const auto rows =
            sweep_selling_price(consumers, grid, search.b_grid, search.alphas);
        const Assessment a = assess(rows, search.min_prob, search.alphas.size());
        if (!a.admissible) continue;
        ++best.admissible;
        const double err = std::abs(a.crossover[0] - search.targets[0]) +
                           std::abs(a.crossover[1] - search.targets[1]);
        // Errors closer than 1e-6 count as ties.
        const bool better =
            err < best_error - 1e-6 ||
            (err < best_error + 1e-6 &&
             a.probability_range > best.probability_range);
        if (!better) continue;
        best_error = std::min(best_error, err);
        best.found = true;
        best.company_price = rho;
        best.penalty_coeff = kappa;
        best.nominal_offset = offset;
        best.crossover = a.crossover;
        best.error = err;
        best.probability_range = a.probability_range;
      }
    }
  }
  return best;
}

}  // namespace ptgrid::storage
