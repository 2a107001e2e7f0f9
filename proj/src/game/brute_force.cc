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
#include <map>
#include <numeric>
#include <stdexcept>

#include "ptgrid/errors.h"
#include "ptgrid/solvers.h"

namespace ptgrid::game {
namespace {

// All compositions of `grid` into `parts` non-negative integers, in
// lexicographic order, plus for each composition the indices of the
// compositions reachable by moving one unit between two actions.
struct SimplexGrid {
  std::vector<std::vector<int>> points;
  std::vector<std::vector<std::size_t>> neighbors;
};

void compose(int remaining, int parts, std::vector<int>& cur,
             std::vector<std::vector<int>>& out) {
  if (parts == 1) {
    cur.push_back(remaining);
    out.push_back(cur);
    cur.pop_back();
    return;
  }
  for (int k = remaining; k >= 0; --k) {
    cur.push_back(k);
    compose(remaining - k, parts - 1, cur, out);
    cur.pop_back();
  }
}

SimplexGrid make_grid(int grid, int parts) {
  SimplexGrid g;
  std::vector<int> cur;
  compose(grid, parts, cur, g.points);
  std::map<std::vector<int>, std::size_t> index;
  for (std::size_t k = 0; k < g.points.size(); ++k) index[g.points[k]] = k;
  g.neighbors.resize(g.points.size());
  for (std::size_t k = 0; k < g.points.size(); ++k) {
    for (int from = 0; from < parts; ++from) {
      if (g.points[k][from] == 0) continue;
      for (int to = 0; to < parts; ++to) {
        if (to == from) continue;
        std::vector<int> moved = g.points[k];
        --moved[from];
        ++moved[to];
        g.neighbors[k].push_back(index.at(moved));
      }
    }
  }
  return g;
}

// Largest normalized regret of any action in a player's support. Zero exactly
// at Nash equilibria, like the plain residual, but it does not shrink with
// the mass placed on a bad action, so grid minima sit next to the true
// equilibria regardless of how the players' payoff scales compare.
double support_regret(const UtilityEvaluator& eval, const MixedProfile& x,
                      std::vector<double>& values) {
  double worst = 0.0;
  for (int i = 0; i < eval.num_players(); ++i) {
    values.assign(eval.num_actions(i), 0.0);
    const double m = eval.action_values(i, x, values);
    const double mass = m > 0.0 ? m : 1.0;
    const double best = *std::max_element(values.begin(), values.end());
    for (int a = 0; a < eval.num_actions(i); ++a) {
      if (x[i][a] > 0.0) worst = std::max(worst, (best - values[a]) / mass);
    }
  }
  return worst;
}

}  // namespace

std::vector<BruteForcePoint> brute_force_equilibrium(
    const FiniteGame& game, const Behaviors& behaviors, int grid,
    const BruteForceOptions& options) {
  if (grid < 1) throw std::invalid_argument("grid resolution must be >= 1");
  const int n = game.num_players();
  std::vector<SimplexGrid> grids;
  std::vector<std::size_t> radix;
  double total = 1.0;
  for (int i = 0; i < n; ++i) {
    // Size check before materializing: C(grid + k - 1, k - 1).
    double count = 1.0;
    for (int k = 1; k < game.num_actions(i); ++k) count = count * (grid + k) / k;
    total *= count;
    if (total > static_cast<double>(options.budget)) {
      throw SolverError("brute-force grid of " + std::to_string(total) +
                        "+ profiles exceeds the budget of " +
                        std::to_string(options.budget));
    }
  }
  for (int i = 0; i < n; ++i) {
    grids.push_back(make_grid(grid, game.num_actions(i)));
    radix.push_back(grids.back().points.size());
  }
  const std::size_t count =
      std::accumulate(radix.begin(), radix.end(), std::size_t{1},
                      std::multiplies<>());

  const UtilityEvaluator eval(game, behaviors, options.weighting);
  std::vector<double> residual(count);
  std::vector<std::size_t> digits(n);
  MixedProfile x = MixedProfile::uniform(game);
  auto load = [&](std::size_t idx) {
    for (int i = n; i-- > 0;) {
      digits[i] = idx % radix[i];
      idx /= radix[i];
    }
    for (int i = 0; i < n; ++i) {
      const auto& pt = grids[i].points[digits[i]];
      for (std::size_t a = 0; a < pt.size(); ++a) {
        x[i][a] = static_cast<double>(pt[a]) / grid;
      }
    }
  };
  std::vector<double> values;
  for (std::size_t idx = 0; idx < count; ++idx) {
    load(idx);
    residual[idx] = support_regret(eval, x, values);
  }

  std::vector<std::size_t> stride(n, 1);
  for (int i = n - 1; i > 0; --i) stride[i - 1] = stride[i] * radix[i];

  std::vector<BruteForcePoint> out;
  for (std::size_t idx = 0; idx < count; ++idx) {
    const double r = residual[idx];
    if (r > options.max_residual) continue;
    std::size_t rest = idx;
    for (int i = n; i-- > 0;) {
      digits[i] = rest % radix[i];
      rest /= radix[i];
    }
    bool local_min = true;
    for (int i = 0; i < n && local_min; ++i) {
      const std::size_t base = idx - digits[i] * stride[i];
      for (std::size_t nb : grids[i].neighbors[digits[i]]) {
        if (residual[base + nb * stride[i]] < r) {
          local_min = false;
          break;
        }
      }
    }
    if (!local_min) continue;
    load(idx);
    out.push_back({x, r});
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const BruteForcePoint& a, const BruteForcePoint& b) {
                     return a.residual < b.residual;
                   });
  return out;
}

}  // namespace ptgrid::game
