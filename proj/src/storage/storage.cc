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

#include "ptgrid/storage.h"

#include <cmath>
#include <stdexcept>
#include <string>

namespace ptgrid::storage {
namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw std::invalid_argument(what);
}

bool finite_non_negative(double x) { return std::isfinite(x) && x >= 0.0; }

game::Behaviors alpha_behaviors(const Consumers& consumers, double alpha) {
  game::Behaviors out;
  for (const auto& c : consumers) {
    out.push_back(pt::PtProfile{pt::PrelecWeighting(alpha), c.behavior.frame});
  }
  return out;
}

std::vector<SweepRow> sweep(const Consumers& consumers,
                            const StorageGridConfig& base,
                            const std::vector<double>& grid_values,
                            const std::vector<double>& alphas,
                            double StorageGridConfig::*field) {
  require(!grid_values.empty(), "sweep grid is empty");
  for (std::size_t k = 1; k < grid_values.size(); ++k) {
    require(grid_values[k] > grid_values[k - 1], "sweep grid must be ascending");
  }
  const game::Behaviors eut = game::eut_behaviors(2);
  std::vector<SweepRow> rows;
  rows.reserve(grid_values.size());
  for (double v : grid_values) {
    StorageGridConfig grid = base;
    grid.*field = v;
    SweepRow row;
    row.value = v;
    row.points.push_back(solve_point(consumers, grid, eut, 1.0));
    for (double a : alphas) {
      row.points.push_back(
          solve_point(consumers, grid, alpha_behaviors(consumers, a), a));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

void StorageConsumer::validate() const {
  require(finite_non_negative(load), "consumer load must be finite and >= 0");
  require(finite_non_negative(surplus),
          "consumer surplus must be finite and >= 0");
  behavior.frame.validate();
}

void StorageGridConfig::validate() const {
  require(std::isfinite(passive_load), "passive_load must be finite");
  require(std::isfinite(nominal_generation) && nominal_generation > 0.0,
          "nominal_generation must be > 0");
  require(finite_non_negative(penalty_coeff), "penalty_coeff must be >= 0");
  require(finite_non_negative(company_price), "company_price must be >= 0");
  require(finite_non_negative(selling_price), "selling_price must be >= 0");
  require(std::isfinite(penalty_share) && penalty_share >= 0.0 &&
              penalty_share <= 1.0,
          "penalty_share must lie in [0,1]");
}

double default_nominal_generation(const Consumers& consumers,
                                  double passive_load) {
  double swing = 0.0;
  for (const auto& c : consumers) swing += c.load - c.surplus;
  return passive_load + 0.5 * swing;
}

double total_generation(const Consumers& consumers,
                        const StorageGridConfig& grid, int action0,
                        int action1) {
  const int actions[2] = {action0, action1};
  double g = grid.passive_load;
  for (int i = 0; i < 2; ++i) {
    g += actions[i] == kCharge ? consumers[i].load : -consumers[i].surplus;
  }
  return g;
}

PayoffTerms payoff_terms(const Consumers& consumers,
                         const StorageGridConfig& grid, int player,
                         int action0, int action1) {
  require(player == 0 || player == 1, "player must be 0 or 1");
  const int own = player == 0 ? action0 : action1;
  const double dev =
      total_generation(consumers, grid, action0, action1) -
      grid.nominal_generation;
  const double share =
      player == 0 ? grid.penalty_share : 1.0 - grid.penalty_share;
  PayoffTerms t;
  t.economic = own == kCharge ? -grid.company_price * consumers[player].load
                              : grid.selling_price * consumers[player].surplus;
  t.penalty = share * grid.penalty_coeff * dev * dev;
  return t;
}

game::FiniteGame build_storage_game(const Consumers& consumers,
                                    const StorageGridConfig& grid) {
  for (const auto& c : consumers) c.validate();
  grid.validate();
  return game::FiniteGame::from_function(
      {2, 2}, [&](int player, std::span<const int> joint) {
        return payoff_terms(consumers, grid, player, joint[0], joint[1])
            .total();
      });
}

double company_revenue(const game::MixedProfile& profile,
                       const Consumers& consumers,
                       const StorageGridConfig& grid) {
  double r = 0.0;
  for (int i = 0; i < 2; ++i) r += profile[i][kCharge] * consumers[i].load;
  return grid.company_price * r;
}

double expected_load(const game::MixedProfile& profile,
                     const Consumers& consumers) {
  double l = 0.0;
  for (int i = 0; i < 2; ++i) {
    l += profile[i][kCharge] * consumers[i].load -
         profile[i][kDischarge] * consumers[i].surplus;
  }
  return l;
}

const game::EquilibriumResult* reported_equilibrium(
    const game::TwoByTwoSolution& solution) {
  if (const auto* mixed = solution.interior_equilibrium()) return mixed;
  if (!solution.equilibria.empty()) return &solution.equilibria.front();
  return nullptr;
}

SolvedPoint solve_point(const Consumers& consumers,
                        const StorageGridConfig& grid,
                        const game::Behaviors& behaviors, double alpha_label) {
  const game::FiniteGame g = build_storage_game(consumers, grid);
  const game::TwoByTwoSolution sol = game::solve_2x2(g, behaviors);
  SolvedPoint p;
  p.alpha = alpha_label;
  const game::EquilibriumResult* eq = reported_equilibrium(sol);
  if (eq == nullptr) return p;
  p.found = true;
  p.interior = eq == sol.interior_equilibrium();
  p.profile = eq->profile;
  for (int i = 0; i < 2; ++i) {
    p.buy_probability[i] = p.profile[i][kCharge];
    p.eut_utility[i] = game::eut_utility(g, i, p.profile);
    p.pt_utility[i] = game::pt_utility(g, i, p.profile, behaviors);
  }
  p.revenue = company_revenue(p.profile, consumers, grid);
  p.expected_load = expected_load(p.profile, consumers);
  return p;
}

std::vector<SweepRow> sweep_selling_price(const Consumers& consumers,
                                          const StorageGridConfig& grid,
                                          const std::vector<double>& b_grid,
                                          const std::vector<double>& alphas) {
  return sweep(consumers, grid, b_grid, alphas,
               &StorageGridConfig::selling_price);
}

std::vector<SweepRow> sweep_company_price(const Consumers& consumers,
                                          const StorageGridConfig& grid,
                                          const std::vector<double>& rho_grid,
                                          const std::vector<double>& alphas) {
  return sweep(consumers, grid, rho_grid, alphas,
               &StorageGridConfig::company_price);
}

std::vector<FramingRow> framing_sweep(const Consumers& consumers,
                                      const StorageGridConfig& grid,
                                      const std::vector<double>& ref_grid,
                                      const std::vector<double>& gammas,
                                      const FramingSettings& settings) {
  const SolvedPoint eut =
      solve_point(consumers, grid, game::eut_behaviors(2), 1.0);
  const double eut_total = eut.eut_utility[0] + eut.eut_utility[1];
  std::vector<FramingRow> rows;
  for (double gamma : gammas) {
    for (double ref : ref_grid) {
      pt::ValueFrame frame{ref, gamma, settings.beta_gain, settings.beta_loss};
      frame.validate();
      const pt::PtProfile prof{pt::PrelecWeighting(settings.alpha), frame};
      const SolvedPoint p =
          solve_point(consumers, grid, game::Behaviors{prof, prof}, settings.alpha);
      FramingRow row;
      row.reference = ref;
      row.gamma = gamma;
      row.found = p.found && eut.found;
      row.eut_total = eut_total;
      if (p.found) {
        row.pt_total = p.pt_utility[0] + p.pt_utility[1];
        row.buy_probability = p.buy_probability;
      }
      rows.push_back(row);
    }
  }
  return rows;
}

std::vector<double> buy_crossovers(const std::vector<SweepRow>& rows,
                                   int player, std::size_t column) {
  std::vector<double> x, d;
  for (const auto& r : rows) {
    if (!r.points[0].found || !r.points.at(column).found) continue;
    x.push_back(r.value);
    d.push_back(r.points[column].buy_probability[player] -
                r.points[0].buy_probability[player]);
  }
  return sign_change_locations(x, d, 1e-12);
}

}  // namespace ptgrid::storage
