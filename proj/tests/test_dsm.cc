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
#include <fstream>
#include <sstream>

#include "commands.h"
#include "ptgrid/dsm.h"
#include "ptgrid/errors.h"

namespace ptgrid::dsm {
namespace {

LoadProfile flat(double level, double fraction) {
  LoadProfile p;
  p.hourly_demand.fill(level);
  p.flexible_fraction = fraction;
  return p;
}

// Two consumers, window {18}, shift span 2 onto hour 2, price 0.5 * load.
struct Toy {
  std::vector<LoadProfile> profiles;
  DsmConfig config;
  Toy() {
    LoadProfile a = flat(1.0, 0.5);
    a.hourly_demand[18] = 4.0;
    a.hourly_demand[19] = 4.0;
    a.hourly_demand[20] = 2.0;
    LoadProfile b = flat(0.0, 0.5);
    b.hourly_demand[19] = 2.0;
    b.hourly_demand[3] = 1.0;
    profiles = {a, b};
    config.n_consumers = 2;
    config.start_window = {18};
    config.shift_span = 2;
    config.trough_hours = {2};
    config.price_fn_coeff = 0.5;
  }
};

TEST(DsmGame, HandEvaluatedToyTensor) {
  const Toy t;
  const game::FiniteGame g = build_dsm_game(t.profiles, t.config);
  const double expected[4][2] = {{-32.5, -5.5}, {-31.0, -5.0}, {-31.5, -4.5}, {-33.0, -7.0}};
  for (std::size_t r = 0; r < 4; ++r) {
    for (int i = 0; i < 2; ++i) EXPECT_NEAR(g.payoff(i, r), expected[r][i], 1e-12);
  }
}

TEST(DsmGame, AllOptOutIsBaselineBill) {
  const auto profiles = synth_profile(7, 3);
  DsmConfig c;
  c.n_consumers = 3;
  const game::FiniteGame g = build_dsm_game(profiles, c);
  const Hourly total = total_demand(profiles);
  const int out = c.opt_out_action();
  const std::vector<int> joint(3, out);
  for (int i = 0; i < 3; ++i) {
    double bill = 0.0;
    for (int h = 0; h < kHours; ++h) bill += c.price_fn_coeff * total[h] * profiles[i].hourly_demand[h];
    EXPECT_NEAR(g.payoff(i, joint), -bill, 1e-12);
  }
}

TEST(DsmGame, ZeroFlexibilityMakesActionsEquivalent) {
  const auto profiles = synth_profile(3, 3, 0.0);
  DsmConfig c;
  c.n_consumers = 3;
  const game::FiniteGame g = build_dsm_game(profiles, c);
  for (std::size_t r = 0; r < g.num_joint_actions(); ++r) {
    for (int i = 0; i < 3; ++i) EXPECT_NEAR(g.payoff(i, r), g.payoff(i, 0), 1e-12);
  }
}

TEST(DsmGame, ShiftingConservesDailyEnergy) {
  const auto profiles = synth_profile(42, 6, 0.9);
  DsmConfig c;
  for (int span : {1, 2, 3, 4}) {
    c.shift_span = span;
    for (const auto& p : profiles) {
      const double before = p.total();
      for (const Hourly& l : action_loads(p, c)) {
        double after = 0.0;
        for (double v : l) {
          EXPECT_GE(v, 0.0);
          after += v;
        }
        EXPECT_NEAR(after, before, 1e-9);
      }
    }
  }
}

TEST(DsmGame, ParticipatingNeverRaisesBillAgainstOptOuts) {
  const auto profiles = synth_profile(11, 4, 0.7);
  DsmConfig c;
  c.n_consumers = 4;
  const game::FiniteGame g = build_dsm_game(profiles, c);
  const int out = c.opt_out_action();
  for (int i = 0; i < 4; ++i) {
    std::vector<int> joint(4, out);
    const double opt_out_payoff = g.payoff(i, joint);
    for (int a = 0; a < out; ++a) {
      joint[i] = a;
      EXPECT_GE(g.payoff(i, joint), opt_out_payoff - 1e-12);
    }
  }
}

TEST(DsmGame, ActionOrderIsWindowThenOptOut) {
  DsmConfig c;
  EXPECT_EQ(c.num_actions(), 4);
  EXPECT_EQ(c.opt_out_action(), 3);
  c.include_opt_out = false;
  EXPECT_EQ(c.num_actions(), 3);
  EXPECT_EQ(c.opt_out_action(), -1);
}

TEST(DsmGame, ConfigurationErrors) {
  const auto profiles = synth_profile(1, 6);
  DsmConfig c;
  c.shift_span = 6;  // 20 + 6 > 24
  EXPECT_THROW(build_dsm_game(profiles, c), std::invalid_argument);
  c = DsmConfig{};
  c.start_window = {};
  EXPECT_THROW(build_dsm_game(profiles, c), std::invalid_argument);
  c = DsmConfig{};
  c.n_consumers = 5;
  EXPECT_THROW(build_dsm_game(profiles, c), std::invalid_argument);
  c = DsmConfig{};
  c.trough_hours = {24};
  EXPECT_THROW(build_dsm_game(profiles, c), std::invalid_argument);
}

TEST(NonparticipatingLoad, Extremes) {
  const auto profiles = synth_profile(5, 3);
  DsmConfig c;
  c.n_consumers = 3;
  const game::FiniteGame g = build_dsm_game(profiles, c);
  const auto out = game::MixedProfile::pure(g, std::vector<int>(3, c.opt_out_action()));
  const auto in = game::MixedProfile::pure(g, std::vector<int>{0, 1, 2});
  EXPECT_EQ(nonparticipating_load(out, profiles, c), total_demand(profiles));
  for (double v : nonparticipating_load(in, profiles, c)) EXPECT_EQ(v, 0.0);
}

TEST(Solve, ResultCarriesResidualCertificate) {
  const auto profiles = synth_profile(42, 4, 0.8);
  DsmConfig c;
  c.n_consumers = 4;
  const game::FiniteGame g = build_dsm_game(profiles, c);
  const auto b = dsm_behaviors({0.5, 0.5, 0.3, 0.9}, 4);
  const DsmSolution s = solve_dsm(g, b, c.solver);
  ASSERT_TRUE(s.result.converged);
  EXPECT_LE(game::UtilityEvaluator(g, b).normalized_residual(s.result.profile), s.tolerance);
  const Hourly np = nonparticipating_load(s.result.profile, profiles, c);
  const Hourly total = total_demand(profiles);
  for (int h = 0; h < kHours; ++h) {
    EXPECT_GE(np[h], 0.0);
    EXPECT_LE(np[h], total[h] + 1e-12);
  }
}

TEST(Solve, AlphaOneReportEqualsEut) {
  const auto profiles = synth_profile(42, 4, 0.8);
  DsmConfig c;
  c.n_consumers = 4;
  c.alphas = {1.0, 1.0, 1.0, 1.0};
  const HourlyLoadReport r = hourly_report(profiles, c);
  for (int h = 0; h < kHours; ++h) EXPECT_NEAR(r.pt[h], r.eut[h], 1e-9);
}

TEST(Synth, DeterministicAndShaped) {
  const auto a = synth_profile(42, 6);
  const auto b = synth_profile(42, 6);
  const auto c = synth_profile(43, 6);
  ASSERT_EQ(a.size(), 6u);
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].hourly_demand, b[i].hourly_demand);
    EXPECT_NE(a[i].hourly_demand, c[i].hourly_demand);
    double peak = 0.0, trough = 0.0;
    for (int h = 17; h <= 21; ++h) peak += a[i].hourly_demand[h] / 5.0;
    for (int h = 2; h <= 5; ++h) trough += a[i].hourly_demand[h] / 4.0;
    EXPECT_GT(peak, trough);
    for (double v : a[i].hourly_demand) EXPECT_GE(v, 0.0);
  }
}

TEST(Synth, FrozenFixtureMatchesGenerator) {
  std::ifstream f(std::string(PTGRID_DATA_DIR) + "/dsm/profiles_seed42.csv");
  ASSERT_TRUE(f);
  std::stringstream frozen;
  frozen << f.rdbuf();
  std::stringstream fresh;
  write_profiles(fresh, synth_profile(42, 6));
  EXPECT_EQ(frozen.str(), fresh.str());
}

TEST(ProfilesCsv, RoundTrip) {
  const auto p = synth_profile(9, 3, 0.25);
  std::stringstream s;
  write_profiles(s, p);
  const auto q = read_profiles(s);
  ASSERT_EQ(q.size(), 3u);
  for (std::size_t i = 0; i < 3; ++i) {
    EXPECT_EQ(q[i].hourly_demand, p[i].hourly_demand);
    EXPECT_EQ(q[i].flexible_fraction, 0.25);
  }
}

TEST(ProfilesCsv, DiagnosticsNameRowAndColumn) {
  std::stringstream s;
  write_profiles(s, synth_profile(9, 2));
  std::string text = s.str();
  const auto second_row = text.find("\n1,");
  const auto cell = text.find(',', second_row + 3) + 1;  // h00 of row 2
  text.replace(cell, text.find(',', cell) - cell, "abc");
  std::istringstream in(text);
  try {
    read_profiles(in, "p.csv");
    FAIL();
  } catch (const InputError& e) {
    const std::string m = e.what();
    EXPECT_NE(m.find("row 2"), std::string::npos) << m;
    EXPECT_NE(m.find("column h00"), std::string::npos) << m;
  }
  std::istringstream neg("consumer,h00\n0,-1\n");
  EXPECT_THROW(read_profiles(neg), InputError);
}

}  // namespace
}  // namespace ptgrid::dsm
