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

// Regenerates the calibrated scenario fixtures under data/:
//   storage/calibrated.cfg   grid-searched (rho, kappa, G0) for the storage game
//   dsm/profiles_seed42.csv  synthetic profiles, seed 42, six consumers
//   dsm/calibrated.cfg       grid-searched shift mechanics and temperature floor

#include <filesystem>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "ptgrid/csv.h"
#include "ptgrid/dsm.h"
#include "ptgrid/series.h"
#include "ptgrid/storage.h"

namespace {

namespace fs = std::filesystem;
using ptgrid::io::format_number;
using ptgrid::linspace_step;

std::string join(const std::vector<int>& v) {
  std::string s;
  for (std::size_t k = 0; k < v.size(); ++k) s += (k ? ", " : "") + std::to_string(v[k]);
  return s;
}

int calibrate_storage(const fs::path& dir) {
  using namespace ptgrid::storage;
  Consumers consumers{StorageConsumer{20.0, 10.0, {}}, StorageConsumer{15.0, 5.0, {}}};
  const double passive = 100.0;
  StorageCalibrationGrid s;
  s.company_prices = linspace_step(0.10, 0.20, 0.005);
  s.penalty_coeffs = {0.0025, 0.005, 0.0075, 0.01, 0.015, 0.02};
  s.nominal_offsets = linspace_step(10.0, 60.0, 1.0);
  s.b_grid = linspace_step(0.03, 0.09, 0.001);
  s.alphas = {0.25, 0.65};
  s.targets = {0.045, 0.07};
  const StorageCalibration c = calibrate_storage(consumers, passive, s);
  std::cout << "storage: " << c.admissible << " of " << c.candidates
            << " candidates admissible\n";
  if (!c.found) {
    std::cerr << "storage: no admissible candidate\n";
    return 1;
  }
  std::ofstream f(dir / "storage" / "calibrated.cfg");
  f << "# Two-consumer storage game, calibrated by tools/calibrate_fixtures.\n"
    << "# Search: company_price 0.10:0.20:0.005, penalty_coeff {0.0025..0.02},\n"
    << "# nominal offset 10:60:1 kWh above passive load; crossovers measured at\n"
    << "# alpha " << format_number(s.alphas.back()) << ": consumer 1 "
    << format_number(c.crossover[0]) << ", consumer 2 "
    << format_number(c.crossover[1]) << " $/kWh.\n"
    << "consumer1.load = 20\nconsumer1.surplus = 10\n"
    << "consumer2.load = 15\nconsumer2.surplus = 5\n"
    << "passive_load = " << format_number(passive) << "\n"
    << "nominal_generation = " << format_number(passive + c.nominal_offset) << "\n"
    << "penalty_coeff = " << format_number(c.penalty_coeff) << "\n"
    << "company_price = " << format_number(c.company_price) << "\n"
    << "selling_price = 0.06\n"
    << "penalty_share = 0.5\n"
    << "alphas = 0.25, 0.65\n"
    << "b_grid = 0.03:0.09:0.001\n"
    << "rho_grid = 0.125:0.18:0.0025\n"
    << "ref_grid = 0:5:0.25\n"
    << "gammas = 1, 2\n"
    << "framing.alpha = 1\n"
    << "framing.beta_gain = 0.88\n"
    << "framing.beta_loss = 0.88\n";
  std::cout << "storage: rho=" << c.company_price << " kappa=" << c.penalty_coeff
            << " offset=" << c.nominal_offset << " crossovers "
            << c.crossover[0] << ", " << c.crossover[1] << "\n";
  return 0;
}

int calibrate_dsm(const fs::path& dir) {
  using namespace ptgrid::dsm;
  const auto profiles = synth_profile(42, 6);
  {
    std::ofstream f(dir / "dsm" / "profiles_seed42.csv");
    write_profiles(f, profiles);
  }
  DsmConfig base;
  DsmCalibrationGrid s;
  s.flexible_fractions = linspace_step(0.5, 1.0, 0.1);
  s.shift_spans = {2, 3, 4};
  s.trough_sets = {{1, 2, 3, 4}, {2, 3, 4}, {3, 4}, {2, 3, 4, 5}, {1, 2, 3, 4, 5}};
  s.final_temperatures = {0.01, 0.02, 0.03, 0.05};
  s.alpha_grid = linspace_step(0.05, 1.0, 0.05);
  s.heterogeneous_alphas = {0.5, 0.5, 0.2, 0.1, 0.1, 0.1};
  s.late_hours = {21, 22, 23};
  const DsmCalibration c = calibrate_dsm(profiles, base, s);
  std::cout << "dsm: " << c.admissible << " of " << c.candidates
            << " candidates admissible\n";
  if (!c.found) {
    std::cerr << "dsm: no admissible candidate\n";
    return 1;
  }
  std::ofstream f(dir / "dsm" / "calibrated.cfg");
  f << "# Six-consumer DSM game on the seed-42 synthetic profiles, calibrated by\n"
    << "# tools/calibrate_fixtures. EUT nonparticipating share at 19:00 = "
    << format_number(c.eut_share) << ".\n"
    << "profiles = profiles_seed42.csv\n"
    << "flexible_fraction = " << format_number(c.flexible_fraction) << "\n"
    << "start_window = 18, 19, 20\n"
    << "include_opt_out = true\n"
    << "price_fn_coeff = " << format_number(base.price_fn_coeff) << "\n"
    << "price_exponent = 1\n"
    << "shift_span = " << c.shift_span << "\n"
    << "trough_hours = " << join(c.trough_hours) << "\n"
    << "alphas = 0.5, 0.5, 0.2, 0.1, 0.1, 0.1\n"
    << "alpha_grid = 0.05:1:0.05\n"
    << "hour = 19\n"
    << "solver.step = " << format_number(base.solver.step) << "\n"
    << "solver.initial_temperature = "
    << format_number(base.solver.initial_temperature) << "\n"
    << "solver.temperature_decay = "
    << format_number(base.solver.temperature_decay) << "\n"
    << "solver.final_temperature = " << format_number(c.final_temperature) << "\n"
    << "solver.stationarity_tol = "
    << format_number(base.solver.stationarity_tol) << "\n"
    << "solver.max_iter = " << base.solver.max_iter << "\n";
  std::cout << "dsm: fraction=" << c.flexible_fraction << " span=" << c.shift_span
            << " trough=" << join(c.trough_hours) << " tau=" << c.final_temperature
            << " share=" << c.eut_share << " late gap=" << c.late_gap << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Regenerate calibrated scenario fixtures", "calibrate_fixtures"};
  std::string data_dir = PTGRID_DATA_DIR;
  std::string only;
  app.add_option("--data", data_dir, "Fixture root directory");
  app.add_option("--only", only, "storage or dsm")->check(CLI::IsMember({"storage", "dsm"}));
  CLI11_PARSE(app, argc, argv);

  const fs::path dir = data_dir;
  fs::create_directories(dir / "storage");
  fs::create_directories(dir / "dsm");
  int rc = 0;
  if (only.empty() || only == "storage") rc |= calibrate_storage(dir);
  if (only.empty() || only == "dsm") rc |= calibrate_dsm(dir);
  return rc;
}
