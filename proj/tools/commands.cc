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

#include "commands.h"

#include <cstdlib>
#include <fstream>
#include <ostream>
#include <set>
#include <sstream>

#include <CLI11.hpp>

#include "ptgrid/csv.h"
#include "ptgrid/errors.h"
#include "ptgrid/game_io.h"
#include "ptgrid/prospect.h"
#include "ptgrid/series.h"
#include "ptgrid/solvers.h"

namespace ptgrid::cli {
namespace {

namespace fs = std::filesystem;

const std::set<std::string> kProspectKeys{"alpha", "gamma", "beta_gain",
                                          "beta_loss", "reference"};
const std::set<std::string> kSolveKeys{"game",      "alpha", "gamma", "beta",
                                       "reference", "grid",  "tol",   "max_iter"};
const std::set<std::string> kStorageKeys{
    "figure",          "consumer1.load",     "consumer1.surplus",
    "consumer2.load",  "consumer2.surplus",  "passive_load",
    "nominal_generation", "penalty_coeff",   "company_price",
    "selling_price",   "penalty_share",      "alphas",
    "b_grid",          "rho_grid",           "ref_grid",
    "gammas",          "framing.alpha",      "framing.beta_gain",
    "framing.beta_loss"};
const std::set<std::string> kDsmKeys{
    "figure",         "profiles",          "seed",
    "n_consumers",    "flexible_fraction", "start_window",
    "include_opt_out", "price_fn_coeff",   "price_exponent",
    "shift_span",     "trough_hours",      "alphas",
    "alpha_grid",     "hour",              "solver.step",
    "solver.initial_temperature",          "solver.temperature_decay",
    "solver.final_temperature",            "solver.tol",
    "solver.stationarity_tol",             "solver.max_iter"};

// Library argument checks surface as input errors at the CLI boundary.
template <typename F>
auto checked(F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  } catch (const std::domain_error& e) {
    throw InputError(e.what());
  }
}

std::string label(double alpha) { return "a" + io::format_number(alpha); }

std::ofstream open_output(const fs::path& dir, const std::string& name) {
  std::ofstream f(dir / name, std::ios::binary);
  if (!f) throw InputError("cannot write " + (dir / name).string());
  return f;
}

void prepare_dir(const fs::path& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw InputError("cannot create output directory " + dir.string());
}

// ---- prospect ----

RunResult run_prospect(const io::Config& cfg, const fs::path& out_dir,
                       std::ostream& out) {
  cfg.require_known(kProspectKeys);
  pt::PtProfile profile;
  profile.weighting = checked([&] {
    return pt::PrelecWeighting(cfg.get_double("alpha", pt::kDefaultAlpha));
  });
  profile.frame.reference = cfg.get_double("reference", 0.0);
  profile.frame.gamma = cfg.get_double("gamma", pt::kDefaultGamma);
  profile.frame.beta_gain = cfg.get_double("beta_gain", 1.0);
  profile.frame.beta_loss = cfg.get_double("beta_loss", 1.0);
  const std::string text =
      checked([&] { return pt::preference_demo(profile).to_text(); });
  out << text;
  prepare_dir(out_dir);
  open_output(out_dir, "prospect.txt") << text;
  return {0, {"prospect.txt"}};
}

// ---- solve ----

std::string describe_profile(const game::MixedProfile& p) {
  std::ostringstream s;
  s.precision(10);
  for (int i = 0; i < p.num_players(); ++i) {
    s << (i ? "; " : "") << "player " << i << " = (";
    for (std::size_t a = 0; a < p[i].size(); ++a) s << (a ? ", " : "") << p[i][a];
    s << ")";
  }
  return s.str();
}

RunResult run_solve(const io::Config& cfg, const fs::path& out_dir,
                    std::ostream& out) {
  cfg.require_known(kSolveKeys);
  const game::FiniteGame g = game::load_game(cfg.get_string("game"));
  pt::PtProfile prof;
  prof.weighting =
      checked([&] { return pt::PrelecWeighting(cfg.get_double("alpha", 1.0)); });
  prof.frame.reference = cfg.get_double("reference", 0.0);
  prof.frame.gamma = cfg.get_double("gamma", 1.0);
  prof.frame.beta_gain = prof.frame.beta_loss = cfg.get_double("beta", 1.0);
  checked([&] { prof.frame.validate(); return 0; });
  const game::Behaviors behaviors(g.num_players(), prof);

  std::vector<game::EquilibriumResult> found;
  bool ok = true;
  const bool two_by_two = g.num_players() == 2 && g.num_actions(0) == 2 &&
                          g.num_actions(1) == 2;
  if (two_by_two) {
    const auto sol = game::solve_2x2(g, behaviors);
    found = sol.equilibria;
    if (!sol.note.empty()) out << "note: " << sol.note << "\n";
    ok = !found.empty();
  } else {
    game::FixedPointOptions opt;
    opt.tol = cfg.get_double("tol", opt.tol);
    opt.max_iter = cfg.get_int("max_iter", 100000);
    auto r = checked([&] {
      return game::solve_fixed_point(g, behaviors, game::MixedProfile::uniform(g),
                                     opt);
    });
    ok = r.converged;
    found.push_back(std::move(r));
  }

  std::vector<std::string> outputs;
  std::unique_ptr<io::CsvWriter> csv;
  std::ofstream file;
  if (!out_dir.empty()) {
    prepare_dir(out_dir);
    file = open_output(out_dir, "equilibria.csv");
    std::vector<std::string> header{"index"};
    for (int i = 0; i < g.num_players(); ++i) {
      for (int a = 0; a < g.num_actions(i); ++a) {
        header.push_back("p" + std::to_string(i) + "_a" + std::to_string(a));
      }
    }
    header.push_back("residual");
    csv = std::make_unique<io::CsvWriter>(file, header);
    outputs.push_back("equilibria.csv");
  }
  for (std::size_t k = 0; k < found.size(); ++k) {
    const auto& e = found[k];
    out << "equilibrium " << k + 1 << ": " << describe_profile(e.profile)
        << "; residual = " << io::format_number(e.residual);
    if (!two_by_two) {
      out << "; iterations = " << e.iterations
          << (e.converged ? "" : " (not converged)");
    }
    out << "\n";
    if (csv) {
      std::vector<double> row{static_cast<double>(k + 1)};
      for (const auto& s : e.profile.strategies) row.insert(row.end(), s.begin(), s.end());
      row.push_back(e.residual);
      csv->row(row);
    }
  }
  if (found.empty()) out << "no equilibrium found\n";

  if (cfg.has("grid")) {
    const int grid = cfg.get_int("grid");
    if (grid < 1) throw InputError("grid must be >= 1");
    const auto points = game::brute_force_equilibrium(g, behaviors, grid);
    double worst = 0.0;
    for (const auto& e : found) {
      double nearest = std::numeric_limits<double>::infinity();
      for (const auto& p : points) {
        nearest = std::min(nearest, game::max_abs_difference(e.profile, p.profile));
      }
      worst = std::max(worst, nearest);
    }
    out << "brute-force grid " << grid << ": " << points.size()
        << " local minima; farthest equilibrium from a minimum = "
        << io::format_number(worst) << "\n";
  }
  return {ok ? 0 : 3, outputs};
}

// ---- storage ----

RunResult run_storage(const io::Config& cfg, const fs::path& out_dir) {
  cfg.require_known(kStorageKeys);
  const int figure = cfg.get_int("figure");
  const StorageScenario sc = load_storage_scenario(cfg);
  prepare_dir(out_dir);
  const std::string name = "fig" + std::to_string(figure) + ".csv";
  bool all_found = true;

  if (figure == 4 || figure == 5 || figure == 6) {
    const auto rows = checked([&] {
      return figure == 6
                 ? storage::sweep_company_price(sc.consumers, sc.grid, sc.rho_grid,
                                                sc.alphas)
                 : storage::sweep_selling_price(sc.consumers, sc.grid, sc.b_grid,
                                                sc.alphas);
    });
    std::vector<std::string> header{figure == 6 ? "rho" : "b"};
    auto add = [&](const std::string& prefix) {
      if (figure == 4) {
        header.push_back(prefix + "_buy1");
        header.push_back(prefix + "_buy2");
      } else if (figure == 5) {
        header.push_back(prefix + "_revenue");
      } else {
        header.push_back(prefix + "_load");
      }
    };
    add("eut");
    for (double a : sc.alphas) add("pt_" + label(a));
    header.push_back("found");
    std::ofstream f = open_output(out_dir, name);
    io::CsvWriter w(f, header);
    for (const auto& r : rows) {
      std::vector<double> v{r.value};
      bool found = true;
      for (const auto& p : r.points) {
        found = found && p.found;
        if (figure == 4) {
          v.push_back(p.buy_probability[0]);
          v.push_back(p.buy_probability[1]);
        } else if (figure == 5) {
          v.push_back(p.revenue);
        } else {
          v.push_back(p.expected_load);
        }
      }
      v.push_back(found ? 1.0 : 0.0);
      all_found = all_found && found;
      w.row(v);
    }
  } else if (figure == 7) {
    const auto rows = checked([&] {
      return storage::framing_sweep(sc.consumers, sc.grid, sc.ref_grid, sc.gammas,
                                    sc.framing);
    });
    std::ofstream f = open_output(out_dir, name);
    io::CsvWriter w(f, {"gamma", "reference", "pt_total", "eut_total", "found"});
    for (const auto& r : rows) {
      all_found = all_found && r.found;
      w.row({r.gamma, r.reference, r.pt_total, r.eut_total, r.found ? 1.0 : 0.0});
    }
  } else {
    throw InputError("storage --figure must be 4, 5, 6 or 7");
  }
  return {all_found ? 0 : 3, {name}};
}

// ---- dsm ----

RunResult run_dsm(const io::Config& cfg, const fs::path& out_dir) {
  cfg.require_known(kDsmKeys);
  const int figure = cfg.get_int("figure");
  if (figure != 8 && figure != 9) throw InputError("dsm --figure must be 8 or 9");
  const DsmScenario sc = load_dsm_scenario(cfg);
  prepare_dir(out_dir);
  const std::string name = "fig" + std::to_string(figure) + ".csv";
  std::ofstream f = open_output(out_dir, name);
  bool converged = true;
  if (figure == 8) {
    const auto r =
        checked([&] { return dsm::hourly_report(sc.profiles, sc.config); });
    io::CsvWriter w(f, {"hour", "eut", "pt"});
    for (int h = 0; h < dsm::kHours; ++h) w.row({double(h), r.eut[h], r.pt[h]});
    converged = r.converged;
  } else {
    const auto rows = checked([&] {
      return dsm::rationality_sweep(sc.profiles, sc.config, sc.alpha_grid, sc.hour);
    });
    io::CsvWriter w(f, {"alpha", "pt", "eut", "converged"});
    for (const auto& r : rows) {
      w.row({r.alpha, r.pt, r.eut, r.converged ? 1.0 : 0.0});
      converged = converged && r.converged;
    }
  }
  return {converged ? 0 : 3, {name}};
}

std::vector<double> expand(std::vector<double> v, int n) {
  if (v.size() == 1 && n > 1) v.assign(n, v[0]);
  return v;
}

}  // namespace

StorageScenario load_storage_scenario(const io::Config& cfg) {
  StorageScenario sc;
  sc.consumers[0].load = cfg.get_double("consumer1.load", 20.0);
  sc.consumers[0].surplus = cfg.get_double("consumer1.surplus", 10.0);
  sc.consumers[1].load = cfg.get_double("consumer2.load", 15.0);
  sc.consumers[1].surplus = cfg.get_double("consumer2.surplus", 5.0);
  auto& g = sc.grid;
  g.passive_load = cfg.get_double("passive_load", 100.0);
  g.nominal_generation = cfg.get_double(
      "nominal_generation",
      storage::default_nominal_generation(sc.consumers, g.passive_load));
  g.penalty_coeff = cfg.get_double("penalty_coeff", 0.0025);
  g.company_price = cfg.get_double("company_price", 0.145);
  g.selling_price = cfg.get_double("selling_price", 0.06);
  g.penalty_share = cfg.get_double("penalty_share", 0.5);
  sc.alphas = cfg.get_doubles("alphas", {0.25, 0.65});
  sc.b_grid = cfg.get_doubles("b_grid", linspace_step(0.03, 0.09, 0.001));
  sc.rho_grid = cfg.get_doubles("rho_grid", linspace_step(0.125, 0.18, 0.0025));
  sc.ref_grid = cfg.get_doubles("ref_grid", linspace_step(0.0, 5.0, 0.25));
  sc.gammas = cfg.get_doubles("gammas", {1.0, 2.0});
  sc.framing.alpha = cfg.get_double("framing.alpha", 1.0);
  sc.framing.beta_gain = cfg.get_double("framing.beta_gain", pt::kDefaultBeta);
  sc.framing.beta_loss = cfg.get_double("framing.beta_loss", pt::kDefaultBeta);
  checked([&] {
    for (const auto& c : sc.consumers) c.validate();
    g.validate();
    for (double a : sc.alphas) pt::PrelecWeighting{a};
    pt::PrelecWeighting{sc.framing.alpha};
    return 0;
  });
  return sc;
}

DsmScenario load_dsm_scenario(const io::Config& cfg) {
  DsmScenario sc;
  auto& c = sc.config;
  if (cfg.has("profiles")) {
    sc.profiles = dsm::load_profiles(cfg.get_string("profiles"));
    c.n_consumers = cfg.get_int("n_consumers", static_cast<int>(sc.profiles.size()));
    if (c.n_consumers != static_cast<int>(sc.profiles.size())) {
      throw InputError(cfg.source() + ": n_consumers does not match the profile file");
    }
  } else {
    c.n_consumers = cfg.get_int("n_consumers", 6);
    const double seed = cfg.get_double("seed", 42);
    if (seed < 0 || seed != std::floor(seed)) throw InputError("seed must be a non-negative integer");
    if (c.n_consumers < 1) throw InputError("n_consumers must be >= 1");
    sc.profiles = dsm::synth_profile(static_cast<std::uint64_t>(seed), c.n_consumers);
  }
  if (cfg.has("flexible_fraction")) {
    const double f = cfg.get_double("flexible_fraction");
    for (auto& p : sc.profiles) p.flexible_fraction = f;
  }
  c.start_window = cfg.get_ints("start_window", c.start_window);
  c.include_opt_out = cfg.get_bool("include_opt_out", c.include_opt_out);
  c.price_fn_coeff = cfg.get_double("price_fn_coeff", c.price_fn_coeff);
  c.price_exponent = cfg.get_double("price_exponent", c.price_exponent);
  c.shift_span = cfg.get_int("shift_span", c.shift_span);
  c.trough_hours = cfg.get_ints("trough_hours", c.trough_hours);
  c.alphas = expand(cfg.get_doubles("alphas", {}), c.n_consumers);
  auto& s = c.solver;
  s.step = cfg.get_double("solver.step", s.step);
  s.initial_temperature =
      cfg.get_double("solver.initial_temperature", s.initial_temperature);
  s.temperature_decay = cfg.get_double("solver.temperature_decay", s.temperature_decay);
  s.final_temperature = cfg.get_double("solver.final_temperature", s.final_temperature);
  s.tol = cfg.get_double("solver.tol", s.tol);
  s.stationarity_tol = cfg.get_double("solver.stationarity_tol", s.stationarity_tol);
  s.max_iter = cfg.get_int("solver.max_iter", s.max_iter);
  sc.alpha_grid = cfg.get_doubles("alpha_grid", linspace_step(0.05, 1.0, 0.05));
  sc.hour = cfg.get_int("hour", 19);
  checked([&] {
    c.validate();
    for (const auto& p : sc.profiles) p.validate();
    for (double a : sc.alpha_grid) pt::PrelecWeighting{a};
    if (sc.hour < 0 || sc.hour >= dsm::kHours) throw std::invalid_argument("hour must lie in [0,23]");
    return 0;
  });
  return sc;
}

void resolve_path_key(io::Config& config, const std::string& key,
                      const fs::path& base_dir) {
  if (!config.has(key)) return;
  fs::path p = config.get_string(key);
  if (p.is_relative()) p = base_dir / p;
  config.set(key, fs::absolute(p).lexically_normal().string());
}

RunResult run_command(const std::string& command, const io::Config& config,
                      const fs::path& out_dir, std::ostream& out) {
  RunResult r;
  if (command == "prospect") {
    r = run_prospect(config, out_dir, out);
  } else if (command == "solve") {
    r = run_solve(config, out_dir, out);
  } else if (command == "storage") {
    r = run_storage(config, out_dir);
  } else if (command == "dsm") {
    r = run_dsm(config, out_dir);
  } else {
    throw InputError("unknown command '" + command + "'");
  }
  if (!out_dir.empty()) write_manifest(out_dir, command, config, r.outputs);
  for (const auto& name : r.outputs) {
    if (command != "prospect" && command != "solve") {
      out << "wrote " << (out_dir / name).string() << "\n";
    }
  }
  return r;
}

int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Prospect-theoretic smart grid games", "ptgrid"};
  app.set_version_flag("--version", std::string(PTGRID_VERSION));
  app.require_subcommand(1);

  std::string config_path, out_dir, alpha, gamma, beta, grid, seed, game_path,
      manifest_path;
  int figure = 0;
  std::optional<double> tol;
  std::optional<int> max_iter;

  auto common = [&](CLI::App* sub, bool with_config) {
    if (with_config) sub->add_option("--config", config_path, "Scenario file")->check(CLI::ExistingFile);
    sub->add_option("--out", out_dir, "Output directory (default $PTGRID_OUT or ./out)");
  };
  auto* prospect = app.add_subcommand("prospect", "Gain/loss preference demo");
  common(prospect, true);
  prospect->add_option("--alpha", alpha, "Prelec alpha");
  prospect->add_option("--gamma", gamma, "Loss aversion");
  prospect->add_option("--beta", beta, "Value-function curvature");

  auto* solve = app.add_subcommand("solve", "Equilibria of a game file");
  solve->add_option("game", game_path, "Game file")->required();
  solve->add_option("--out", out_dir, "Also write equilibria.csv here");
  solve->add_option("--alpha", alpha, "Prelec alpha for every player");
  solve->add_option("--gamma", gamma, "Loss aversion");
  solve->add_option("--beta", beta, "Value-function curvature");
  solve->add_option("--grid", grid, "Cross-check against a brute-force grid");
  solve->add_option("--tol", tol, "Residual tolerance");
  solve->add_option("--max-iter", max_iter, "Iteration budget");

  auto* stor = app.add_subcommand("storage", "Storage game figure tables");
  common(stor, true);
  stor->add_option("--figure", figure, "4, 5, 6 or 7")->required();
  stor->add_option("--alpha", alpha, "Alpha list (figure 7: weighting alpha)");
  stor->add_option("--gamma", gamma, "Loss-aversion list for figure 7");
  stor->add_option("--beta", beta, "Framing curvature for figure 7");
  stor->add_option("--grid", grid, "Sweep grid, start:stop:step or list");

  auto* dsmc = app.add_subcommand("dsm", "DSM game figure tables");
  common(dsmc, true);
  dsmc->add_option("--figure", figure, "8 or 9")->required();
  dsmc->add_option("--alpha", alpha, "Per-consumer alphas (one value: all)");
  dsmc->add_option("--seed", seed, "Synthetic profile seed");
  dsmc->add_option("--grid", grid, "Alpha grid for figure 9");
  dsmc->add_option("--tol", tol, "Residual tolerance");
  dsmc->add_option("--max-iter", max_iter, "Iteration budget");

  auto* replay = app.add_subcommand("replay", "Re-run from a manifest.json");
  replay->add_option("manifest", manifest_path, "Manifest file")->required()->check(CLI::ExistingFile);
  replay->add_option("--out", out_dir, "Output directory (default: the manifest's)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  }

  try {
    CLI::App* sub = app.get_subcommands().front();
    const std::string command = sub->get_name();
    fs::path out_path = out_dir;
    if (out_path.empty() && command != "solve") {
      const char* env = std::getenv("PTGRID_OUT");
      out_path = env && *env ? fs::path(env) : fs::path("out");
    }

    if (command == "replay") {
      const Manifest m = read_manifest(manifest_path);
      if (out_dir.empty()) out_path = fs::path(manifest_path).parent_path();
      if (out_path.empty()) out_path = ".";
      return run_command(m.command, m.config, out_path, out).exit_code;
    }

    io::Config cfg;
    if (!config_path.empty()) {
      cfg = io::Config::load(config_path);
      const fs::path base = fs::path(config_path).parent_path();
      resolve_path_key(cfg, "profiles", base);
    }
    auto set_if = [&](const std::string& key, const std::string& v) {
      if (!v.empty()) cfg.set(key, v);
    };
    if (command == "prospect") {
      set_if("alpha", alpha);
      set_if("gamma", gamma);
      set_if("beta_gain", beta);
      set_if("beta_loss", beta);
    } else if (command == "solve") {
      cfg.set("game", fs::absolute(game_path).lexically_normal().string());
      set_if("alpha", alpha);
      set_if("gamma", gamma);
      set_if("beta", beta);
      set_if("grid", grid);
    } else if (command == "storage") {
      cfg.set("figure", std::to_string(figure));
      if (figure == 7) {
        set_if("framing.alpha", alpha);
        set_if("gammas", gamma);
        set_if("framing.beta_gain", beta);
        set_if("framing.beta_loss", beta);
        set_if("ref_grid", grid);
      } else {
        set_if("alphas", alpha);
        set_if(figure == 6 ? "rho_grid" : "b_grid", grid);
      }
    } else if (command == "dsm") {
      cfg.set("figure", std::to_string(figure));
      set_if("alphas", alpha);
      set_if("seed", seed);
      set_if("alpha_grid", grid);
      if (tol) cfg.set("solver.tol", io::format_number(*tol));
      if (max_iter) cfg.set("solver.max_iter", std::to_string(*max_iter));
    }
    if (command == "solve") {
      if (tol) cfg.set("tol", io::format_number(*tol));
      if (max_iter) cfg.set("max_iter", std::to_string(*max_iter));
    }
    const RunResult r = run_command(command, cfg, out_path, out);
    if (r.exit_code == 3) err << "ptgrid: solver did not produce a result for every point\n";
    return r.exit_code;
  } catch (const InputError& e) {
    err << "ptgrid: " << e.what() << "\n";
    return 2;
  } catch (const SolverError& e) {
    err << "ptgrid: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    err << "ptgrid: " << e.what() << "\n";
    return 3;
  }
}

}  // namespace ptgrid::cli
