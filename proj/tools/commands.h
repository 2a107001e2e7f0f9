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

#ifndef PTGRID_TOOLS_COMMANDS_H_
#define PTGRID_TOOLS_COMMANDS_H_

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "ptgrid/config.h"
#include "ptgrid/dsm.h"
#include "ptgrid/storage.h"

namespace ptgrid::cli {

// Every command runs from a flat key/value Config; command-line flags are
// folded into it before the run, and the manifest records it verbatim.

struct StorageScenario {
  storage::Consumers consumers;
  storage::StorageGridConfig grid;
  std::vector<double> alphas;
  std::vector<double> b_grid;
  std::vector<double> rho_grid;
  std::vector<double> ref_grid;
  std::vector<double> gammas;
  storage::FramingSettings framing;
};

StorageScenario load_storage_scenario(const io::Config& config);

struct DsmScenario {
  std::vector<dsm::LoadProfile> profiles;
  dsm::DsmConfig config;
  std::vector<double> alpha_grid;
  int hour = 19;
};

DsmScenario load_dsm_scenario(const io::Config& config);

// Makes a relative path key absolute against the config file's directory.
void resolve_path_key(io::Config& config, const std::string& key,
                      const std::filesystem::path& base_dir);

struct RunResult {
  int exit_code = 0;
  std::vector<std::string> outputs;  // file names inside the output directory
};

// Runs `command` ("prospect", "solve", "storage", "dsm") and writes its
// outputs plus manifest.json into out_dir. Throws InputError / SolverError.
RunResult run_command(const std::string& command, const io::Config& config,
                      const std::filesystem::path& out_dir, std::ostream& out);

void write_manifest(const std::filesystem::path& out_dir,
                    const std::string& command, const io::Config& config,
                    const std::vector<std::string>& outputs);

struct Manifest {
  std::string command;
  io::Config config;
  std::vector<std::string> outputs;
  std::string version;
};

Manifest read_manifest(const std::filesystem::path& path);

// Full command line entry point; returns the process exit code.
int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err);

}  // namespace ptgrid::cli

#endif  // PTGRID_TOOLS_COMMANDS_H_
