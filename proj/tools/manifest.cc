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

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "commands.h"
#include "ptgrid/errors.h"

namespace ptgrid::cli {

void write_manifest(const std::filesystem::path& out_dir,
                    const std::string& command, const io::Config& config,
                    const std::vector<std::string>& outputs) {
  nlohmann::ordered_json j;
  j["command"] = command;
  j["version"] = PTGRID_VERSION;
  j["seed"] = config.has("seed") ? nlohmann::json(config.get_string("seed"))
                                 : nlohmann::json(nullptr);
  j["config"] = config.entries();
  j["outputs"] = outputs;
  std::ofstream f(out_dir / "manifest.json");
  f << j.dump(2) << '\n';
  if (!f) throw InputError("cannot write " + (out_dir / "manifest.json").string());
}

Manifest read_manifest(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open manifest " + path.string());
  Manifest m;
  try {
    const auto j = nlohmann::json::parse(in);
    m.command = j.at("command").get<std::string>();
    m.version = j.value("version", "");
    for (const auto& [key, value] : j.at("config").items()) {
      m.config.set(key, value.get<std::string>());
    }
    m.outputs = j.value("outputs", std::vector<std::string>{});
  } catch (const nlohmann::json::exception& e) {
    throw InputError(path.string() + ": malformed manifest: " + e.what());
  }
  return m;
}

}  // namespace ptgrid::cli
