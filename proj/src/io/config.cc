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

#include "ptgrid/config.h"

#include <cmath>
#include <fstream>
#include <istream>
#include <sstream>

#include "ptgrid/csv.h"
#include "ptgrid/errors.h"
#include "ptgrid/series.h"

namespace ptgrid::io {
namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

}  // namespace

std::vector<double> parse_number_list(const std::string& text,
                                      const std::string& where) {
  const std::string t = trim(text);
  if (t.empty()) throw InputError(where + ": empty list");
  if (t.find(':') != std::string::npos) {
    std::vector<std::string> parts;
    std::stringstream ss(t);
    std::string part;
    while (std::getline(ss, part, ':')) parts.push_back(part);
    if (parts.size() != 3) {
      throw InputError(where + ": range must be start:stop:step");
    }
    const double start = parse_number(parts[0], where);
    const double stop = parse_number(parts[1], where);
    const double step = parse_number(parts[2], where);
    if (!(step > 0.0) || stop < start) {
      throw InputError(where + ": range needs step > 0 and stop >= start");
    }
    if ((stop - start) / step > 1e6) throw InputError(where + ": range too long");
    return linspace_step(start, stop, step);
  }
  std::vector<double> out;
  std::stringstream ss(t);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_number(item, where));
  return out;
}

Config Config::parse(std::istream& in, const std::string& source) {
  Config c;
  c.source_ = source;
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (const auto hash = line.find('#'); hash != std::string::npos) {
      line.resize(hash);
    }
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    const std::string at = source + ":" + std::to_string(number);
    if (eq == std::string::npos) throw InputError(at + ": expected key = value");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty()) throw InputError(at + ": missing key");
    if (c.values_.count(key)) throw InputError(at + ": duplicate key '" + key + "'");
    c.values_[key] = value;
    c.lines_[key] = number;
  }
  return c;
}

Config Config::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open config file " + path);
  return parse(in, path);
}

void Config::set(const std::string& key, const std::string& value) {
  values_[key] = value;
  lines_.erase(key);
}

std::string Config::where(const std::string& key) const {
  const auto it = lines_.find(key);
  const std::string at =
      it == lines_.end() ? source_ : source_ + ":" + std::to_string(it->second);
  return at + ": key '" + key + "'";
}

std::string Config::get_string(const std::string& key) const {
  const auto it = values_.find(key);
  if (it == values_.end()) {
    throw InputError(source_ + ": missing required key '" + key + "'");
  }
  return it->second;
}

std::string Config::get_string(const std::string& key,
                               const std::string& fallback) const {
  return has(key) ? get_string(key) : fallback;
}

double Config::get_double(const std::string& key) const {
  return parse_number(get_string(key), where(key));
}

double Config::get_double(const std::string& key, double fallback) const {
  return has(key) ? get_double(key) : fallback;
}

int Config::get_int(const std::string& key) const {
  const double v = get_double(key);
  if (v != std::floor(v) || std::abs(v) > 1e9) {
    throw InputError(where(key) + ": expected an integer");
  }
  return static_cast<int>(v);
}

int Config::get_int(const std::string& key, int fallback) const {
  return has(key) ? get_int(key) : fallback;
}

bool Config::get_bool(const std::string& key, bool fallback) const {
  if (!has(key)) return fallback;
  const std::string v = get_string(key);
  if (v == "true" || v == "1" || v == "yes") return true;
  if (v == "false" || v == "0" || v == "no") return false;
  throw InputError(where(key) + ": expected true or false");
}

std::vector<double> Config::get_doubles(const std::string& key) const {
  return parse_number_list(get_string(key), where(key));
}

std::vector<double> Config::get_doubles(const std::string& key,
                                        const std::vector<double>& fallback) const {
  return has(key) ? get_doubles(key) : fallback;
}

std::vector<int> Config::get_ints(const std::string& key,
                                  const std::vector<int>& fallback) const {
  if (!has(key)) return fallback;
  std::vector<int> out;
  for (double v : get_doubles(key)) {
    if (v != std::floor(v) || std::abs(v) > 1e9) {
      throw InputError(where(key) + ": expected integers");
    }
    out.push_back(static_cast<int>(v));
  }
  return out;
}

void Config::require_known(const std::set<std::string>& known) const {
  for (const auto& [key, value] : values_) {
    if (!known.count(key)) throw InputError(where(key) + ": unknown key");
  }
}

std::string Config::to_text() const {
  std::string out;
  for (const auto& [key, value] : values_) out += key + " = " + value + "\n";
  return out;
}

}  // namespace ptgrid::io
