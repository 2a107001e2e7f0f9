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

#ifndef PTGRID_CONFIG_H_
#define PTGRID_CONFIG_H_

// `key = value` scenario files. '#' starts a comment. List values are comma
// separated; numeric lists also accept start:stop:step ranges.

#include <iosfwd>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace ptgrid::io {

class Config {
 public:
  static Config parse(std::istream& in, const std::string& source = "<input>");
  static Config load(const std::string& path);

  bool has(const std::string& key) const { return values_.count(key) != 0; }
  void set(const std::string& key, const std::string& value);
  const std::map<std::string, std::string>& entries() const { return values_; }
  const std::string& source() const { return source_; }

  std::string get_string(const std::string& key) const;
  std::string get_string(const std::string& key, const std::string& fallback) const;
  double get_double(const std::string& key) const;
  double get_double(const std::string& key, double fallback) const;
  int get_int(const std::string& key) const;
  int get_int(const std::string& key, int fallback) const;
  bool get_bool(const std::string& key, bool fallback) const;
  std::vector<double> get_doubles(const std::string& key) const;
  std::vector<double> get_doubles(const std::string& key,
                                  const std::vector<double>& fallback) const;
  std::vector<int> get_ints(const std::string& key,
                            const std::vector<int>& fallback) const;

  // Throws InputError naming the first key not in `known`.
  void require_known(const std::set<std::string>& known) const;

  // Canonical text form: one `key = value` line per entry, sorted by key.
  std::string to_text() const;

 private:
  std::string where(const std::string& key) const;

  std::string source_ = "<input>";
  std::map<std::string, std::string> values_;
  std::map<std::string, int> lines_;
};

// "a:b:c" (inclusive range) or "x, y, z".
std::vector<double> parse_number_list(const std::string& text,
                                      const std::string& where);

}  // namespace ptgrid::io

#endif  // PTGRID_CONFIG_H_
