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

#include <cmath>
#include <fstream>
#include <numbers>
#include <ostream>
#include <random>
#include <stdexcept>

#include "ptgrid/csv.h"
#include "ptgrid/dsm.h"
#include "ptgrid/errors.h"

namespace ptgrid::dsm {
namespace {

// Uniform double in [lo, hi) built from the top 53 bits, so the stream does
// not depend on the standard library's distribution implementation.
class Uniform {
 public:
  explicit Uniform(std::uint64_t seed) : engine_(seed) {}
  double operator()(double lo, double hi) {
    const double u = static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    return lo + (hi - lo) * u;
  }

 private:
  std::mt19937_64 engine_;
};

std::string hour_name(int h) {
  return std::string("h") + (h < 10 ? "0" : "") + std::to_string(h);
}

}  // namespace

double LoadProfile::total() const {
  double t = 0.0;
  for (double d : hourly_demand) t += d;
  return t;
}

void LoadProfile::validate() const {
  for (double d : hourly_demand) {
    if (!std::isfinite(d) || d < 0.0) {
      throw std::invalid_argument("hourly demand must be finite and >= 0");
    }
  }
  if (!(flexible_fraction >= 0.0 && flexible_fraction <= 1.0)) {
    throw std::invalid_argument("flexible_fraction must lie in [0,1]");
  }
}

std::vector<LoadProfile> synth_profile(std::uint64_t seed, int n,
                                       double flexible_fraction) {
  if (n < 1) throw std::invalid_argument("synth_profile needs n >= 1");
  Uniform uni(seed);
  std::vector<LoadProfile> out;
  for (int i = 0; i < n; ++i) {
    const double base = uni(0.4, 0.8);
    const double amp = uni(1.5, 3.0);
    const double center = uni(18.5, 19.5);
    const double width = uni(1.5, 2.5);
    const double midday = 0.3 * uni(0.5, 1.0);
    LoadProfile p;
    p.flexible_fraction = flexible_fraction;
    for (int h = 0; h < kHours; ++h) {
      const double night =
          std::max(0.0, -std::cos((h - 3.5) / kHours * 2.0 * std::numbers::pi));
      const double evening = (h - center) / width;
      const double noon = (h - 12.0) / 4.0;
      const double level = base * (0.6 + 0.4 * night) +
                           amp * std::exp(-0.5 * evening * evening) +
                           midday * std::exp(-0.5 * noon * noon);
      p.hourly_demand[h] = level * uni(0.9, 1.1);
    }
    out.push_back(p);
  }
  return out;
}

void write_profiles(std::ostream& out,
                    const std::vector<LoadProfile>& profiles) {
  std::vector<std::string> header{"consumer", "flexible_fraction"};
  for (int h = 0; h < kHours; ++h) header.push_back(hour_name(h));
  io::CsvWriter w(out, header);
  std::vector<double> row;
  for (std::size_t i = 0; i < profiles.size(); ++i) {
    row.assign({static_cast<double>(i), profiles[i].flexible_fraction});
    row.insert(row.end(), profiles[i].hourly_demand.begin(),
               profiles[i].hourly_demand.end());
    w.row(row);
  }
}

std::vector<LoadProfile> read_profiles(std::istream& in,
                                       const std::string& source) {
  const io::CsvTable t = io::read_csv(in, source);
  const int frac_col = t.column("flexible_fraction");
  std::array<int, kHours> cols{};
  for (int h = 0; h < kHours; ++h) {
    cols[h] = t.column(hour_name(h));
    if (cols[h] < 0) {
      throw InputError(source + ": header is missing column " + hour_name(h));
    }
  }
  std::vector<LoadProfile> out;
  for (std::size_t r = 0; r < t.rows.size(); ++r) {
    const auto& row = t.rows[r];
    const std::string at =
        source + ": row " + std::to_string(r + 1) + " (line " +
        std::to_string(t.line_numbers[r]) + "), column ";
    LoadProfile p;
    for (int h = 0; h < kHours; ++h) {
      const std::string where = at + hour_name(h);
      const double v = io::parse_number(row[cols[h]], where);
      if (v < 0.0) throw InputError(where + ": demand must be >= 0");
      p.hourly_demand[h] = v;
    }
    if (frac_col >= 0) {
      const std::string where = at + "flexible_fraction";
      p.flexible_fraction = io::parse_number(row[frac_col], where);
      if (p.flexible_fraction < 0.0 || p.flexible_fraction > 1.0) {
        throw InputError(where + ": must lie in [0,1]");
      }
    }
    out.push_back(p);
  }
  if (out.empty()) throw InputError(source + ": no profiles");
  return out;
}

std::vector<LoadProfile> load_profiles(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open profile file " + path);
  return read_profiles(in, path);
}

}  // namespace ptgrid::dsm
