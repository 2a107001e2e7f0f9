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

#ifndef PTGRID_SERIES_H_
#define PTGRID_SERIES_H_

// Small helpers for reading shapes off swept series.

#include <algorithm>
#include <charconv>
#include <cmath>
#include <optional>
#include <span>
#include <vector>

namespace ptgrid {

// Number of sign changes along `values`, ignoring entries with
// |v| <= zero_tol.
inline int count_sign_changes(std::span<const double> values,
                              double zero_tol = 0.0) {
  int changes = 0;
  int last = 0;
  for (double v : values) {
    if (std::abs(v) <= zero_tol) continue;
    const int s = v > 0.0 ? 1 : -1;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

// Abscissae where `values` changes sign, linearly interpolated between the
// bracketing samples (zeros within zero_tol are skipped).
inline std::vector<double> sign_change_locations(std::span<const double> x,
                                                 std::span<const double> values,
                                                 double zero_tol = 0.0) {
  std::vector<double> out;
  std::optional<std::size_t> last;
  for (std::size_t k = 0; k < values.size(); ++k) {
    if (std::abs(values[k]) <= zero_tol) continue;
    if (last && (values[k] > 0.0) != (values[*last] > 0.0)) {
      const double t = values[*last] / (values[*last] - values[k]);
      out.push_back(x[*last] + t * (x[k] - x[*last]));
    }
    last = k;
  }
  return out;
}

inline bool is_non_increasing(std::span<const double> values,
                              double slack = 0.0) {
  for (std::size_t k = 1; k < values.size(); ++k) {
    if (values[k] > values[k - 1] + slack) return false;
  }
  return true;
}

// Inclusive arithmetic grid; the last point is snapped to `stop`.
inline std::vector<double> linspace_step(double start, double stop, double step) {
  std::vector<double> out;
  if (!(step > 0.0) || stop < start) return out;
  const auto n = static_cast<long>(std::floor((stop - start) / step + 1e-9));
  for (long k = 0; k <= n; ++k) {
    // Round to 12 significant digits so 0.125 + 8 * 0.0025 reads as 0.145.
    char buf[32];
    const double v = start + static_cast<double>(k) * step;
    const auto end = std::to_chars(buf, buf + sizeof buf, v,
                                   std::chars_format::general, 12).ptr;
    double snapped = v;
    std::from_chars(buf, end, snapped);
    out.push_back(snapped);
  }
  if (std::abs(out.back() - stop) < 1e-9 * std::max(1.0, std::abs(stop))) {
    out.back() = stop;
  }
  return out;
}

}  // namespace ptgrid

#endif  // PTGRID_SERIES_H_
