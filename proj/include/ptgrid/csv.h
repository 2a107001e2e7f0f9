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

#ifndef PTGRID_CSV_H_
#define PTGRID_CSV_H_

// Minimal comma-separated tables: no quoting, numbers written in shortest
// round-trip form.

#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace ptgrid::io {

std::string format_number(double value);

// Throws InputError mentioning `where` unless the whole cell is a finite
// number.
double parse_number(std::string_view cell, const std::string& where);

struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
  std::vector<int> line_numbers;  // source line of each row

  int column(std::string_view name) const;  // -1 when absent
};

// Blank lines are skipped; every row must have as many cells as the header.
CsvTable read_csv(std::istream& in, const std::string& source = "<input>");
CsvTable load_csv(const std::string& path);

class CsvWriter {
 public:
  CsvWriter(std::ostream& out, std::vector<std::string> header);
  void row(std::span<const double> values);
  void row(std::initializer_list<double> values) {
    row(std::span<const double>(values.begin(), values.size()));
  }

 private:
  std::ostream& out_;
  std::size_t width_;
};

}  // namespace ptgrid::io

#endif  // PTGRID_CSV_H_
