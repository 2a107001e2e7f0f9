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

#ifndef PTGRID_ERRORS_H_
#define PTGRID_ERRORS_H_

#include <stdexcept>
#include <string>

namespace ptgrid {

// Malformed or inconsistent user input: config files, game files, profile
// CSVs. The CLI maps this to exit code 2.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A numerical routine could not produce a usable answer (no equilibrium
// within tolerance, enumeration budget exceeded). The CLI maps this to exit
// code 3.
class SolverError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace ptgrid

#endif  // PTGRID_ERRORS_H_
