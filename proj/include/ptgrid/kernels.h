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

#ifndef PTGRID_KERNELS_H_
#define PTGRID_KERNELS_H_

// Dense double-precision kernels behind the utility evaluators and the DSM
// load aggregation. Every kernel has a scalar reference version; an AVX2+FMA
// version is compiled separately and picked at runtime when the CPU has it.
// Results of the two variants agree to rounding (reduction order differs).

#include <cstddef>
#include <span>
#include <string_view>

namespace ptgrid::simd {

enum class Isa { kScalar, kAvx2 };

struct KernelTable {
  Isa isa;
  // sum_i a[i] * b[i]
  double (*dot)(const double* a, const double* b, std::size_t n);
  // sum_i a[i]
  double (*sum)(const double* a, std::size_t n);
  // y[i] += alpha * x[i]
  void (*axpy)(double alpha, const double* x, double* y, std::size_t n);
  // out[k * nx + j] = q[k] * x[j]; out must hold nq * nx values.
  void (*outer)(const double* q, std::size_t nq, const double* x,
                std::size_t nx, double* out);
};

// Kernel table in use. Chosen once from CPU features; the PTGRID_ISA
// environment variable ("scalar" or "avx2") overrides the choice.
const KernelTable& kernels();

// Kernel table for a specific ISA, or nullptr if it was not compiled in or
// the CPU cannot run it.
const KernelTable* kernels_for(Isa isa);

std::string_view isa_name(Isa isa);

inline double dot(std::span<const double> a, std::span<const double> b) {
  return kernels().dot(a.data(), b.data(), a.size());
}
inline double sum(std::span<const double> a) {
  return kernels().sum(a.data(), a.size());
}
inline void axpy(double alpha, std::span<const double> x, std::span<double> y) {
  kernels().axpy(alpha, x.data(), y.data(), x.size());
}
inline void outer(std::span<const double> q, std::span<const double> x,
                  std::span<double> out) {
  kernels().outer(q.data(), q.size(), x.data(), x.size(), out.data());
}

namespace scalar {
double dot(const double* a, const double* b, std::size_t n);
double sum(const double* a, std::size_t n);
void axpy(double alpha, const double* x, double* y, std::size_t n);
void outer(const double* q, std::size_t nq, const double* x, std::size_t nx,
           double* out);
}  // namespace scalar

namespace avx2 {
double dot(const double* a, const double* b, std::size_t n);
double sum(const double* a, std::size_t n);
void axpy(double alpha, const double* x, double* y, std::size_t n);
void outer(const double* q, std::size_t nq, const double* x, std::size_t nx,
           double* out);
}  // namespace avx2

}  // namespace ptgrid::simd

#endif  // PTGRID_KERNELS_H_
