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

#include <cstdlib>
#include <string_view>

#include "ptgrid/kernels.h"

namespace ptgrid::simd {
namespace {

constexpr KernelTable kScalarTable{Isa::kScalar, &scalar::dot, &scalar::sum,
                                   &scalar::axpy, &scalar::outer};

#ifdef PTGRID_HAVE_AVX2
constexpr KernelTable kAvx2Table{Isa::kAvx2, &avx2::dot, &avx2::sum,
                                 &avx2::axpy, &avx2::outer};

bool cpu_has_avx2() {
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
}
#endif

const KernelTable& select() {
  const char* forced = std::getenv("PTGRID_ISA");
  if (forced != nullptr && std::string_view(forced) == "scalar") {
    return kScalarTable;
  }
  if (const KernelTable* t = kernels_for(Isa::kAvx2)) return *t;
  return kScalarTable;
}

}  // namespace

const KernelTable* kernels_for(Isa isa) {
  switch (isa) {
    case Isa::kScalar:
      return &kScalarTable;
    case Isa::kAvx2:
#ifdef PTGRID_HAVE_AVX2
      if (cpu_has_avx2()) return &kAvx2Table;
#endif
      return nullptr;
  }
  return nullptr;
}

const KernelTable& kernels() {
  static const KernelTable& table = select();
  return table;
}

std::string_view isa_name(Isa isa) {
  return isa == Isa::kAvx2 ? "avx2" : "scalar";
}

}  // namespace ptgrid::simd
