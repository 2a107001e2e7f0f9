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

#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <vector>

#include "ptgrid/kernels.h"

namespace ptgrid::simd {
namespace {

std::vector<double> random_vector(std::mt19937_64& rng, std::size_t n) {
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  std::vector<double> v(n);
  for (double& x : v) x = u(rng);
  return v;
}

class KernelEquivalence : public ::testing::TestWithParam<std::size_t> {
 protected:
  const KernelTable* scalar_ = kernels_for(Isa::kScalar);
  const KernelTable* vector_ = kernels_for(Isa::kAvx2);
};

TEST_P(KernelEquivalence, AgreesWithScalarReference) {
  if (vector_ == nullptr) GTEST_SKIP() << "AVX2 not available";
  const std::size_t n = GetParam();
  std::mt19937_64 rng(1000 + n);
  const auto a = random_vector(rng, n);
  const auto b = random_vector(rng, n);
  const double tol = 1e-13 * static_cast<double>(n + 1);
  EXPECT_NEAR(scalar_->dot(a.data(), b.data(), n), vector_->dot(a.data(), b.data(), n), tol);
  EXPECT_NEAR(scalar_->sum(a.data(), n), vector_->sum(a.data(), n), tol);

  auto y1 = b, y2 = b;
  scalar_->axpy(0.37, a.data(), y1.data(), n);
  vector_->axpy(0.37, a.data(), y2.data(), n);
  for (std::size_t i = 0; i < n; ++i) EXPECT_NEAR(y1[i], y2[i], 1e-15);

  const std::size_t nq = n % 5 + 1;
  const auto q = random_vector(rng, nq);
  std::vector<double> o1(nq * n), o2(nq * n);
  scalar_->outer(q.data(), nq, a.data(), n, o1.data());
  vector_->outer(q.data(), nq, a.data(), n, o2.data());
  // Plain products: must be bit-identical.
  EXPECT_EQ(o1, o2);
}

INSTANTIATE_TEST_SUITE_P(Lengths, KernelEquivalence,
                         ::testing::Values(0, 1, 2, 3, 4, 5, 7, 8, 9, 15, 16,
                                           17, 31, 64, 67, 256, 1000));

TEST(Kernels, ScalarOracle) {
  const std::vector<double> a{1, 2, 3, 4, 5};
  const std::vector<double> b{5, 4, 3, 2, 1};
  EXPECT_DOUBLE_EQ(scalar::dot(a.data(), b.data(), 5), 35.0);
  EXPECT_DOUBLE_EQ(scalar::sum(a.data(), 5), 15.0);
  std::vector<double> out(10);
  scalar::outer(a.data(), 2, b.data(), 5, out.data());
  EXPECT_EQ(out, (std::vector<double>{5, 4, 3, 2, 1, 10, 8, 6, 4, 2}));
}

TEST(Kernels, DispatchPicksAnAvailableTable) {
  const KernelTable& k = kernels();
  EXPECT_EQ(kernels_for(k.isa), &k);
  EXPECT_FALSE(isa_name(k.isa).empty());
  EXPECT_NE(kernels_for(Isa::kScalar), nullptr);
}

}  // namespace
}  // namespace ptgrid::simd
