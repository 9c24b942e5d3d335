// Copyright 2026 The qdstar Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include "qdstar/qudit.hpp"
#include "qdstar/representation.hpp"
#include "qdstar/star_product.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace qdstar {
namespace {

class ParallelReferenceTest : public ::testing::TestWithParam<std::size_t> {
 protected:
  void SetUp() override {
#ifdef _OPENMP
    // Force a real team even on single-core runners.
    saved_ = omp_get_max_threads();
    omp_set_num_threads(4);
#endif
  }
  void TearDown() override {
#ifdef _OPENMP
    omp_set_num_threads(saved_);
#endif
  }
  int saved_ = 1;
};

TEST_P(ParallelReferenceTest, KernelIsBitwiseEqual) {
  const std::size_t d = GetParam();
  for (auto rep : {Representation::kProbability, Representation::kMeanValue}) {
    const auto b = standard_basis(rep, d);
    EXPECT_EQ(compute_kernel(b).entries, serial::compute_kernel(b).entries) << to_string(rep);
  }
}

TEST_P(ParallelReferenceTest, DequantizerSolverIsBitwiseEqual) {
  const std::size_t d = GetParam();
  const auto par = build_parametrization(d);
  for (auto rep : {Representation::kProbability, Representation::kMeanValue}) {
    const auto spec = symbol_spec(rep, d);
    EXPECT_EQ(solve_dequantizers(par, spec), serial::solve_dequantizers(par, spec));
  }
}

TEST_P(ParallelReferenceTest, JacobiAgrees) {
  const std::size_t d = GetParam();
  for (auto rep : {Representation::kProbability, Representation::kMeanValue}) {
    const auto c = structure_constants(compute_kernel(standard_basis(rep, d)));
    const double fast = jacobi_deviation(c);
    const double reference = serial::jacobi_deviation(c);
    EXPECT_NEAR(fast, reference, 1e-13);
    EXPECT_LE(fast, 1e-10);
  }
}

TEST(ParallelReferenceCorruptionTest, JacobiSeesTheSameViolation) {
  auto c = structure_constants(compute_kernel(standard_basis(Representation::kMeanValue, 3)));
  c.entries(2, 0, 1) += Complex(0.25, -0.5);
  const double fast = jacobi_deviation(c);
  EXPECT_GT(fast, 0.1);
  EXPECT_NEAR(fast, serial::jacobi_deviation(c), 1e-13);
}

INSTANTIATE_TEST_SUITE_P(Dims, ParallelReferenceTest,
                         ::testing::Values(std::size_t{2}, std::size_t{3}, std::size_t{4},
                                           std::size_t{5}),
                         [](const auto& info) { return "d" + std::to_string(info.param); });

}  // namespace
}  // namespace qdstar
