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

#include "qdstar/complex_matrix.hpp"

#include <gtest/gtest.h>

#include "qdstar/errors.hpp"
#include "test_util.hpp"

namespace qdstar {
namespace {

using testing::kI;
using testing::MatrixNear;

TEST(ComplexMatrixTest, IdentityTraceAndUnit) {
  const auto id = ComplexMatrix::identity(4);
  EXPECT_EQ(id.trace(), Complex(4.0));
  const auto e = ComplexMatrix::unit(3, 2, 0);
  EXPECT_EQ(e(2, 0), Complex(1.0));
  EXPECT_EQ(e.trace(), Complex(0.0));
}

TEST(ComplexMatrixTest, ProductMatchesHandComputation) {
  const ComplexMatrix a{{1, kI}, {0, 2}};
  const ComplexMatrix b{{0, 1}, {1, 0}};
  EXPECT_TRUE(MatrixNear(a * b, ComplexMatrix{{kI, 1}, {2, 0}}, 0.0));
  EXPECT_EQ(trace_of_product(a, b), (a * b).trace());
}

TEST(ComplexMatrixTest, AdjointAndHermiticity) {
  const ComplexMatrix a{{1, kI}, {0, 2}};
  EXPECT_TRUE(MatrixNear(a.adjoint(), ComplexMatrix{{1, 0}, {-kI, 2}}, 0.0));
  EXPECT_FALSE(a.is_hermitian());
  EXPECT_TRUE((a + a.adjoint()).is_hermitian());
  EXPECT_TRUE((ComplexMatrix{{1, 1e-12}, {0, 1}}).is_hermitian(1e-10));
}

TEST(ComplexMatrixTest, HermitianEigenvaluesAscending) {
  const ComplexMatrix sy{{0, -kI}, {kI, 0}};
  const auto ev = hermitian_eigenvalues(sy);
  ASSERT_EQ(ev.size(), 2u);
  EXPECT_NEAR(ev[0], -1.0, 1e-14);
  EXPECT_NEAR(ev[1], 1.0, 1e-14);
}

TEST(ComplexMatrixTest, DimensionMismatchThrows) {
  EXPECT_THROW(ComplexMatrix::identity(2) * ComplexMatrix::identity(3),
               ValidationError);
  EXPECT_THROW(max_abs_diff(ComplexMatrix(2), ComplexMatrix(3)), ValidationError);
  EXPECT_THROW(ComplexMatrix(2, std::vector<Complex>(3)), ValidationError);
  EXPECT_THROW((ComplexMatrix{{1, 2}, {3}}), ValidationError);
}

}  // namespace
}  // namespace qdstar
