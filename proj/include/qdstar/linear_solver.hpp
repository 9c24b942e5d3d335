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

#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace qdstar {

/// Dense real square matrix, row-major.
struct RealMatrix {
  std::size_t rows = 0;
  std::vector<double> data;

  explicit RealMatrix(std::size_t n = 0) : rows(n), data(n * n, 0.0) {}
  double& operator()(std::size_t r, std::size_t c) { return data[r * rows + c]; }
  double operator()(std::size_t r, std::size_t c) const {
    return data[r * rows + c];
  }
};

/// LU factorization with partial pivoting, P A = L U.
///
/// A pivot whose magnitude falls below `relative_pivot_threshold` times the
/// largest pivot seen counts as zero; the factorization then reports the
/// numerical rank and refuses to solve.
class LuFactorization {
 public:
  explicit LuFactorization(RealMatrix a, double relative_pivot_threshold = 1e-12);

  std::size_t size() const noexcept { return lu_.rows; }
  std::size_t rank() const noexcept { return rank_; }
  bool full_rank() const noexcept { return rank_ == lu_.rows; }

  /// Solves A x = b. Throws SolverError when the matrix is rank deficient.
  std::vector<double> solve(std::span<const double> rhs) const;

  /// A^{-1}, column by column.
  RealMatrix inverse() const;

  /// ||A||_1 ||A^{-1}||_1; infinity when rank deficient.
  double condition_number_1() const;

 private:
  void require_full_rank() const;

  RealMatrix lu_;
  std::vector<std::size_t> perm_;
  std::size_t rank_ = 0;
  double norm1_ = 0.0;
};

/// Max |A x - b|.
double residual_inf(const RealMatrix& a, std::span<const double> x,
                    std::span<const double> b);

}  // namespace qdstar
