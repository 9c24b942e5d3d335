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

#include "qdstar/linear_solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <utility>

#include "qdstar/errors.hpp"

namespace qdstar {

LuFactorization::LuFactorization(RealMatrix a, double relative_pivot_threshold)
    : lu_(std::move(a)), perm_(lu_.rows) {
  const std::size_t n = lu_.rows;
  for (std::size_t c = 0; c < n; ++c) {
    double col = 0.0;
    for (std::size_t r = 0; r < n; ++r) col += std::abs(lu_(r, c));
    norm1_ = std::max(norm1_, col);
  }
  for (std::size_t i = 0; i < n; ++i) perm_[i] = i;

  double largest_pivot = 0.0;
  rank_ = n;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot_row = k;
    double pivot_abs = std::abs(lu_(k, k));
    for (std::size_t r = k + 1; r < n; ++r) {
      if (std::abs(lu_(r, k)) > pivot_abs) {
        pivot_abs = std::abs(lu_(r, k));
        pivot_row = r;
      }
    }
    largest_pivot = std::max(largest_pivot, pivot_abs);
    if (pivot_abs == 0.0 || pivot_abs <= relative_pivot_threshold * largest_pivot) {
      // Column is numerically dependent on the previous ones.
      --rank_;
      for (std::size_t r = k; r < n; ++r) lu_(r, k) = 0.0;
      continue;
    }
    if (pivot_row != k) {
      for (std::size_t c = 0; c < n; ++c) std::swap(lu_(k, c), lu_(pivot_row, c));
      std::swap(perm_[k], perm_[pivot_row]);
    }
    const double pivot = lu_(k, k);
    for (std::size_t r = k + 1; r < n; ++r) {
      const double factor = lu_(r, k) / pivot;
      lu_(r, k) = factor;
      if (factor == 0.0) continue;
      for (std::size_t c = k + 1; c < n; ++c) lu_(r, c) -= factor * lu_(k, c);
    }
  }
}

void LuFactorization::require_full_rank() const {
  if (!full_rank()) {
    throw SolverError("linear system is rank deficient: rank " +
                          std::to_string(rank_) + " of " +
                          std::to_string(size()),
                      rank_, std::numeric_limits<double>::infinity());
  }
}

std::vector<double> LuFactorization::solve(std::span<const double> rhs) const {
  require_full_rank();
  const std::size_t n = size();
  if (rhs.size() != n) {
    throw ValidationError("right-hand side has " + std::to_string(rhs.size()) +
                          " entries, system has " + std::to_string(n));
  }
  std::vector<double> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = rhs[perm_[i]];
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < r; ++c) x[r] -= lu_(r, c) * x[c];
  for (std::size_t r = n; r-- > 0;) {
    for (std::size_t c = r + 1; c < n; ++c) x[r] -= lu_(r, c) * x[c];
    x[r] /= lu_(r, r);
  }
  return x;
}

RealMatrix LuFactorization::inverse() const {
  require_full_rank();
  const std::size_t n = size();
  RealMatrix inv(n);
  std::vector<double> e(n, 0.0);
  for (std::size_t c = 0; c < n; ++c) {
    std::fill(e.begin(), e.end(), 0.0);
    e[c] = 1.0;
    const auto col = solve(e);
    for (std::size_t r = 0; r < n; ++r) inv(r, c) = col[r];
  }
  return inv;
}

double LuFactorization::condition_number_1() const {
  if (!full_rank()) return std::numeric_limits<double>::infinity();
  const RealMatrix inv = inverse();
  const std::size_t n = size();
  double inv_norm = 0.0;
  for (std::size_t c = 0; c < n; ++c) {
    double col = 0.0;
    for (std::size_t r = 0; r < n; ++r) col += std::abs(inv(r, c));
    inv_norm = std::max(inv_norm, col);
  }
  return norm1_ * inv_norm;
}

double residual_inf(const RealMatrix& a, std::span<const double> x,
                    std::span<const double> b) {
  double worst = 0.0;
  for (std::size_t r = 0; r < a.rows; ++r) {
    double acc = 0.0;
    for (std::size_t c = 0; c < a.rows; ++c) acc += a(r, c) * x[c];
    worst = std::max(worst, std::abs(acc - b[r]));
  }
  return worst;
}

}  // namespace qdstar
