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

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace qdstar {

using Complex = std::complex<double>;

inline constexpr double kDefaultTolerance = 1e-10;

/// Dense square complex matrix stored row-major.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  explicit ComplexMatrix(std::size_t dim);
  ComplexMatrix(std::size_t dim, std::vector<Complex> entries);
  /// Row-wise literal; throws ValidationError unless the rows form a square.
  ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

  static ComplexMatrix identity(std::size_t dim);
  static ComplexMatrix unit(std::size_t dim, std::size_t row, std::size_t col);

  std::size_t dim() const noexcept { return dim_; }
  std::span<const Complex> entries() const noexcept { return entries_; }

  Complex& operator()(std::size_t row, std::size_t col) {
    return entries_[row * dim_ + col];
  }
  const Complex& operator()(std::size_t row, std::size_t col) const {
    return entries_[row * dim_ + col];
  }

  ComplexMatrix adjoint() const;
  Complex trace() const;
  bool is_hermitian(double tol = kDefaultTolerance) const;

  ComplexMatrix& operator+=(const ComplexMatrix& rhs);
  ComplexMatrix& operator-=(const ComplexMatrix& rhs);
  ComplexMatrix& operator*=(Complex scale);

  friend bool operator==(const ComplexMatrix&, const ComplexMatrix&) = default;

 private:
  std::size_t dim_ = 0;
  std::vector<Complex> entries_;
};

ComplexMatrix operator+(ComplexMatrix lhs, const ComplexMatrix& rhs);
ComplexMatrix operator-(ComplexMatrix lhs, const ComplexMatrix& rhs);
ComplexMatrix operator*(Complex scale, ComplexMatrix m);
ComplexMatrix operator*(const ComplexMatrix& lhs, const ComplexMatrix& rhs);

/// Tr(A B) without forming the product.
Complex trace_of_product(const ComplexMatrix& a, const ComplexMatrix& b);

/// Largest entrywise modulus of A - B. Dimensions must agree.
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

/// Eigenvalues of the Hermitian part (A + A^dagger)/2, ascending.
std::vector<double> hermitian_eigenvalues(const ComplexMatrix& m);

}  // namespace qdstar
