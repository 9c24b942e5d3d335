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
#include <string>
#include <vector>

#include "qdstar/complex_matrix.hpp"
#include "qdstar/operator_core.hpp"

namespace qdstar {

/// Dense n x n x n complex tensor indexed [output k][left m][right n].
class Rank3Tensor {
 public:
  Rank3Tensor() = default;
  explicit Rank3Tensor(std::size_t n) : n_(n), data_(n * n * n) {}

  std::size_t extent() const noexcept { return n_; }
  Complex& operator()(std::size_t k, std::size_t m, std::size_t n) {
    return data_[(k * n_ + m) * n_ + n];
  }
  const Complex& operator()(std::size_t k, std::size_t m, std::size_t n) const {
    return data_[(k * n_ + m) * n_ + n];
  }
  const std::vector<Complex>& data() const noexcept { return data_; }

  friend bool operator==(const Rank3Tensor&, const Rank3Tensor&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<Complex> data_;
};

/// K[k][m][n] = Tr(D^(m) D^(n) U^(k)).
struct StarKernel {
  std::size_t dim = 0;
  Rank3Tensor entries;
  std::string basis_label;

  std::size_t n() const noexcept { return entries.extent(); }
};

/// C[k][m][n] = K[k][m][n] - K[k][n][m].
struct StructureConstants {
  std::size_t dim = 0;
  Rank3Tensor entries;

  std::size_t n() const noexcept { return entries.extent(); }
};

/// Products D^(m) D^(n) are formed once, then traced against every U^(k);
/// the outer loop over k runs in parallel. Throws StateError when the basis
/// has no quantizers.
StarKernel compute_kernel(const OperatorBasis& basis);

/// result[k] = sum_{m,n} fA[m] fB[n] K[k][m][n].
Symbol star(const Symbol& left, const Symbol& right, const StarKernel& kernel);

StructureConstants structure_constants(const StarKernel& kernel);

struct CyclicSymmetryReport {
  bool pass = false;
  double max_deviation = 0.0;
};

/// Checks K_mn^k = K_nk^m = K_km^n and K_nm^k = K_kn^m = K_mk^n.
CyclicSymmetryReport verify_cyclic_symmetry(const StarKernel& kernel,
                                            double tol = kDefaultTolerance);

struct StructureRelationReport {
  double antisymmetry_deviation = 0.0;
  double commutator_deviation = 0.0;
  double jacobi_deviation = 0.0;
  /// Only evaluated for self-dual bases.
  bool cyclic_checked = false;
  double cyclic_deviation = 0.0;
  bool pass = false;
};

/// (a) sum_k C_mn^k D^(k) = [D^(m), D^(n)];
/// (b) Jacobi identity sum_l C_mn^l C_lk^r + C_nk^l C_lm^r + C_km^l C_ln^r = 0;
/// (c) C_mn^k = C_nk^m = C_km^n when the basis is self-dual.
StructureRelationReport verify_structure_relations(
    const StructureConstants& constants, const OperatorBasis& basis,
    double tol = kDefaultTolerance);

/// Max |Jacobi sum| over all (m, n, k, r). Parallel over m.
double jacobi_deviation(const StructureConstants& constants);

namespace serial {

/// Reference kernel: Tr(D^(m) D^(n) U^(k)) evaluated independently for
/// every index triple, single-threaded.
StarKernel compute_kernel(const OperatorBasis& basis);

/// Direct single-threaded evaluation of every Jacobi sum.
double jacobi_deviation(const StructureConstants& constants);

}  // namespace serial

}  // namespace qdstar
