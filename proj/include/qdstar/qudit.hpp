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
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "qdstar/complex_matrix.hpp"
#include "qdstar/operator_core.hpp"

namespace qdstar {

/// Ordered pair of 1-based levels (j, k) with j > k: the artificial qubit
/// spanned by |j> and |k>.
struct LevelPair {
  std::size_t j = 2;
  std::size_t k = 1;
  auto operator<=>(const LevelPair&) const = default;
};

/// Level pairs in canonical order: j = 2..d, then k = 1..j-1.
std::vector<LevelPair> level_pairs(std::size_t dim);

/// Sign s of the imaginary part on the (j, k) entry, rho_jk = a + s i b.
///
/// +1 everywhere except the pairs (3,1) and (3,2) of a qutrit, whose
/// published operator sets are written for the conjugate orientation.
int pair_orientation(std::size_t dim, const LevelPair& pair);

/// Artificial-qubit probabilities parametrizing a d-level density matrix:
/// x- and y-probabilities per level pair, z-probabilities per diagonal j >= 2.
struct QuditProbabilityTable {
  std::size_t dim = 2;
  std::map<LevelPair, double> p1;
  std::map<LevelPair, double> p2;
  std::map<std::size_t, double> p3;

  /// Every pair probability set to `pair_value`, every p3 to `diagonal_value`.
  static QuditProbabilityTable uniform(std::size_t dim, double pair_value,
                                       double diagonal_value);

  /// Parameters in canonical order (see AffineParametrization).
  std::vector<double> parameters() const;
  static QuditProbabilityTable from_parameters(std::size_t dim,
                                               const std::vector<double>& p);
};

/// Throws ValidationError on wrong entry counts or values outside [0, 1].
void validate(const QuditProbabilityTable& table);

/// rho_jk = (p1 - 1/2) + s i (p2 - 1/2) for j > k, Hermitian completion,
/// rho_jj = 1 - p3^(jj) for j > 1, rho_11 = sum_j p3^(jj) - d + 2.
ComplexMatrix qudit_rho_from_probabilities(const QuditProbabilityTable& table);

/// rho(p) = constant + sum_a p_a generators[a], over d^2 - 1 real parameters
/// ordered p1^(jk), p2^(jk) per canonical pair, then p3^(22) .. p3^(dd).
struct AffineParametrization {
  std::size_t dim = 0;
  ComplexMatrix constant;
  std::vector<ComplexMatrix> generators;
  std::vector<std::string> param_labels;

  ComplexMatrix evaluate(const std::vector<double>& params) const;
};

AffineParametrization build_parametrization(std::size_t dim);

/// One symbol slot as an affine functional of the parameters.
struct AffineRow {
  std::vector<double> coefficients;
  double constant = 0.0;

  double evaluate(const std::vector<double>& params) const;
};

/// The target symbol of rho(p): d^2 affine rows with labels.
struct SymbolSpecification {
  std::size_t dim = 0;
  std::vector<AffineRow> rows;
  std::vector<std::string> labels;

  std::vector<double> evaluate(const std::vector<double>& params) const;
};

/// Probability symbol: one row per parameter plus a constant row. Uses the
/// published slot orders for d = 2 (p1, p2, p3, 1 - p3) and d = 3; the
/// canonical parameter order followed by the constant row for d >= 4.
SymbolSpecification qudit_probability_symbol_spec(std::size_t dim);

/// Mean-value symbol: sqrt2 (p - 1/2) per pair slot, then (z/sqrt2, 1/sqrt2)
/// for d = 2 or the diagonal entries rho_jj for d >= 3.
SymbolSpecification qudit_meanvalue_symbol_spec(std::size_t dim);

/// Self-dual orthonormal set: (E_jk + E_kj)/sqrt2 and s (iE_jk - iE_kj)/sqrt2
/// per canonical pair, completed by sigma_z/sqrt2 and I/sqrt2 when d = 2 or by
/// the projectors E_jj when d >= 3.
OperatorBasis qudit_meanvalue_basis(std::size_t dim);

/// Finds, per symbol row, the Hermitian U with Tr(rho(p) U) equal to the row
/// identically in p. Each row is a real d^2 x d^2 system over the Hermitian
/// degrees of freedom (diagonal, then re/im of the strict lower triangle,
/// row-major). Rows are solved concurrently.
///
/// Throws SolverError if the system is rank deficient, NumericalError if a
/// residual exceeds `tol`.
std::vector<ComplexMatrix> solve_dequantizers(const AffineParametrization& par,
                                              const SymbolSpecification& spec,
                                              double tol = kDefaultTolerance);

/// Dual set via the Gram matrix: D^(i) = sum_j (G^-1)_ij U^(j),
/// G_ij = Tr(U^(i) U^(j)).
///
/// Throws SolverError (with condition number) on a singular Gram matrix,
/// NumericalError if the duality deviation exceeds `tol`.
std::vector<ComplexMatrix> solve_quantizers(
    const std::vector<ComplexMatrix>& dequantizers,
    double tol = kDefaultTolerance);

/// Hermitian degrees of freedom <-> matrix, in solver order.
std::vector<double> hermitian_to_real(const ComplexMatrix& m);
ComplexMatrix hermitian_from_real(std::size_t dim, const std::vector<double>& v);

/// True when every eigenvalue of rho is >= -tol.
bool spectral_positivity_check(const ComplexMatrix& rho, double tol = 1e-10);

namespace serial {

/// Single-threaded reference for qdstar::solve_dequantizers.
std::vector<ComplexMatrix> solve_dequantizers(const AffineParametrization& par,
                                              const SymbolSpecification& spec,
                                              double tol = kDefaultTolerance);

}  // namespace serial

}  // namespace qdstar
