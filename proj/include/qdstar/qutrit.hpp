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

#include "qdstar/complex_matrix.hpp"
#include "qdstar/operator_core.hpp"
#include "qdstar/qudit.hpp"

namespace qdstar {

/// Artificial-qubit probabilities of a qutrit: x/y probabilities for the
/// level pairs (2,1), (3,1), (3,2) and z probabilities for levels 2 and 3.
struct QutritProbabilities {
  double p1_21 = 0.5, p2_21 = 0.5;
  double p1_31 = 0.5, p2_31 = 0.5;
  double p1_32 = 0.5, p2_32 = 0.5;
  double p3_22 = 2.0 / 3.0, p3_33 = 2.0 / 3.0;
};

void validate(const QutritProbabilities& p);

QuditProbabilityTable to_table(const QutritProbabilities& p);

/// Diagonal (p3_33 + p3_22 - 1, 1 - p3_22, 1 - p3_33). Off-diagonals carry
/// (p1 - 1/2) and (p2 - 1/2); the (2,1) pair puts +i(p2 - 1/2) below the
/// diagonal, the (3,1) and (3,2) pairs above it, matching the published
/// dequantizer and quantizer sets.
ComplexMatrix qutrit_rho_from_probabilities(const QutritProbabilities& p);

/// Nine dequantizers and their quantizers, slots ordered
/// (p1^31, p2^31, p3^33, p1^21, p2^21, p3^22, p1^32, p2^32, const).
OperatorBasis qutrit_probability_basis();

/// (p1^31, p2^31, p3^33, p1^21, p2^21, p3^22, p1^32, p2^32, 1).
Symbol qutrit_probability_symbol(const QutritProbabilities& p);

/// Self-dual: x/y pair operators / sqrt2 for (2,1), (3,1), (3,2), then the
/// projectors E_11, E_22, E_33.
OperatorBasis qutrit_meanvalue_basis();

/// Tr(rho U_S^(i)) in basis order: sqrt2 (p - 1/2) per pair slot, then
/// (p3_22 - 1/2) + (p3_33 - 1/2), 1/2 - (p3_22 - 1/2), 1/2 - (p3_33 - 1/2).
Symbol qutrit_meanvalue_symbol(const QutritProbabilities& p);

/// All eigenvalues of rho(p) >= -tol.
bool qutrit_positivity_check(const QutritProbabilities& p, double tol = 1e-10);

}  // namespace qdstar
