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

#include <array>

#include "qdstar/complex_matrix.hpp"
#include "qdstar/operator_core.hpp"

namespace qdstar {

/// Probabilities of spin projection +1/2 along x, y and z.
struct QubitProbabilities {
  double p1 = 0.5;
  double p2 = 0.5;
  double p3 = 0.5;
};

/// Mean values of the spin projections (Bloch-sphere parameters).
struct BlochVector {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;
};

/// A density matrix together with whether its parameters satisfy the
/// positivity constraint. Builders return the matrix either way.
struct FlaggedDensity {
  ComplexMatrix rho;
  bool constraint_satisfied = false;
};

/// rho = [[p3, (p1-1/2) - i(p2-1/2)], [(p1-1/2) + i(p2-1/2), 1-p3]].
/// Throws ValidationError if any probability lies outside [0, 1].
FlaggedDensity qubit_rho_from_probabilities(const QubitProbabilities& p);

/// rho = (1/2)[[1+z, x-iy], [x+iy, 1-z]]; flagged valid iff |b| <= 1.
FlaggedDensity qubit_rho_from_bloch(const BlochVector& b);

/// Bloch vector (2p1-1, 2p2-1, 2p3-1) describing the same state.
BlochVector bloch_from_probabilities(const QubitProbabilities& p);

/// Dequantizers projecting onto the three spin-up probabilities and
/// p4 = 1 - p3, with their dual quantizers.
OperatorBasis qubit_probability_basis();

/// Pauli matrices and the identity, each scaled by 1/sqrt(2). Self-dual.
OperatorBasis qubit_meanvalue_basis();

/// Total area of the three Malevich squares,
/// S = 2[3(1-p1-p2-p3) + 2(p1^2+p2^2+p3^2) + p1p2 + p2p3 + p3p1].
double malevich_square_sum(const QubitProbabilities& p);

/// Side lengths |A1A2|, |A2A3|, |A3A1| of the triangle whose squares make
/// up malevich_square_sum. A_i sits on side V_i -> V_{i+1} of an
/// equilateral triangle of side sqrt(2), a fraction p_i along it.
std::array<double, 3> malevich_triangle_sides(const QubitProbabilities& p);

/// (p1-1/2)^2 + (p2-1/2)^2 + (p3-1/2)^2 <= 1/4 + tol.
bool qubit_positivity_check(const QubitProbabilities& p, double tol = 1e-12);

/// Throws ValidationError unless every probability is in [0, 1].
void validate(const QubitProbabilities& p);

}  // namespace qdstar
