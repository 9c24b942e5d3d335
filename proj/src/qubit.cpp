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

#include "qdstar/qubit.hpp"

#include <cmath>
#include <string>

#include "qdstar/errors.hpp"

namespace qdstar {

namespace {

constexpr Complex kI{0.0, 1.0};

void require_probability(double value, const char* name) {
  if (!(value >= 0.0 && value <= 1.0)) {
    throw ValidationError(std::string("probability ") + name + " = " +
                          std::to_string(value) + " is outside [0, 1]");
  }
}

double ball_radius_squared(const QubitProbabilities& p) {
  const double a = p.p1 - 0.5;
  const double b = p.p2 - 0.5;
  const double c = p.p3 - 0.5;
  return a * a + b * b + c * c;
}

}  // namespace

void validate(const QubitProbabilities& p) {
  require_probability(p.p1, "p1");
  require_probability(p.p2, "p2");
  require_probability(p.p3, "p3");
}

FlaggedDensity qubit_rho_from_probabilities(const QubitProbabilities& p) {
  validate(p);
  const Complex off = (p.p1 - 0.5) + kI * (p.p2 - 0.5);
  ComplexMatrix rho{{p.p3, std::conj(off)}, {off, 1.0 - p.p3}};
  return {std::move(rho), qubit_positivity_check(p)};
}

FlaggedDensity qubit_rho_from_bloch(const BlochVector& b) {
  ComplexMatrix rho{{0.5 * (1.0 + b.z), 0.5 * (b.x - kI * b.y)},
                    {0.5 * (b.x + kI * b.y), 0.5 * (1.0 - b.z)}};
  const double norm2 = b.x * b.x + b.y * b.y + b.z * b.z;
  return {std::move(rho), norm2 <= 1.0 + 1e-12};
}

BlochVector bloch_from_probabilities(const QubitProbabilities& p) {
  return {2.0 * p.p1 - 1.0, 2.0 * p.p2 - 1.0, 2.0 * p.p3 - 1.0};
}

OperatorBasis qubit_probability_basis() {
  const Complex h = 0.5;
  const Complex up = Complex(-1.0, 1.0) / 2.0;
  const Complex down = Complex(-1.0, -1.0) / 2.0;
  std::vector<ComplexMatrix> dequantizers{
      {{h, h}, {h, h}},
      {{h, -kI * h}, {kI * h, h}},
      {{1.0, 0.0}, {0.0, 0.0}},
      {{0.0, 0.0}, {0.0, 1.0}},
  };
  std::vector<ComplexMatrix> quantizers{
      {{0.0, 1.0}, {1.0, 0.0}},
      {{0.0, -kI}, {kI, 0.0}},
      {{1.0, up}, {down, 0.0}},
      {{0.0, up}, {down, 1.0}},
  };
  return OperatorBasis("qubit-probability", 2, std::move(dequantizers),
                       std::move(quantizers), {"p1", "p2", "p3", "p4=1-p3"});
}

OperatorBasis qubit_meanvalue_basis() {
  const double s = 1.0 / std::sqrt(2.0);
  std::vector<ComplexMatrix> set{
      {{0.0, s}, {s, 0.0}},
      {{0.0, -kI * s}, {kI * s, 0.0}},
      {{s, 0.0}, {0.0, -s}},
      {{s, 0.0}, {0.0, s}},
  };
  return OperatorBasis::self_dual("qubit-meanvalue", 2, std::move(set),
                                  {"x/sqrt2", "y/sqrt2", "z/sqrt2", "1/sqrt2"});
}

double malevich_square_sum(const QubitProbabilities& p) {
  validate(p);
  const double p1 = p.p1, p2 = p.p2, p3 = p.p3;
  return 2.0 * (3.0 * (1.0 - p1 - p2 - p3) + 2.0 * (p1 * p1 + p2 * p2 + p3 * p3) +
                p1 * p2 + p2 * p3 + p3 * p1);
}

std::array<double, 3> malevich_triangle_sides(const QubitProbabilities& p) {
  validate(p);
  const std::array<double, 3> t{p.p1, p.p2, p.p3};
  std::array<double, 3> sides{};
  for (std::size_t i = 0; i < 3; ++i) {
    // Law of cosines at vertex V_{i+1} with a 60 degree angle.
    const double a = 1.0 - t[i];
    const double b = t[(i + 1) % 3];
    sides[i] = std::sqrt(2.0 * (a * a + b * b - a * b));
  }
  return sides;
}

bool qubit_positivity_check(const QubitProbabilities& p, double tol) {
  return ball_radius_squared(p) <= 0.25 + tol;
}

}  // namespace qdstar
