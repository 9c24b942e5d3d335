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

#include "qdstar/qutrit.hpp"

#include <cmath>
#include <string>

#include "qdstar/errors.hpp"

namespace qdstar {

namespace {

constexpr Complex kI{0.0, 1.0};

void require_probability(double v, const char* name) {
  if (!(v >= 0.0 && v <= 1.0)) {
    throw ValidationError(std::string("probability ") + name + " = " +
                          std::to_string(v) + " is outside [0, 1]");
  }
}

}  // namespace

void validate(const QutritProbabilities& p) {
  require_probability(p.p1_21, "p1^{21}");
  require_probability(p.p2_21, "p2^{21}");
  require_probability(p.p1_31, "p1^{31}");
  require_probability(p.p2_31, "p2^{31}");
  require_probability(p.p1_32, "p1^{32}");
  require_probability(p.p2_32, "p2^{32}");
  require_probability(p.p3_22, "p3^{22}");
  require_probability(p.p3_33, "p3^{33}");
}

QuditProbabilityTable to_table(const QutritProbabilities& p) {
  validate(p);
  QuditProbabilityTable t;
  t.dim = 3;
  t.p1 = {{{2, 1}, p.p1_21}, {{3, 1}, p.p1_31}, {{3, 2}, p.p1_32}};
  t.p2 = {{{2, 1}, p.p2_21}, {{3, 1}, p.p2_31}, {{3, 2}, p.p2_32}};
  t.p3 = {{2, p.p3_22}, {3, p.p3_33}};
  return t;
}

ComplexMatrix qutrit_rho_from_probabilities(const QutritProbabilities& p) {
  validate(p);
  const Complex below21 = (p.p1_21 - 0.5) + kI * (p.p2_21 - 0.5);
  const Complex above31 = (p.p1_31 - 0.5) + kI * (p.p2_31 - 0.5);
  const Complex above32 = (p.p1_32 - 0.5) + kI * (p.p2_32 - 0.5);
  return ComplexMatrix{
      {p.p3_33 + p.p3_22 - 1.0, std::conj(below21), above31},
      {below21, 1.0 - p.p3_22, above32},
      {std::conj(above31), std::conj(above32), 1.0 - p.p3_33},
  };
}

OperatorBasis qutrit_probability_basis() {
  const Complex h = 0.5;
  const Complex i = kI;
  const Complex ih = 0.5 * kI;
  std::vector<ComplexMatrix> dequantizers{
      {{h, 0, h}, {0, h, 0}, {h, 0, h}},
      {{h, 0, ih}, {0, h, 0}, {-ih, 0, h}},
      {{1, 0, 0}, {0, 1, 0}, {0, 0, 0}},
      {{h, h, 0}, {h, h, 0}, {0, 0, h}},
      {{h, -ih, 0}, {ih, h, 0}, {0, 0, h}},
      {{1, 0, 0}, {0, 0, 0}, {0, 0, 1}},
      {{h, 0, 0}, {0, h, h}, {0, h, h}},
      {{h, 0, 0}, {0, h, ih}, {0, -ih, h}},
      {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}},
  };
  const Complex a = Complex(-1.0, 1.0) / 2.0;
  const Complex b = Complex(-1.0, -1.0) / 2.0;
  std::vector<ComplexMatrix> quantizers{
      {{0, 0, 1}, {0, 0, 0}, {1, 0, 0}},
      {{0, 0, i}, {0, 0, 0}, {-i, 0, 0}},
      {{1, 0, 0}, {0, 0, 0}, {0, 0, -1}},
      {{0, 1, 0}, {1, 0, 0}, {0, 0, 0}},
      {{0, -i, 0}, {i, 0, 0}, {0, 0, 0}},
      {{1, 0, 0}, {0, -1, 0}, {0, 0, 0}},
      {{0, 0, 0}, {0, 0, 1}, {0, 1, 0}},
      {{0, 0, 0}, {0, 0, i}, {0, -i, 0}},
      {{-1, a, b}, {b, 1, b}, {a, a, 1}},
  };
  return OperatorBasis(
      "qutrit-probability", 3, std::move(dequantizers), std::move(quantizers),
      {"p1^{31}", "p2^{31}", "p3^{33}", "p1^{21}", "p2^{21}", "p3^{22}",
       "p1^{32}", "p2^{32}", "const"});
}

Symbol qutrit_probability_symbol(const QutritProbabilities& p) {
  validate(p);
  Symbol s;
  s.values = {p.p1_31, p.p2_31, p.p3_33, p.p1_21, p.p2_21,
              p.p3_22, p.p1_32, p.p2_32, 1.0};
  s.labels = qutrit_probability_basis().labels();
  return s;
}

OperatorBasis qutrit_meanvalue_basis() {
  const Complex s = 1.0 / std::sqrt(2.0);
  const Complex is = kI * s;
  std::vector<ComplexMatrix> set{
      {{0, s, 0}, {s, 0, 0}, {0, 0, 0}},
      {{0, -is, 0}, {is, 0, 0}, {0, 0, 0}},
      {{0, 0, s}, {0, 0, 0}, {s, 0, 0}},
      {{0, 0, is}, {0, 0, 0}, {-is, 0, 0}},
      {{0, 0, 0}, {0, 0, s}, {0, s, 0}},
      {{0, 0, 0}, {0, 0, is}, {0, -is, 0}},
      {{1, 0, 0}, {0, 0, 0}, {0, 0, 0}},
      {{0, 0, 0}, {0, 1, 0}, {0, 0, 0}},
      {{0, 0, 0}, {0, 0, 0}, {0, 0, 1}},
  };
  return OperatorBasis::self_dual(
      "qutrit-meanvalue", 3, std::move(set),
      {"s1^{21}", "s2^{21}", "s1^{31}", "s2^{31}", "s1^{32}", "s2^{32}",
       "rho_{11}", "rho_{22}", "rho_{33}"});
}

Symbol qutrit_meanvalue_symbol(const QutritProbabilities& p) {
  validate(p);
  const double root2 = std::sqrt(2.0);
  // z-type mean values of the artificial qubits (3,1) and (2,1).
  const double s3_first = p.p3_33 - 0.5;
  const double s3_second = p.p3_22 - 0.5;
  Symbol s;
  s.values = {root2 * (p.p1_21 - 0.5), root2 * (p.p2_21 - 0.5),
              root2 * (p.p1_31 - 0.5), root2 * (p.p2_31 - 0.5),
              root2 * (p.p1_32 - 0.5), root2 * (p.p2_32 - 0.5),
              s3_first + s3_second,    0.5 - s3_second,
              0.5 - s3_first};
  s.labels = qutrit_meanvalue_basis().labels();
  return s;
}

bool qutrit_positivity_check(const QutritProbabilities& p, double tol) {
  return spectral_positivity_check(qutrit_rho_from_probabilities(p), tol);
}

}  // namespace qdstar
