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

#include "qdstar/representation.hpp"

#include "qdstar/errors.hpp"
#include "qdstar/qubit.hpp"
#include "qdstar/qutrit.hpp"

namespace qdstar {

Representation parse_representation(std::string_view text) {
  if (text == "probability") return Representation::kProbability;
  if (text == "meanvalue") return Representation::kMeanValue;
  throw ValidationError("unknown representation '" + std::string(text) +
                        "' (expected probability or meanvalue)");
}

std::string to_string(Representation rep) {
  return rep == Representation::kProbability ? "probability" : "meanvalue";
}

SymbolSpecification symbol_spec(Representation rep, std::size_t dim) {
  return rep == Representation::kProbability
             ? qudit_probability_symbol_spec(dim)
             : qudit_meanvalue_symbol_spec(dim);
}

OperatorBasis standard_basis(Representation rep, std::size_t dim, double tol) {
  if (rep == Representation::kProbability) {
    if (dim == 2) return qubit_probability_basis();
    if (dim == 3) return qutrit_probability_basis();
    return solved_basis(rep, dim, tol);
  }
  if (dim == 2) return qubit_meanvalue_basis();
  if (dim == 3) return qutrit_meanvalue_basis();
  return qudit_meanvalue_basis(dim);
}

OperatorBasis solved_basis(Representation rep, std::size_t dim, double tol) {
  const SymbolSpecification spec = symbol_spec(rep, dim);
  auto dequantizers = solve_dequantizers(build_parametrization(dim), spec, tol);
  auto quantizers = solve_quantizers(dequantizers, tol);
  std::string name = (dim == 2 ? "qubit-" : dim == 3 ? "qutrit-" : "qudit-") +
                     to_string(rep) +
                     (dim > 3 ? "-d" + std::to_string(dim) : std::string()) +
                     "-solved";
  return OperatorBasis(std::move(name), dim, std::move(dequantizers),
                       std::move(quantizers), spec.labels);
}

}  // namespace qdstar
