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

#include "qdstar/verification.hpp"

#include <algorithm>
#include <cmath>

#include "qdstar/operator_core.hpp"
#include "qdstar/sampling.hpp"
#include "qdstar/star_product.hpp"

namespace qdstar {

namespace {

SuiteResult make(std::string name, double deviation, double tol) {
  return {std::move(name), deviation, tol, deviation <= tol};
}

double max_symbol_diff(const Symbol& a, const Symbol& b) {
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i)
    worst = std::max(worst, std::abs(a.values[i] - b.values[i]));
  return worst;
}

double max_set_diff(const std::vector<ComplexMatrix>& a,
                    const std::vector<ComplexMatrix>& b) {
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i)
    worst = std::max(worst, max_abs_diff(a[i], b[i]));
  return worst;
}

}  // namespace

std::vector<SuiteResult> run_checks(Representation rep, std::size_t dim,
                                    const CheckOptions& options) {
  const double tol = options.structural_tolerance;
  const OperatorBasis basis = standard_basis(rep, dim, tol);
  std::vector<SuiteResult> results;

  results.push_back(make("duality", duality_check(basis, tol).max_deviation, tol));
  if (basis.is_self_dual()) {
    results.push_back(make("self_duality", self_duality_deviation(basis), tol));
  }

  const StarKernel kernel = compute_kernel(basis);
  if (basis.is_self_dual()) {
    results.push_back(
        make("cyclic_symmetry", verify_cyclic_symmetry(kernel, tol).max_deviation, tol));
  }

  Rng rng(options.seed);
  double hom = 0.0;
  double round_trip = 0.0;
  for (std::size_t s = 0; s < options.samples; ++s) {
    const ComplexMatrix a = random_complex_matrix(dim, rng);
    const ComplexMatrix b = random_complex_matrix(dim, rng);
    const Symbol direct = symbol_of(a * b, basis);
    const Symbol via_kernel = star(symbol_of(a, basis), symbol_of(b, basis), kernel);
    hom = std::max(hom, max_symbol_diff(direct, via_kernel));

    const ComplexMatrix h = random_hermitian(dim, rng);
    round_trip = std::max(round_trip, max_abs_diff(reconstruct(symbol_of(h, basis), basis), h));
  }
  results.push_back(make("homomorphism", hom, options.homomorphism_tolerance));
  results.push_back(make("round_trip", round_trip, tol));

  const StructureConstants constants = structure_constants(kernel);
  const StructureRelationReport rel = verify_structure_relations(constants, basis, tol);
  results.push_back({"antisymmetry", rel.antisymmetry_deviation, 0.0,
                     rel.antisymmetry_deviation == 0.0});
  results.push_back(make("commutator_reconstruction", rel.commutator_deviation, tol));
  results.push_back(make("jacobi_identity", rel.jacobi_deviation, tol));
  if (rel.cyclic_checked) {
    results.push_back(make("structure_cyclic", rel.cyclic_deviation, tol));
  }

  const OperatorBasis solved = solved_basis(rep, dim, tol);
  results.push_back(make("solver_agreement",
                         std::max(max_set_diff(basis.dequantizers(), solved.dequantizers()),
                                  max_set_diff(basis.quantizers(), solved.quantizers())),
                         tol));
  return results;
}

}  // namespace qdstar
