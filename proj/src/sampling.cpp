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

#include "qdstar/sampling.hpp"

namespace qdstar {

ComplexMatrix random_complex_matrix(std::size_t dim, Rng& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  ComplexMatrix m(dim);
  for (std::size_t r = 0; r < dim; ++r)
    for (std::size_t c = 0; c < dim; ++c) {
      const double re = u(rng);
      m(r, c) = Complex(re, u(rng));
    }
  return m;
}

ComplexMatrix random_hermitian(std::size_t dim, Rng& rng) {
  const ComplexMatrix g = random_complex_matrix(dim, rng);
  return Complex(0.5) * (g + g.adjoint());
}

QubitProbabilities random_physical_qubit(Rng& rng) {
  std::uniform_real_distribution<double> u(-0.5, 0.5);
  for (;;) {
    const double a = u(rng), b = u(rng), c = u(rng);
    if (a * a + b * b + c * c <= 0.25) return {0.5 + a, 0.5 + b, 0.5 + c};
  }
}

QuditProbabilityTable random_table(std::size_t dim, Rng& rng) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<double> params(dim * dim - 1);
  for (auto& p : params) p = u(rng);
  return QuditProbabilityTable::from_parameters(dim, params);
}

}  // namespace qdstar
