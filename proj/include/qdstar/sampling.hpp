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

#include <cstdint>
#include <random>

#include "qdstar/complex_matrix.hpp"
#include "qdstar/qubit.hpp"
#include "qdstar/qudit.hpp"

namespace qdstar {

/// Seed used by every randomized check of the command-line tool.
inline constexpr std::uint64_t kCheckSeed = 20190611;

using Rng = std::mt19937_64;

/// Entries with real and imaginary parts uniform in [-1, 1].
ComplexMatrix random_complex_matrix(std::size_t dim, Rng& rng);

/// (G + G^dagger)/2 for G drawn as above.
ComplexMatrix random_hermitian(std::size_t dim, Rng& rng);

/// Uniform in the ball (p1-1/2)^2 + (p2-1/2)^2 + (p3-1/2)^2 <= 1/4.
QubitProbabilities random_physical_qubit(Rng& rng);

/// Every probability uniform in [0, 1]; not necessarily a positive state.
QuditProbabilityTable random_table(std::size_t dim, Rng& rng);

}  // namespace qdstar
