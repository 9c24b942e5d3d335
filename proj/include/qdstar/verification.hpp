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
#include <cstdint>
#include <string>
#include <vector>

#include "qdstar/representation.hpp"

namespace qdstar {

struct SuiteResult {
  std::string name;
  double max_deviation = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

struct CheckOptions {
  std::uint64_t seed = 0;
  /// Random operator pairs for the homomorphism and round-trip suites.
  std::size_t samples = 100;
  double structural_tolerance = kDefaultTolerance;
  double homomorphism_tolerance = 1e-9;
};

/// Runs duality, self-duality and cyclic symmetry (self-dual bases only),
/// sampled homomorphism and round trip, structure relations, and agreement
/// between the standard basis and a freshly solved one.
std::vector<SuiteResult> run_checks(Representation rep, std::size_t dim,
                                    const CheckOptions& options);

}  // namespace qdstar
