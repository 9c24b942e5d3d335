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
#include <string>
#include <string_view>

#include "qdstar/operator_core.hpp"
#include "qdstar/qudit.hpp"

namespace qdstar {

enum class Representation { kProbability, kMeanValue };

/// "probability" or "meanvalue"; throws ValidationError otherwise.
Representation parse_representation(std::string_view text);
std::string to_string(Representation rep);

SymbolSpecification symbol_spec(Representation rep, std::size_t dim);

/// The published operator sets for d = 2, 3. For other dimensions the
/// probability basis is solved and the mean-value basis is built directly.
OperatorBasis standard_basis(Representation rep, std::size_t dim,
                             double tol = kDefaultTolerance);

/// Dequantizers solved from the symbol specification and quantizers from
/// the Gram matrix, for any d >= 2.
OperatorBasis solved_basis(Representation rep, std::size_t dim,
                           double tol = kDefaultTolerance);

}  // namespace qdstar
