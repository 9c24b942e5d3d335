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

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "qdstar/complex_matrix.hpp"
#include "qdstar/operator_core.hpp"
#include "qdstar/star_product.hpp"

namespace qdstar {

using Json = nlohmann::ordered_json;

/// Deterministic text form: keys in insertion order, two-space indentation,
/// arrays of scalars on one line, floating-point values with 17 significant
/// digits and negative zero written as 0.
std::string dump_json(const Json& doc);

/// Parses JSON text; throws ValidationError on malformed input.
Json parse_json(const std::string& text);
Json read_json_file(const std::string& path);

/// [re, im]
Json complex_to_json(Complex z);
Complex complex_from_json(const Json& j);

/// {"dim": d, "label": ..., "data": d x d array of [re, im]}.
struct LabeledMatrix {
  std::string label;
  ComplexMatrix matrix;
};

Json matrix_to_json(const ComplexMatrix& m, const std::string& label);
LabeledMatrix matrix_from_json(const Json& j);

/// {"dim": d, "labels": [...], "values": [[re, im], ...]}; n = d^2.
Json symbol_to_json(const Symbol& s, std::size_t dim);
Symbol symbol_from_json(const Json& j);

/// {"basis", "dim", "n", "kernels": [{"k": 1, "label", "matrix": n x n}]}.
/// kernels[k-1].matrix[m][n] = K[k][m][n].
Json kernel_to_json(const StarKernel& kernel, const std::vector<std::string>& labels);
StarKernel kernel_from_json(const Json& j);

/// Same layout as the kernel, under "constants".
Json structure_constants_to_json(const StructureConstants& c,
                                 const std::vector<std::string>& labels);

/// The operator sets of a basis: each entry is a matrix object.
Json operator_set_to_json(const std::vector<ComplexMatrix>& set,
                          const std::vector<std::string>& labels);

}  // namespace qdstar
