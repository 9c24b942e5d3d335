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

#include <optional>
#include <string>
#include <vector>

#include "qdstar/complex_matrix.hpp"

namespace qdstar {

/// The c-number image of an operator: one complex value per basis slot.
struct Symbol {
  std::vector<Complex> values;
  std::vector<std::string> labels;

  std::size_t size() const noexcept { return values.size(); }
  friend bool operator==(const Symbol&, const Symbol&) = default;
};

/// An ordered, labeled set of d^2 dequantizers with optional dual quantizers.
///
/// Construction validates shape and Hermiticity. Duality between the two
/// sets is a checked property (see duality_check), not a constructor
/// precondition, so that mismatched pairs can be built and diagnosed.
class OperatorBasis {
 public:
  OperatorBasis(std::string name, std::size_t dim,
                std::vector<ComplexMatrix> dequantizers,
                std::optional<std::vector<ComplexMatrix>> quantizers,
                std::vector<std::string> labels);

  /// A self-dual basis: the quantizers are the dequantizers.
  static OperatorBasis self_dual(std::string name, std::size_t dim,
                                 std::vector<ComplexMatrix> dequantizers,
                                 std::vector<std::string> labels);

  const std::string& name() const noexcept { return name_; }
  std::size_t dim() const noexcept { return dim_; }
  std::size_t size() const noexcept { return dequantizers_.size(); }
  const std::vector<ComplexMatrix>& dequantizers() const noexcept {
    return dequantizers_;
  }
  bool has_quantizers() const noexcept { return quantizers_.has_value(); }
  /// Throws StateError when the basis carries no quantizers.
  const std::vector<ComplexMatrix>& quantizers() const;
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  bool is_self_dual() const noexcept { return self_dual_; }

  /// Copy with the quantizer set replaced.
  OperatorBasis with_quantizers(std::vector<ComplexMatrix> quantizers) const;

 private:
  std::string name_;
  std::size_t dim_;
  std::vector<ComplexMatrix> dequantizers_;
  std::optional<std::vector<ComplexMatrix>> quantizers_;
  std::vector<std::string> labels_;
  bool self_dual_ = false;
};

struct DualityReport {
  double max_deviation = 0.0;
  bool pass = false;
};

/// values[i] = Tr(A U^(i)).
Symbol symbol_of(const ComplexMatrix& op, const OperatorBasis& basis);

/// Sum_i f^(i) D^(i).
ComplexMatrix reconstruct(const Symbol& symbol, const OperatorBasis& basis);

/// max_ij |Tr(D^(i) U^(j)) - delta_ij|.
DualityReport duality_check(const OperatorBasis& basis,
                            double tol = kDefaultTolerance);

/// True iff Tr(U^(i) U^(j)) = delta_ij for all i, j.
bool self_duality_check(const OperatorBasis& basis,
                        double tol = kDefaultTolerance);

/// Largest |Tr(U^(i) U^(j)) - delta_ij|.
double self_duality_deviation(const OperatorBasis& basis);

}  // namespace qdstar
