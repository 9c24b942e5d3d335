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

#include "qdstar/operator_core.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "qdstar/errors.hpp"

namespace qdstar {

namespace {

// Hermiticity of stored operators is validated with a looser bound than the
// structural checks so that solver output (residual ~1e-14) is accepted.
constexpr double kHermitianTolerance = 1e-9;

void validate_set(const std::vector<ComplexMatrix>& set, std::size_t dim,
                  const char* what) {
  if (set.size() != dim * dim) {
    throw ValidationError(std::string(what) + ": expected " +
                          std::to_string(dim * dim) + " operators, got " +
                          std::to_string(set.size()));
  }
  for (std::size_t i = 0; i < set.size(); ++i) {
    if (set[i].dim() != dim) {
      throw ValidationError(std::string(what) + " " + std::to_string(i + 1) +
                            " has dimension " + std::to_string(set[i].dim()));
    }
    if (!set[i].is_hermitian(kHermitianTolerance)) {
      throw ValidationError(std::string(what) + " " + std::to_string(i + 1) +
                            " is not Hermitian");
    }
  }
}

double delta_deviation(const std::vector<ComplexMatrix>& left,
                       const std::vector<ComplexMatrix>& right) {
  double worst = 0.0;
  for (std::size_t i = 0; i < left.size(); ++i)
    for (std::size_t j = 0; j < right.size(); ++j) {
      const double expected = i == j ? 1.0 : 0.0;
      worst = std::max(
          worst, std::abs(trace_of_product(left[i], right[j]) - expected));
    }
  return worst;
}

}  // namespace

OperatorBasis::OperatorBasis(std::string name, std::size_t dim,
                             std::vector<ComplexMatrix> dequantizers,
                             std::optional<std::vector<ComplexMatrix>> quantizers,
                             std::vector<std::string> labels)
    : name_(std::move(name)),
      dim_(dim),
      dequantizers_(std::move(dequantizers)),
      quantizers_(std::move(quantizers)),
      labels_(std::move(labels)) {
  if (dim_ == 0) throw ValidationError("basis dimension must be positive");
  validate_set(dequantizers_, dim_, "dequantizer");
  if (quantizers_) validate_set(*quantizers_, dim_, "quantizer");
  if (labels_.size() != dim_ * dim_) {
    throw ValidationError("basis needs " + std::to_string(dim_ * dim_) +
                          " labels, got " + std::to_string(labels_.size()));
  }
  self_dual_ = quantizers_ && *quantizers_ == dequantizers_;
}

OperatorBasis OperatorBasis::self_dual(std::string name, std::size_t dim,
                                       std::vector<ComplexMatrix> dequantizers,
                                       std::vector<std::string> labels) {
  auto quantizers = dequantizers;
  return OperatorBasis(std::move(name), dim, std::move(dequantizers),
                       std::move(quantizers), std::move(labels));
}

const std::vector<ComplexMatrix>& OperatorBasis::quantizers() const {
  if (!quantizers_) {
    throw StateError("basis '" + name_ + "' has no quantizers");
  }
  return *quantizers_;
}

OperatorBasis OperatorBasis::with_quantizers(
    std::vector<ComplexMatrix> quantizers) const {
  return OperatorBasis(name_, dim_, dequantizers_, std::move(quantizers),
                       labels_);
}

Symbol symbol_of(const ComplexMatrix& op, const OperatorBasis& basis) {
  if (op.dim() != basis.dim()) {
    throw ValidationError("operator dimension " + std::to_string(op.dim()) +
                          " does not match basis dimension " +
                          std::to_string(basis.dim()));
  }
  Symbol out;
  out.labels = basis.labels();
  out.values.reserve(basis.size());
  for (const auto& u : basis.dequantizers())
    out.values.push_back(trace_of_product(op, u));
  return out;
}

ComplexMatrix reconstruct(const Symbol& symbol, const OperatorBasis& basis) {
  const auto& quantizers = basis.quantizers();
  if (symbol.size() != quantizers.size()) {
    throw ValidationError("symbol has " + std::to_string(symbol.size()) +
                          " values, basis expects " +
                          std::to_string(quantizers.size()));
  }
  ComplexMatrix out(basis.dim());
  for (std::size_t i = 0; i < quantizers.size(); ++i)
    out += symbol.values[i] * quantizers[i];
  return out;
}

DualityReport duality_check(const OperatorBasis& basis, double tol) {
  DualityReport report;
  report.max_deviation =
      delta_deviation(basis.quantizers(), basis.dequantizers());
  report.pass = report.max_deviation <= tol;
  return report;
}

double self_duality_deviation(const OperatorBasis& basis) {
  return delta_deviation(basis.dequantizers(), basis.dequantizers());
}

bool self_duality_check(const OperatorBasis& basis, double tol) {
  return self_duality_deviation(basis) <= tol;
}

}  // namespace qdstar
