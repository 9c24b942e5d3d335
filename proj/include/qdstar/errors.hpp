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
#include <stdexcept>
#include <string>

namespace qdstar {

/// Malformed input: wrong dimension, out-of-range probability, bad file.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Operation requested on an object that lacks the required data,
/// e.g. reconstruction from a basis without quantizers.
class StateError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Linear system is singular or rank deficient.
class SolverError : public std::runtime_error {
 public:
  SolverError(const std::string& what, std::size_t rank, double condition)
      : std::runtime_error(what), rank_(rank), condition_(condition) {}

  std::size_t rank() const noexcept { return rank_; }
  double condition_number() const noexcept { return condition_; }

 private:
  std::size_t rank_;
  double condition_;
};

/// A solve completed but its residual exceeds the requested tolerance.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace qdstar
