// Copyright 2026 The qgrover Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//     http://www.apache.org/licenses/LICENSE-2.0
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#pragma once

#include <stdexcept>

namespace qgrover {

/// Operands whose shapes cannot be combined (mismatched or non-square
/// dimensions, wrong factor size, empty factor lists).
class DimensionError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// A NaN or Inf reached an operation.
class NonFiniteError : public std::domain_error {
  public:
    using std::domain_error::domain_error;
};

/// A vector handed to the state constructor does not have unit norm.
class NormalizationError : public std::domain_error {
  public:
    using std::domain_error::domain_error;
};

/// Attempt to evolve a state with a non-unitary operator.
class EvolutionError : public std::domain_error {
  public:
    using std::domain_error::domain_error;
};

/// No candidate in the search space satisfies the search predicate.
class NoSolutionError : public std::domain_error {
  public:
    using std::domain_error::domain_error;
};

/// More than one candidate satisfies the predicate; only single-solution
/// search is modelled.
class MultiSolutionError : public std::domain_error {
  public:
    using std::domain_error::domain_error;
};

} // namespace qgrover
