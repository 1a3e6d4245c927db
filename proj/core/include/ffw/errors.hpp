// Copyright 2026 The ffwiener Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace ffw {

/// Precondition on an argument was violated (odd exponent, q = 0, k > n, ...).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A quadrature rule is too short to integrate the requested polynomial exactly.
class PrecisionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Tensor quadrature requested in a dimension above the cost guard.
class CostGuardError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A Monte Carlo integrand returned a non-finite value. Carries the
/// offending sample so the failure can be reproduced from (seed, index).
class SamplingError : public std::runtime_error {
 public:
  SamplingError(const std::string& what, std::uint64_t sample_index,
                std::vector<double> coordinates)
      : std::runtime_error(what),
        sample_index_(sample_index),
        coordinates_(std::move(coordinates)) {}

  std::uint64_t sample_index() const noexcept { return sample_index_; }
  const std::vector<double>& coordinates() const noexcept { return coordinates_; }

 private:
  std::uint64_t sample_index_;
  std::vector<double> coordinates_;
};

}  // namespace ffw
