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
#include <span>

#include "ffw/exact.hpp"

/// Exact integer and rational kernels behind the Gaussian moment formulas.
namespace ffw::combinatorics {

ExactInteger factorial(std::uint32_t n);

/// (2s-1)!! = (2s-1)(2s-3)...3*1, with (-1)!! = 1 for s = 0.
ExactInteger double_factorial_odd(std::uint32_t s);

/// Throws DomainError when k > n.
ExactInteger binomial(std::uint32_t n, std::uint32_t k);

/// k! / prod(parts[j]!). Throws DomainError unless sum(parts) == k.
ExactInteger multinomial(std::uint32_t k, std::span<const std::uint32_t> parts);

/// Standard normal moment E[Z^s]: 0 for odd s, (s-1)!! for even s.
/// The 1/sqrt(2*pi) normalization is already applied.
ExactInteger gaussian_moment(std::uint32_t s);

/// Rational factor of Gamma(n + 1/2) = (2n-1)!!/2^n * sqrt(pi); the sqrt(pi)
/// is implied. Throws DomainError for n = 0.
ExactRational gamma_half_integer(std::uint32_t n);

}  // namespace ffw::combinatorics
