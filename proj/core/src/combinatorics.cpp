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

#include "ffw/combinatorics.hpp"

#include <numeric>
#include <string>

#include "ffw/errors.hpp"

namespace ffw::combinatorics {

ExactInteger factorial(std::uint32_t n) {
  ExactInteger result = 1;
  for (std::uint32_t i = 2; i <= n; ++i) result *= i;
  return result;
}

ExactInteger double_factorial_odd(std::uint32_t s) {
  ExactInteger result = 1;
  for (std::uint64_t i = 2; i <= s; ++i) result *= 2 * i - 1;
  return result;
}

ExactInteger binomial(std::uint32_t n, std::uint32_t k) {
  if (k > n) {
    throw DomainError("binomial(" + std::to_string(n) + ", " + std::to_string(k) + "): k > n");
  }
  k = std::min(k, n - k);
  ExactInteger result = 1;
  // Each partial product C(n-k+i, i) is an integer, so the division is exact.
  for (std::uint32_t i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;
  }
  return result;
}

ExactInteger multinomial(std::uint32_t k, std::span<const std::uint32_t> parts) {
  const std::uint64_t total = std::accumulate(parts.begin(), parts.end(), std::uint64_t{0});
  if (total != k) {
    throw DomainError("multinomial: parts sum to " + std::to_string(total) + ", expected " +
                      std::to_string(k));
  }
  ExactInteger result = 1;
  std::uint32_t remaining = k;
  for (std::uint32_t part : parts) {
    result *= binomial(remaining, part);
    remaining -= part;
  }
  return result;
}

ExactInteger gaussian_moment(std::uint32_t s) {
  if (s % 2 != 0) return 0;
  return double_factorial_odd(s / 2);
}

ExactRational gamma_half_integer(std::uint32_t n) {
  if (n == 0) throw DomainError("gamma_half_integer: n must be positive");
  ExactInteger two_pow = 1;
  two_pow <<= n;
  return ExactRational(double_factorial_odd(n), two_pow);
}

}  // namespace ffw::combinatorics
