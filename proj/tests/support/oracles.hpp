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

// Test-only reference computations. Nothing here calls the combinatorics or
// transform modules, so they can serve as independent checks of both.

#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "ffw/exact.hpp"
#include "ffw/polynomial.hpp"

namespace ffw::testing {

/// Rows 0..n of Pascal's triangle built by addition only.
inline std::vector<std::vector<ExactInteger>> pascal_triangle(std::uint32_t n) {
  std::vector<std::vector<ExactInteger>> rows(n + 1);
  for (std::uint32_t i = 0; i <= n; ++i) {
    rows[i].assign(i + 1, 1);
    for (std::uint32_t k = 1; k < i; ++k) rows[i][k] = rows[i - 1][k - 1] + rows[i - 1][k];
  }
  return rows;
}

/// Number of length-k words over n letters whose letter counts equal parts.
inline std::uint64_t count_words(std::uint32_t k, const std::vector<std::uint32_t>& parts) {
  const std::size_t n = parts.size();
  std::vector<std::uint32_t> word(k, 0);
  std::uint64_t matches = 0;
  while (true) {
    std::vector<std::uint32_t> counts(n, 0);
    for (auto letter : word) ++counts[letter];
    if (counts == parts) ++matches;
    std::size_t pos = 0;
    while (pos < k && ++word[pos] == n) word[pos++] = 0;
    if (pos == k) break;
  }
  return matches;
}

/// E[Z^s] from the integration-by-parts recurrence E[Z^s] = (s-1) E[Z^{s-2}].
inline ExactInteger moment_by_recurrence(std::uint32_t s) {
  if (s % 2 == 1) return 0;
  ExactInteger m = 1;
  for (std::uint32_t k = 2; k <= s; k += 2) m *= k - 1;
  return m;
}

/// E[prod_j (sqrt(tau) Z_j + v_j)^{k_j}] by repeated multiplication of the
/// linear factors in the variables (v_1..v_n, Z_1..Z_n), with the power of
/// sqrt(tau) kept in the tau slot, followed by replacing Z_j^m by its moment.
inline ScaledCylinderPolynomial brute_force_shift_average(const std::vector<std::uint32_t>& k) {
  const std::size_t n = k.size();
  auto expanded = ScaledCylinderPolynomial::constant(2 * n, 1);
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<std::uint32_t> z(2 * n, 0);
    z[n + j] = 1;
    const auto factor = ScaledCylinderPolynomial::variable(2 * n, j) +
                        ScaledCylinderPolynomial::monomial(MultiIndex(z), 1, 1);
    for (std::uint32_t m = 0; m < k[j]; ++m) expanded = expanded * factor;
  }
  ScaledCylinderPolynomial out(n);
  for (const auto& [key, c] : expanded.terms()) {
    ExactInteger weight = 1;
    for (std::size_t j = 0; j < n; ++j) weight *= moment_by_recurrence(key.v[n + j]);
    if (weight == 0) continue;
    std::vector<std::uint32_t> v(key.v.begin(), key.v.begin() + static_cast<long>(n));
    out.add_term({MultiIndex(v), key.tau / 2}, c * GaussianRational(ExactRational(weight)));
  }
  return out;
}

/// Random polynomial with n variables, v-degree <= max_degree per variable,
/// tau power <= max_tau and small Gaussian-integer coefficients.
inline ScaledCylinderPolynomial random_polynomial(std::mt19937_64& rng, std::size_t n,
                                                  std::uint32_t max_degree, std::uint32_t max_tau,
                                                  int max_terms = 5) {
  std::uniform_int_distribution<std::uint32_t> deg(0, max_degree);
  std::uniform_int_distribution<std::uint32_t> tau(0, max_tau);
  std::uniform_int_distribution<int> coef(-9, 9);
  std::uniform_int_distribution<int> terms(0, max_terms);
  ScaledCylinderPolynomial p(n);
  const int count = terms(rng);
  for (int t = 0; t < count; ++t) {
    std::vector<std::uint32_t> e(n);
    for (auto& x : e) x = deg(rng);
    p.add_term({MultiIndex(e), tau(rng)},
               GaussianRational(ExactRational(coef(rng)), ExactRational(coef(rng), 1 + std::abs(coef(rng)))));
  }
  return p;
}

inline std::vector<std::uint32_t> random_even_exponents(std::mt19937_64& rng, std::size_t n,
                                                        std::uint32_t max_p) {
  std::uniform_int_distribution<std::uint32_t> p(0, max_p);
  std::vector<std::uint32_t> e(n);
  for (auto& x : e) x = 2 * p(rng);
  return e;
}

}  // namespace ffw::testing
