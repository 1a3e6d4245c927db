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

#include "ffw/transform.hpp"

#include <cmath>

#include "ffw/combinatorics.hpp"
#include "ffw/errors.hpp"

namespace ffw {

namespace cb = combinatorics;

ShiftParameters::ShiftParameters(double g, double b) : gamma(g), beta(b) {
  if (!(std::isfinite(g) && std::isfinite(b)) || g == 0.0 || b == 0.0) {
    throw DomainError("shift parameters gamma and beta must be finite and nonzero");
  }
}

ScaledCylinderPolynomial shifted_moment_poly(std::uint32_t p) {
  ScaledCylinderPolynomial out(1);
  for (std::uint32_t s = 0; s <= p; ++s) {
    const ExactInteger c = cb::binomial(2 * p, 2 * s) * cb::double_factorial_odd(s);
    out.add_term({MultiIndex{2 * p - 2 * s}, s}, GaussianRational(ExactRational(c)));
  }
  return out;
}

double shifted_moment_numeric(std::uint32_t p, const ShiftParameters& shift, double v) {
  double sum = 0.0;
  for (std::uint32_t s = 0; s <= p; ++s) {
    const double c = (cb::binomial(2 * p, 2 * s) * cb::double_factorial_odd(s)).convert_to<double>();
    sum += c * std::pow(shift.gamma, 2.0 * s) * std::pow(shift.beta * v, 2.0 * (p - s));
  }
  return sum;
}

namespace {

void require_even(const MonomialFunctional& f) {
  if (!f.all_even()) {
    throw DomainError("functional exponents " + to_string(f.exponents) +
                      " are not all even; use general_monomial_transform for odd exponents");
  }
}

// Embeds a one-variable polynomial into coordinate j of an n-variable one.
ScaledCylinderPolynomial embed(const ScaledCylinderPolynomial& univariate, std::size_t n,
                               std::size_t j) {
  ScaledCylinderPolynomial out(n);
  std::vector<std::uint32_t> e(n, 0);
  for (const auto& [key, c] : univariate.terms()) {
    e[j] = key.v[0];
    out.add_term({MultiIndex(e), key.tau}, c);
  }
  return out;
}

}  // namespace

double wiener_shift_integral_numeric(const MonomialFunctional& f, const ShiftParameters& shift,
                                     std::span<const double> v) {
  require_even(f);
  if (v.size() != f.dimension()) throw DomainError("coordinate count mismatch");
  double product = to_double(f.coefficient);
  for (std::size_t j = 0; j < v.size(); ++j) {
    product *= shifted_moment_numeric(f.exponents[j] / 2, shift, v[j]);
  }
  return product;
}

ScaledCylinderPolynomial wiener_shift_integral(const MonomialFunctional& f) {
  require_even(f);
  const std::size_t n = f.dimension();
  auto product = ScaledCylinderPolynomial::constant(n, GaussianRational(f.coefficient));
  for (std::size_t j = 0; j < n; ++j) {
    product = product * embed(shifted_moment_poly(f.exponents[j] / 2), n, j);
  }
  return product;
}

ScaledCylinderPolynomial t_lambda_poly(const MonomialFunctional& f) {
  return wiener_shift_integral(f);
}

FFTResult analytic_fft(const MonomialFunctional& f, const ExactRational& q) {
  if (q == 0) throw DomainError("q must be nonzero");
  FFTResult result{t_lambda_poly(f), q, std::nullopt};
  result.substituted = substitute_tau_iq(result.poly, q);
  return result;
}

FFTResult analytic_fft_symbolic(const MonomialFunctional& f) {
  return FFTResult{t_lambda_poly(f), std::nullopt, std::nullopt};
}

ScaledCylinderPolynomial general_monomial_transform(const MultiIndex& k) {
  const std::size_t n = k.size();
  auto product = ScaledCylinderPolynomial::constant(n, 1);
  for (std::size_t j = 0; j < n; ++j) {
    ScaledCylinderPolynomial factor(1);
    for (std::uint32_t s = 0; s <= k[j]; s += 2) {
      const ExactInteger c = cb::binomial(k[j], s) * cb::gaussian_moment(s);
      factor.add_term({MultiIndex{k[j] - s}, s / 2}, GaussianRational(ExactRational(c)));
    }
    product = product * embed(factor, n, j);
  }
  return product;
}

FeynmanIntegral feynman_integral(const MonomialFunctional& f, const ExactRational& q) {
  const FFTResult fft = analytic_fft(f, q);
  const GaussianRational at_zero = fft.substituted->coefficient({MultiIndex::zeros(f.dimension()), 0});
  return {at_zero, at_zero.to_complex()};
}

}  // namespace ffw
