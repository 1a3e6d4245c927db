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

#include "ffw/series.hpp"

#include <cmath>
#include <utility>

#include "ffw/combinatorics.hpp"
#include "ffw/errors.hpp"

namespace ffw {

namespace cb = combinatorics;

SmoothFunctionalSpec::SmoothFunctionalSpec(std::size_t n, ExactRational h0_value,
                                           ExactRational constant)
    : dimension(n), h0(std::move(h0_value)), derivative_constant(std::move(constant)) {
  if (dimension == 0) throw DomainError("smooth functional dimension must be >= 1");
}

double SmoothFunctionalSpec::evaluate(std::span<const double> u) const {
  double s = 0.0;
  for (double x : u) s += x;
  return to_double(h0) + to_double(derivative_constant) * std::expm1(s);
}

TruncationOrder::TruncationOrder(std::uint32_t order) : r(order) {
  if (r == 0) throw DomainError("truncation order r must be >= 1");
}

namespace {

// Calls visit(parts) for every composition of `total` into n nonnegative parts.
template <typename Visit>
void for_each_composition(std::uint32_t total, std::size_t n, Visit&& visit) {
  std::vector<std::uint32_t> parts(n, 0);
  auto recurse = [&](auto&& self, std::size_t j, std::uint32_t remaining) -> void {
    if (j + 1 == n) {
      parts[j] = remaining;
      visit(std::as_const(parts));
      return;
    }
    for (std::uint32_t k = remaining + 1; k-- > 0;) {
      parts[j] = k;
      self(self, j + 1, remaining - k);
    }
  };
  recurse(recurse, 0, total);
}

ExactInteger factorial_product(std::span<const std::uint32_t> parts) {
  ExactInteger product = 1;
  for (auto k : parts) product *= cb::factorial(k);
  return product;
}

FFTResult finish(ScaledCylinderPolynomial poly, const ExactRational& q) {
  if (q == 0) throw DomainError("q must be nonzero");
  auto substituted = substitute_tau_iq(poly, q);
  return FFTResult{std::move(poly), q, std::move(substituted)};
}

}  // namespace

ScaledCylinderPolynomial truncated_maclaurin(const SmoothFunctionalSpec& spec,
                                             TruncationOrder order) {
  const std::size_t n = spec.dimension;
  auto h = ScaledCylinderPolynomial::constant(n, GaussianRational(spec.h0));
  if (spec.derivative_constant == 0) return h;
  for (std::uint32_t k = 1; k <= order.r; ++k) {
    for_each_composition(k, n, [&](const std::vector<std::uint32_t>& parts) {
      // multinomial(k, parts) / k! = 1 / prod(parts!)
      const ExactRational weight = spec.derivative_constant / ExactRational(factorial_product(parts));
      h.add_term({MultiIndex(parts), 0}, GaussianRational(weight));
    });
  }
  return h;
}

ExactRational wiener_integral_truncation(const SmoothFunctionalSpec& spec, TruncationOrder order) {
  ExactRational sum = 0;
  for (std::uint32_t l = 1; 2 * l <= order.r; ++l) {
    for_each_composition(l, spec.dimension, [&](const std::vector<std::uint32_t>& p) {
      ExactRational term = 1;
      for (auto pj : p) {
        term *= ExactRational(cb::double_factorial_odd(pj), cb::factorial(2 * pj));
      }
      sum += term;
    });
  }
  return spec.h0 + spec.derivative_constant * sum;
}

FFTResult series_fft_literal(const SmoothFunctionalSpec& spec, TruncationOrder order,
                           const ExactRational& q) {
  const std::size_t n = spec.dimension;
  auto poly = ScaledCylinderPolynomial::constant(n, GaussianRational(spec.h0));
  if (spec.derivative_constant != 0) {
    for (std::uint32_t l = 1; 2 * l <= order.r; ++l) {
      for_each_composition(l, n, [&](const std::vector<std::uint32_t>& p) {
        std::vector<std::uint32_t> exponents(p.size());
        for (std::size_t j = 0; j < p.size(); ++j) exponents[j] = 2 * p[j];
        const ExactRational weight =
            spec.derivative_constant / ExactRational(factorial_product(exponents));
        poly += t_lambda_poly(MonomialFunctional(MultiIndex(std::move(exponents)), weight));
      });
    }
  }
  return finish(std::move(poly), q);
}

FFTResult series_fft_full(const SmoothFunctionalSpec& spec, TruncationOrder order,
                          const ExactRational& q) {
  const auto h = truncated_maclaurin(spec, order);
  ScaledCylinderPolynomial poly(spec.dimension);
  for (const auto& [key, c] : h.terms()) {
    poly += general_monomial_transform(key.v) * c;
  }
  return finish(std::move(poly), q);
}

double evaluate_truncation(const SmoothFunctionalSpec& spec, TruncationOrder order,
                           std::span<const double> u) {
  double s = 0.0;
  for (double x : u) s += x;
  // sum_{k=1}^{r} s^k / k! by Horner's rule.
  double tail = 0.0;
  for (std::uint32_t k = order.r; k >= 1; --k) tail = s / k * (1.0 + tail);
  return to_double(spec.h0) + to_double(spec.derivative_constant) * tail;
}

MCEstimate l_r_diagnostic(const SmoothFunctionalSpec& spec,
                          const std::function<double(std::span<const double>)>& h,
                          TruncationOrder order, double rho, const WienerMCConfig& cfg) {
  if (!(rho > 0.0) || !std::isfinite(rho)) throw DomainError("rho must be positive");
  WienerMCConfig direct = cfg;
  direct.mode = SamplingMode::kDirectGaussian;
  return estimate_wiener_integral(
      [&](std::span<const double> z) {
        std::vector<double> scaled(z.begin(), z.end());
        for (double& x : scaled) x *= rho;
        return std::abs(h(scaled) - evaluate_truncation(spec, order, scaled));
      },
      spec.dimension, direct);
}

}  // namespace ffw
