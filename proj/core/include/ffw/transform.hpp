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

#include <optional>
#include <span>

#include "ffw/polynomial.hpp"

namespace ffw {

/// Scale gamma and shift weight beta in E[(gamma*Z + beta*v)^{2p}]; both nonzero.
struct ShiftParameters {
  double gamma;
  double beta;

  /// Throws DomainError if either parameter is zero or non-finite.
  ShiftParameters(double gamma, double beta);
};

/// Transform of a functional: the tau-form polynomial and, when q is known,
/// its tau -> i/q boundary value.
struct FFTResult {
  ScaledCylinderPolynomial poly;
  std::optional<ExactRational> q;
  std::optional<ScaledCylinderPolynomial> substituted;
};

/// sum_{s=0}^{p} C(2p,2s) (2s-1)!! tau^s v^{2p-2s}: the one-variable
/// Gaussian average E[(sqrt(tau) Z + v)^{2p}] as a polynomial in (v, tau).
ScaledCylinderPolynomial shifted_moment_poly(std::uint32_t p);

/// sum_s C(2p,2s) (2s-1)!! gamma^{2s} beta^{2p-2s} v^{2p-2s} in double precision.
double shifted_moment_numeric(std::uint32_t p, const ShiftParameters& shift, double v);

/// E[F(gamma Z + beta v)] for an all-even monomial functional, as the product
/// over coordinates of shifted_moment_numeric.
double wiener_shift_integral_numeric(const MonomialFunctional& f, const ShiftParameters& shift,
                                     std::span<const double> v);

/// Symbolic product formula with beta = 1 and gamma^2 carried by tau:
/// coefficient * prod_j shifted_moment_poly(p_j). Throws DomainError when an
/// exponent is odd; use general_monomial_transform for those.
ScaledCylinderPolynomial wiener_shift_integral(const MonomialFunctional& f);

/// T_lambda(F)(y) with tau = 1/lambda. Valid on the whole right half-plane
/// because the continuation is a polynomial in tau.
ScaledCylinderPolynomial t_lambda_poly(const MonomialFunctional& f);

/// Analytic Fourier-Feynman transform at parameter q (exact for rational q).
/// Throws DomainError for q = 0 or an odd exponent.
FFTResult analytic_fft(const MonomialFunctional& f, const ExactRational& q);

/// Same transform with q kept symbolic (no substituted form).
FFTResult analytic_fft_symbolic(const MonomialFunctional& f);

/// Shifted Gaussian average of prod_j u_j^{k_j} for arbitrary exponents:
/// sum over even s_j <= k_j of prod_j C(k_j,s_j) (s_j-1)!! tau^{s_j/2} v_j^{k_j-s_j}.
ScaledCylinderPolynomial general_monomial_transform(const MultiIndex& k);

struct FeynmanIntegral {
  GaussianRational exact;
  ComplexValue value;
};

/// The transform evaluated at y = 0, i.e. prod_j (2p_j-1)!! (i/q)^{p_j} times
/// the coefficient. Throws DomainError for q = 0 or an odd exponent.
FeynmanIntegral feynman_integral(const MonomialFunctional& f, const ExactRational& q);

}  // namespace ffw
