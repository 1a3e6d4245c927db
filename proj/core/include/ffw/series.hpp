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
#include <functional>
#include <span>

#include "ffw/montecarlo.hpp"
#include "ffw/polynomial.hpp"
#include "ffw/transform.hpp"

namespace ffw {

/// A smooth h on R^n with h(0) = h0 and every partial derivative of every
/// order equal to derivative_constant at the origin, so that
/// h(u) = h0 + c * sum_{k>=1} (u_1 + ... + u_n)^k / k!.
struct SmoothFunctionalSpec {
  std::size_t dimension;
  ExactRational h0;
  ExactRational derivative_constant;

  /// Throws DomainError for dimension 0.
  SmoothFunctionalSpec(std::size_t dimension, ExactRational h0, ExactRational derivative_constant);

  /// The unique analytic function with these Maclaurin coefficients:
  /// h0 + c * (exp(u_1 + ... + u_n) - 1).
  double evaluate(std::span<const double> u) const;
};

struct TruncationOrder {
  std::uint32_t r;
  /// Throws DomainError for r = 0.
  explicit TruncationOrder(std::uint32_t r);
};

/// h_r(u) = h0 + c * sum_{k=1}^{r} (u_1+...+u_n)^k / k!, expanded over
/// monomials in u (rendered with variable name "u"). Tau-free.
ScaledCylinderPolynomial truncated_maclaurin(const SmoothFunctionalSpec& spec,
                                             TruncationOrder order);

/// Exact Wiener integral of H_r:
/// h0 + c * sum_{l=1}^{floor(r/2)} sum_{2p_1+..+2p_n = 2l} prod_j (2p_j-1)!!/(2p_j)!.
ExactRational wiener_integral_truncation(const SmoothFunctionalSpec& spec, TruncationOrder order);

/// Series FFT of H_r as printed in the closed-form series: only the
/// monomials whose exponents are all even, (2p_1, ..., 2p_n) with
/// 2p_1+..+2p_n = 2l <= r, weighted by 1/prod (2p_j)! and transformed with the
/// product formula. Odd r therefore adds nothing beyond r - 1.
FFTResult series_fft_literal(const SmoothFunctionalSpec& spec, TruncationOrder order,
                           const ExactRational& q);

/// Termwise transform of every monomial of h_r (odd exponents included) via
/// general_monomial_transform, then tau -> i/q.
FFTResult series_fft_full(const SmoothFunctionalSpec& spec, TruncationOrder order,
                          const ExactRational& q);

/// h_r(u) in double precision (Horner in u_1 + ... + u_n).
double evaluate_truncation(const SmoothFunctionalSpec& spec, TruncationOrder order,
                           std::span<const double> u);

/// Monte Carlo estimate of L_r = E|h(rho Z) - h_r(rho Z)| with Z standard
/// n-variate normal, sampled directly (cfg.mode is ignored). Throws
/// SamplingError if h returns a non-finite value.
MCEstimate l_r_diagnostic(const SmoothFunctionalSpec& spec,
                          const std::function<double(std::span<const double>)>& h,
                          TruncationOrder order, double rho, const WienerMCConfig& cfg);

}  // namespace ffw
