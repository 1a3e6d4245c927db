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
#include <vector>

namespace ffw {

/// Gauss-Hermite rule for the standard normal density: sum_i weights[i] *
/// f(nodes[i]) approximates (1/sqrt(2 pi)) int f(u) exp(-u^2/2) du, exactly
/// for polynomials of degree <= 2*order - 1. Weights sum to 1 (multiply by
/// sqrt(2 pi) for the unnormalized weight exp(-u^2/2)).
struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;
  std::uint32_t order = 0;
};

/// Golub-Welsch: nodes are the eigenvalues of the Jacobi matrix of the
/// probabilists' Hermite recurrence (off-diagonal sqrt(k)); weights come from
/// the normalized eigenvectors. Nodes are then refined by Newton steps on the
/// orthonormal recurrence and weights recomputed from the Christoffel
/// function so that tiny tail weights keep full relative accuracy.
/// Throws DomainError unless 1 <= order <= 128.
QuadratureRule hermite_rule(std::uint32_t order);

/// (1/sqrt(2 pi)) int (gamma u + beta v)^k exp(-u^2/2) du by quadrature.
/// Throws PrecisionError if rule.order < k + 1.
double quad_shifted_integral(std::uint32_t k, double gamma, double beta, double v,
                             const QuadratureRule& rule);

/// Tensor-product rule for (1/sqrt(2 pi))^n int h(u) exp(-|u|^2/2) du.
/// Throws CostGuardError for n > 3 and DomainError for n = 0.
double quad_tensor(const std::function<double(std::span<const double>)>& h, std::size_t n,
                   const QuadratureRule& rule);

}  // namespace ffw
