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

#include "ffw/oracle.hpp"

#include <cmath>
#include <string>

#include <Eigen/Eigenvalues>

#include "ffw/errors.hpp"

namespace ffw {

namespace {

struct RecurrenceValues {
  double value;       // p_n(x)
  double derivative;  // p_n'(x)
  double christoffel; // sum_{k<n} p_k(x)^2
};

// Orthonormal Hermite polynomials p_k = He_k / sqrt(k!):
// sqrt(k+1) p_{k+1} = x p_k - sqrt(k) p_{k-1}, and p_n' = sqrt(n) p_{n-1}.
RecurrenceValues orthonormal_recurrence(std::uint32_t n, double x) {
  double prev = 0.0;
  double cur = 1.0;
  double christoffel = 0.0;
  for (std::uint32_t k = 0; k < n; ++k) {
    christoffel += cur * cur;
    const double next = (x * cur - std::sqrt(static_cast<double>(k)) * prev) /
                        std::sqrt(static_cast<double>(k + 1));
    prev = cur;
    cur = next;
  }
  return {cur, std::sqrt(static_cast<double>(n)) * prev, christoffel};
}

}  // namespace

QuadratureRule hermite_rule(std::uint32_t order) {
  if (order < 1 || order > 128) {
    throw DomainError("Gauss-Hermite order must be in [1, 128], got " + std::to_string(order));
  }
  Eigen::VectorXd diagonal = Eigen::VectorXd::Zero(order);
  Eigen::VectorXd sub_diagonal(order > 1 ? order - 1 : 0);
  for (std::uint32_t k = 1; k < order; ++k) sub_diagonal[k - 1] = std::sqrt(static_cast<double>(k));

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
  solver.computeFromTridiagonal(diagonal, sub_diagonal, Eigen::ComputeEigenvectors);
  if (solver.info() != Eigen::Success) {
    throw PrecisionError("tridiagonal eigensolver failed to converge");
  }

  QuadratureRule rule;
  rule.order = order;
  rule.nodes.resize(order);
  rule.weights.resize(order);
  for (std::uint32_t i = 0; i < order; ++i) {
    double x = solver.eigenvalues()[i];
    for (int step = 0; step < 3; ++step) {
      const auto r = orthonormal_recurrence(order, x);
      if (r.derivative == 0.0) break;
      const double dx = r.value / r.derivative;
      x -= dx;
      if (std::abs(dx) <= 1e-16 * std::max(1.0, std::abs(x))) break;
    }
    rule.nodes[i] = x;
  }
  // Symmetrize: the rule is exactly symmetric about 0.
  for (std::uint32_t i = 0; i < order / 2; ++i) {
    const double x = 0.5 * (rule.nodes[order - 1 - i] - rule.nodes[i]);
    rule.nodes[i] = -x;
    rule.nodes[order - 1 - i] = x;
  }
  if (order % 2 == 1) rule.nodes[order / 2] = 0.0;
  for (std::uint32_t i = 0; i < order; ++i) {
    rule.weights[i] = 1.0 / orthonormal_recurrence(order, rule.nodes[i]).christoffel;
    // The eigenvector weight v0^2 is only accurate in absolute terms.
    const double v0 = solver.eigenvectors()(0, i);
    if (std::abs(v0 * v0 - rule.weights[i]) > 1e-10) {
      throw PrecisionError("Gauss-Hermite weights disagree at node " + std::to_string(i));
    }
  }
  return rule;
}

double quad_shifted_integral(std::uint32_t k, double gamma, double beta, double v,
                             const QuadratureRule& rule) {
  if (rule.order < k + 1) {
    throw PrecisionError("rule of order " + std::to_string(rule.order) +
                         " is too short for degree " + std::to_string(k));
  }
  double sum = 0.0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    sum += rule.weights[i] * std::pow(gamma * rule.nodes[i] + beta * v, static_cast<double>(k));
  }
  return sum;
}

double quad_tensor(const std::function<double(std::span<const double>)>& h, std::size_t n,
                   const QuadratureRule& rule) {
  if (n == 0) throw DomainError("tensor quadrature dimension must be >= 1");
  if (n > 3) {
    throw CostGuardError("tensor quadrature limited to n <= 3 (got " + std::to_string(n) +
                         "); use Monte Carlo");
  }
  const std::size_t m = rule.nodes.size();
  std::vector<std::size_t> index(n, 0);
  std::vector<double> point(n);
  double sum = 0.0;
  while (true) {
    double weight = 1.0;
    for (std::size_t j = 0; j < n; ++j) {
      point[j] = rule.nodes[index[j]];
      weight *= rule.weights[index[j]];
    }
    sum += weight * h(point);
    std::size_t j = 0;
    while (j < n && ++index[j] == m) index[j++] = 0;
    if (j == n) break;
  }
  return sum;
}

}  // namespace ffw
