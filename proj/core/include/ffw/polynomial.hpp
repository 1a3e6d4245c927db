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
#include <initializer_list>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ffw/exact.hpp"

namespace ffw {

/// Exponent tuple (k_1, ..., k_n) of a monomial v_1^k_1 ... v_n^k_n.
class MultiIndex {
 public:
  /// Throws DomainError when empty.
  explicit MultiIndex(std::vector<std::uint32_t> exponents);
  MultiIndex(std::initializer_list<std::uint32_t> exponents)
      : MultiIndex(std::vector<std::uint32_t>(exponents)) {}
  /// All-zero index of the given dimension (>= 1).
  static MultiIndex zeros(std::size_t dimension);

  std::size_t size() const noexcept { return exponents_.size(); }
  std::uint32_t operator[](std::size_t j) const { return exponents_[j]; }
  std::span<const std::uint32_t> exponents() const noexcept { return exponents_; }
  auto begin() const noexcept { return exponents_.begin(); }
  auto end() const noexcept { return exponents_.end(); }

  std::uint64_t total_degree() const noexcept;
  bool all_even() const noexcept;

  friend bool operator==(const MultiIndex&, const MultiIndex&) = default;
  friend auto operator<=>(const MultiIndex&, const MultiIndex&) = default;

 private:
  std::vector<std::uint32_t> exponents_;
};

std::string to_string(const MultiIndex& index);

/// Key of one term: v-exponents plus the power of the continuation symbol
/// tau (tau = 1/lambda; tau -> i/q gives the Feynman boundary value).
struct TermKey {
  MultiIndex v;
  std::uint32_t tau = 0;

  friend bool operator==(const TermKey&, const TermKey&) = default;
};

/// Canonical order: descending total v-degree, then descending lexicographic
/// v-exponents (v1 before v2), then ascending tau power.
struct CanonicalOrder {
  bool operator()(const TermKey& a, const TermKey& b) const;
};

/// How tau is rendered by pretty_print.
enum class TauStyle {
  kTau,         ///< "tau"
  kSymbolicIq,  ///< "(i/q)", for q left symbolic
};

/// Sparse polynomial in v_1..v_n and tau with exact Gaussian-rational
/// coefficients. Zero coefficients are never stored, so two polynomials are
/// equal iff their term maps are equal.
class ScaledCylinderPolynomial {
 public:
  using TermMap = std::map<TermKey, GaussianRational, CanonicalOrder>;

  /// The zero polynomial. Throws DomainError for dimension 0.
  explicit ScaledCylinderPolynomial(std::size_t dimension);

  static ScaledCylinderPolynomial constant(std::size_t dimension, GaussianRational value);
  static ScaledCylinderPolynomial monomial(MultiIndex v, std::uint32_t tau_power,
                                           GaussianRational coefficient);
  /// v_j (0-based j).
  static ScaledCylinderPolynomial variable(std::size_t dimension, std::size_t j);
  static ScaledCylinderPolynomial tau(std::size_t dimension);

  std::size_t dimension() const noexcept { return dimension_; }
  const TermMap& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_tau_free() const;
  std::uint32_t max_tau_power() const;

  /// Zero when the term is absent.
  GaussianRational coefficient(const TermKey& key) const;

  /// Accumulates into the term at key; drops it if the sum is zero.
  void add_term(const TermKey& key, const GaussianRational& coefficient);

  ScaledCylinderPolynomial& operator+=(const ScaledCylinderPolynomial& other);
  ScaledCylinderPolynomial& operator-=(const ScaledCylinderPolynomial& other);
  ScaledCylinderPolynomial& operator*=(const GaussianRational& scalar);

  friend ScaledCylinderPolynomial operator+(ScaledCylinderPolynomial a,
                                            const ScaledCylinderPolynomial& b) {
    return a += b;
  }
  friend ScaledCylinderPolynomial operator-(ScaledCylinderPolynomial a,
                                            const ScaledCylinderPolynomial& b) {
    return a -= b;
  }
  friend ScaledCylinderPolynomial operator*(const ScaledCylinderPolynomial& a,
                                            const ScaledCylinderPolynomial& b);
  friend ScaledCylinderPolynomial operator*(ScaledCylinderPolynomial a,
                                            const GaussianRational& s) {
    return a *= s;
  }

  friend bool operator==(const ScaledCylinderPolynomial& a, const ScaledCylinderPolynomial& b) {
    return a.dimension_ == b.dimension_ && a.terms_ == b.terms_;
  }

  /// Terms satisfying the predicate, in a polynomial of the same dimension.
  ScaledCylinderPolynomial filter(const std::function<bool(const TermKey&)>& keep) const;

 private:
  std::size_t dimension_;
  TermMap terms_;
};

/// Termwise sum. Throws DomainError on dimension mismatch.
ScaledCylinderPolynomial poly_add(const ScaledCylinderPolynomial& a,
                                  const ScaledCylinderPolynomial& b);
/// Distributive product. Throws DomainError on dimension mismatch.
ScaledCylinderPolynomial poly_mul(const ScaledCylinderPolynomial& a,
                                  const ScaledCylinderPolynomial& b);

/// Evaluates at v and tau in double precision, summing terms in canonical
/// order. Throws DomainError if v.size() != p.dimension().
ComplexValue poly_eval(const ScaledCylinderPolynomial& p, std::span<const ComplexValue> v,
                       ComplexValue tau);
/// Real-point convenience overload.
ComplexValue poly_eval(const ScaledCylinderPolynomial& p, std::span<const double> v,
                       ComplexValue tau);

/// Replaces tau by an exact value; the result is tau-free.
ScaledCylinderPolynomial substitute_tau(const ScaledCylinderPolynomial& p,
                                        const GaussianRational& value);

/// tau -> i/q, the lambda -> -iq boundary value since (-iq)^{-1} = i/q.
/// Throws DomainError for q = 0.
ScaledCylinderPolynomial substitute_tau_iq(const ScaledCylinderPolynomial& p,
                                           const ExactRational& q);

/// Canonical text form, e.g. "v1^2 + tau" or "v1^4 + 6i*v1^2 - 3".
/// The zero polynomial prints as "0".
std::string pretty_print(const ScaledCylinderPolynomial& p, TauStyle style = TauStyle::kTau,
                         std::string_view variable = "v");

/// coefficient * prod_j u_j^k_j, a cylinder functional of (<alpha_1,x>, ..., <alpha_n,x>).
struct MonomialFunctional {
  ExactRational coefficient;
  MultiIndex exponents;

  /// Throws DomainError for a zero coefficient.
  MonomialFunctional(MultiIndex exponents, ExactRational coefficient = 1);

  std::size_t dimension() const noexcept { return exponents.size(); }
  bool all_even() const noexcept { return exponents.all_even(); }
  double evaluate(std::span<const double> u) const;
  /// The functional as a tau-free polynomial in v.
  ScaledCylinderPolynomial as_polynomial() const;
};

}  // namespace ffw
