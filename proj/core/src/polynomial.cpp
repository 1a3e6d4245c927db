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

#include "ffw/polynomial.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "ffw/errors.hpp"

namespace ffw {

MultiIndex::MultiIndex(std::vector<std::uint32_t> exponents) : exponents_(std::move(exponents)) {
  if (exponents_.empty()) throw DomainError("multi-index must have length >= 1");
}

MultiIndex MultiIndex::zeros(std::size_t dimension) {
  return MultiIndex(std::vector<std::uint32_t>(dimension, 0));
}

std::uint64_t MultiIndex::total_degree() const noexcept {
  return std::accumulate(exponents_.begin(), exponents_.end(), std::uint64_t{0});
}

bool MultiIndex::all_even() const noexcept {
  return std::all_of(exponents_.begin(), exponents_.end(), [](auto k) { return k % 2 == 0; });
}

std::string to_string(const MultiIndex& index) {
  std::ostringstream os;
  os << '(';
  for (std::size_t j = 0; j < index.size(); ++j) os << (j ? "," : "") << index[j];
  os << ')';
  return os.str();
}

bool CanonicalOrder::operator()(const TermKey& a, const TermKey& b) const {
  const auto da = a.v.total_degree();
  const auto db = b.v.total_degree();
  if (da != db) return da > db;
  if (a.v != b.v) return a.v > b.v;
  return a.tau < b.tau;
}

ScaledCylinderPolynomial::ScaledCylinderPolynomial(std::size_t dimension) : dimension_(dimension) {
  if (dimension_ == 0) throw DomainError("polynomial dimension must be >= 1");
}

ScaledCylinderPolynomial ScaledCylinderPolynomial::constant(std::size_t dimension,
                                                            GaussianRational value) {
  ScaledCylinderPolynomial p(dimension);
  p.add_term({MultiIndex::zeros(dimension), 0}, value);
  return p;
}

ScaledCylinderPolynomial ScaledCylinderPolynomial::monomial(MultiIndex v, std::uint32_t tau_power,
                                                            GaussianRational coefficient) {
  ScaledCylinderPolynomial p(v.size());
  p.add_term({std::move(v), tau_power}, coefficient);
  return p;
}

ScaledCylinderPolynomial ScaledCylinderPolynomial::variable(std::size_t dimension, std::size_t j) {
  if (j >= dimension) throw DomainError("variable index out of range");
  std::vector<std::uint32_t> e(dimension, 0);
  e[j] = 1;
  return monomial(MultiIndex(std::move(e)), 0, 1);
}

ScaledCylinderPolynomial ScaledCylinderPolynomial::tau(std::size_t dimension) {
  return monomial(MultiIndex::zeros(dimension), 1, 1);
}

bool ScaledCylinderPolynomial::is_tau_free() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.first.tau == 0; });
}

std::uint32_t ScaledCylinderPolynomial::max_tau_power() const {
  std::uint32_t m = 0;
  for (const auto& [key, c] : terms_) m = std::max(m, key.tau);
  return m;
}

GaussianRational ScaledCylinderPolynomial::coefficient(const TermKey& key) const {
  auto it = terms_.find(key);
  return it == terms_.end() ? GaussianRational{} : it->second;
}

void ScaledCylinderPolynomial::add_term(const TermKey& key, const GaussianRational& coefficient) {
  if (key.v.size() != dimension_) {
    throw DomainError("term has " + std::to_string(key.v.size()) +
                      " exponents in a polynomial of dimension " + std::to_string(dimension_));
  }
  if (coefficient.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(key, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

namespace {

void require_same_dimension(const ScaledCylinderPolynomial& a, const ScaledCylinderPolynomial& b) {
  if (a.dimension() != b.dimension()) {
    throw DomainError("polynomial dimension mismatch: " + std::to_string(a.dimension()) + " vs " +
                      std::to_string(b.dimension()));
  }
}

}  // namespace

ScaledCylinderPolynomial& ScaledCylinderPolynomial::operator+=(
    const ScaledCylinderPolynomial& other) {
  require_same_dimension(*this, other);
  for (const auto& [key, c] : other.terms_) add_term(key, c);
  return *this;
}

ScaledCylinderPolynomial& ScaledCylinderPolynomial::operator-=(
    const ScaledCylinderPolynomial& other) {
  require_same_dimension(*this, other);
  for (const auto& [key, c] : other.terms_) add_term(key, -c);
  return *this;
}

ScaledCylinderPolynomial& ScaledCylinderPolynomial::operator*=(const GaussianRational& scalar) {
  if (scalar.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [key, c] : terms_) c *= scalar;
  return *this;
}

ScaledCylinderPolynomial operator*(const ScaledCylinderPolynomial& a,
                                   const ScaledCylinderPolynomial& b) {
  require_same_dimension(a, b);
  ScaledCylinderPolynomial out(a.dimension());
  std::vector<std::uint32_t> e(a.dimension());
  for (const auto& [ka, ca] : a.terms_) {
    for (const auto& [kb, cb] : b.terms_) {
      for (std::size_t j = 0; j < e.size(); ++j) e[j] = ka.v[j] + kb.v[j];
      out.add_term({MultiIndex(e), ka.tau + kb.tau}, ca * cb);
    }
  }
  return out;
}

ScaledCylinderPolynomial ScaledCylinderPolynomial::filter(
    const std::function<bool(const TermKey&)>& keep) const {
  ScaledCylinderPolynomial out(dimension_);
  for (const auto& [key, c] : terms_) {
    if (keep(key)) out.terms_.emplace(key, c);
  }
  return out;
}

ScaledCylinderPolynomial poly_add(const ScaledCylinderPolynomial& a,
                                  const ScaledCylinderPolynomial& b) {
  return a + b;
}

ScaledCylinderPolynomial poly_mul(const ScaledCylinderPolynomial& a,
                                  const ScaledCylinderPolynomial& b) {
  return a * b;
}

namespace {

ComplexValue ipow(ComplexValue base, std::uint32_t exponent) {
  ComplexValue result(1.0, 0.0);
  while (exponent != 0) {
    if (exponent & 1U) result *= base;
    exponent >>= 1U;
    if (exponent != 0) base *= base;
  }
  return result;
}

}  // namespace

ComplexValue poly_eval(const ScaledCylinderPolynomial& p, std::span<const ComplexValue> v,
                       ComplexValue tau) {
  if (v.size() != p.dimension()) {
    throw DomainError("poly_eval: expected " + std::to_string(p.dimension()) + " coordinates, got " +
                      std::to_string(v.size()));
  }
  ComplexValue sum(0.0, 0.0);
  for (const auto& [key, c] : p.terms()) {
    ComplexValue term = c.to_complex() * ipow(tau, key.tau);
    for (std::size_t j = 0; j < v.size(); ++j) term *= ipow(v[j], key.v[j]);
    sum += term;
  }
  return sum;
}

ComplexValue poly_eval(const ScaledCylinderPolynomial& p, std::span<const double> v,
                       ComplexValue tau) {
  std::vector<ComplexValue> cv(v.begin(), v.end());
  return poly_eval(p, std::span<const ComplexValue>(cv), tau);
}

ScaledCylinderPolynomial substitute_tau(const ScaledCylinderPolynomial& p,
                                        const GaussianRational& value) {
  ScaledCylinderPolynomial out(p.dimension());
  for (const auto& [key, c] : p.terms()) {
    out.add_term({key.v, 0}, c * value.pow(key.tau));
  }
  return out;
}

ScaledCylinderPolynomial substitute_tau_iq(const ScaledCylinderPolynomial& p,
                                           const ExactRational& q) {
  if (q == 0) throw DomainError("q must be nonzero");
  return substitute_tau(p, GaussianRational(0, ExactRational(1) / q));
}

namespace {

bool is_negative(const GaussianRational& c) {
  return (c.im() == 0 && c.re() < 0) || (c.re() == 0 && c.im() < 0);
}

std::string format_term(const TermKey& key, const GaussianRational& c, TauStyle style,
                        std::string_view variable) {
  std::vector<std::string> factors;
  if (key.tau > 0) {
    std::string t = style == TauStyle::kTau ? "tau" : "(i/q)";
    if (key.tau > 1) t += "^" + std::to_string(key.tau);
    factors.push_back(std::move(t));
  }
  for (std::size_t j = 0; j < key.v.size(); ++j) {
    if (key.v[j] == 0) continue;
    std::string f = std::string(variable) + std::to_string(j + 1);
    if (key.v[j] > 1) f += "^" + std::to_string(key.v[j]);
    factors.push_back(std::move(f));
  }
  std::string out;
  if (c != GaussianRational(1) || factors.empty()) {
    out = to_string(c);
    if (!factors.empty()) out += "*";
  }
  for (std::size_t i = 0; i < factors.size(); ++i) {
    out += (i ? "*" : "") + factors[i];
  }
  return out;
}

}  // namespace

std::string pretty_print(const ScaledCylinderPolynomial& p, TauStyle style,
                         std::string_view variable) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [key, c] : p.terms()) {
    const bool negative = is_negative(c);
    const GaussianRational magnitude = negative ? -c : c;
    if (first) {
      out += negative ? "-" : "";
    } else {
      out += negative ? " - " : " + ";
    }
    out += format_term(key, magnitude, style, variable);
    first = false;
  }
  return out;
}

MonomialFunctional::MonomialFunctional(MultiIndex exps, ExactRational coeff)
    : coefficient(std::move(coeff)), exponents(std::move(exps)) {
  if (coefficient == 0) throw DomainError("monomial functional coefficient must be nonzero");
}

double MonomialFunctional::evaluate(std::span<const double> u) const {
  if (u.size() != exponents.size()) {
    throw DomainError("monomial functional: coordinate count mismatch");
  }
  double value = to_double(coefficient);
  for (std::size_t j = 0; j < u.size(); ++j) {
    for (std::uint32_t k = 0; k < exponents[j]; ++k) value *= u[j];
  }
  return value;
}

ScaledCylinderPolynomial MonomialFunctional::as_polynomial() const {
  return ScaledCylinderPolynomial::monomial(exponents, 0, GaussianRational(coefficient));
}

}  // namespace ffw
