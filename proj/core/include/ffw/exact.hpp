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

#include <complex>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace ffw {

using ExactInteger = boost::multiprecision::cpp_int;
/// Always kept in lowest terms with a positive denominator.
using ExactRational = boost::multiprecision::cpp_rational;
using ComplexValue = std::complex<double>;

/// Exact complex number re + i*im with rational parts.
class GaussianRational {
 public:
  GaussianRational() = default;
  GaussianRational(ExactRational re) : re_(std::move(re)) {}  // NOLINT(implicit)
  GaussianRational(ExactRational re, ExactRational im)
      : re_(std::move(re)), im_(std::move(im)) {}
  GaussianRational(int re) : re_(re) {}  // NOLINT(implicit)

  static GaussianRational i() { return {0, 1}; }

  const ExactRational& re() const noexcept { return re_; }
  const ExactRational& im() const noexcept { return im_; }

  bool is_zero() const { return re_ == 0 && im_ == 0; }
  bool is_real() const { return im_ == 0; }

  GaussianRational& operator+=(const GaussianRational& o);
  GaussianRational& operator-=(const GaussianRational& o);
  GaussianRational& operator*=(const GaussianRational& o);
  /// Throws DomainError on division by zero.
  GaussianRational& operator/=(const GaussianRational& o);

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
  GaussianRational operator-() const { return {-re_, -im_}; }

  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

  GaussianRational pow(unsigned exponent) const;
  ComplexValue to_complex() const;

 private:
  ExactRational re_{0};
  ExactRational im_{0};
};

/// "p/q" with q > 0 in lowest terms; integers are still written "p/1".
std::string rational_to_fraction_string(const ExactRational& value);

/// Compact human form: "3", "-1/2".
std::string rational_to_string(const ExactRational& value);

/// Accepts "p", "p/q", and plain decimals such as "-0.25" or "1e-3"
/// (converted exactly). Throws DomainError on malformed input or q = 0.
ExactRational parse_rational(std::string_view text);

double to_double(const ExactRational& value);

/// Human form of a Gaussian rational: "3", "-i", "6i", "(1/2)i", "(1 + 2i)".
std::string to_string(const GaussianRational& value);

}  // namespace ffw
