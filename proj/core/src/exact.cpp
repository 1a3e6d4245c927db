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

#include "ffw/exact.hpp"

#include <cctype>
#include <charconv>
#include <sstream>

#include "ffw/errors.hpp"

namespace ffw {

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
  ExactRational re = re_ * o.re_ - im_ * o.im_;
  ExactRational im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
  const ExactRational norm = o.re_ * o.re_ + o.im_ * o.im_;
  if (norm == 0) throw DomainError("division of a Gaussian rational by zero");
  ExactRational re = (re_ * o.re_ + im_ * o.im_) / norm;
  ExactRational im = (im_ * o.re_ - re_ * o.im_) / norm;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

GaussianRational GaussianRational::pow(unsigned exponent) const {
  GaussianRational result(1);
  GaussianRational base = *this;
  while (exponent != 0) {
    if (exponent & 1U) result *= base;
    exponent >>= 1U;
    if (exponent != 0) base *= base;
  }
  return result;
}

ComplexValue GaussianRational::to_complex() const {
  return {to_double(re_), to_double(im_)};
}

double to_double(const ExactRational& value) {
  return value.convert_to<double>();
}

std::string rational_to_fraction_string(const ExactRational& value) {
  return numerator(value).str() + "/" + denominator(value).str();
}

std::string rational_to_string(const ExactRational& value) {
  if (denominator(value) == 1) return numerator(value).str();
  return rational_to_fraction_string(value);
}

namespace {

ExactInteger parse_integer(std::string_view digits, std::string_view whole) {
  if (digits.empty()) throw DomainError("malformed number: '" + std::string(whole) + "'");
  for (char c : digits) {
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      throw DomainError("malformed number: '" + std::string(whole) + "'");
    }
  }
  // cpp_int reads a leading 0 as an octal prefix.
  const auto first = digits.find_first_not_of('0');
  if (first == std::string_view::npos) return 0;
  return ExactInteger(std::string(digits.substr(first)));
}

ExactInteger pow10(unsigned n) {
  ExactInteger r = 1;
  for (unsigned i = 0; i < n; ++i) r *= 10;
  return r;
}

ExactRational parse_decimal(std::string_view text) {
  std::string_view whole = text;
  bool negative = false;
  if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  long exponent = 0;
  if (auto e = text.find_first_of("eE"); e != std::string_view::npos) {
    std::string_view exp_text = text.substr(e + 1);
    auto [ptr, ec] = std::from_chars(exp_text.data() + (exp_text.starts_with('+') ? 1 : 0),
                                     exp_text.data() + exp_text.size(), exponent);
    if (ec != std::errc{} || ptr != exp_text.data() + exp_text.size() || exp_text.empty()) {
      throw DomainError("malformed exponent in '" + std::string(whole) + "'");
    }
    if (exponent > 4096 || exponent < -4096) {
      throw DomainError("exponent out of range in '" + std::string(whole) + "'");
    }
    text = text.substr(0, e);
  }
  std::string digits;
  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string_view int_part = text.substr(0, dot);
    std::string_view frac_part = text.substr(dot + 1);
    if (int_part.empty() && frac_part.empty()) {
      throw DomainError("malformed number: '" + std::string(whole) + "'");
    }
    digits = std::string(int_part) + std::string(frac_part);
    exponent -= static_cast<long>(frac_part.size());
  } else {
    digits = std::string(text);
  }
  ExactRational value(parse_integer(digits, whole));
  if (exponent >= 0) {
    value *= ExactRational(pow10(static_cast<unsigned>(exponent)));
  } else {
    value /= ExactRational(pow10(static_cast<unsigned>(-exponent)));
  }
  return negative ? ExactRational(-value) : value;
}

}  // namespace

ExactRational parse_rational(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text.empty()) throw DomainError("empty number");
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    ExactRational num = parse_decimal(text.substr(0, slash));
    ExactRational den = parse_decimal(text.substr(slash + 1));
    if (den == 0) throw DomainError("zero denominator in '" + std::string(text) + "'");
    return num / den;
  }
  return parse_decimal(text);
}

std::string to_string(const GaussianRational& value) {
  const auto& re = value.re();
  const auto& im = value.im();
  auto imag_part = [](const ExactRational& v) {
    if (v == 1) return std::string("i");
    if (v == -1) return std::string("-i");
    if (denominator(v) == 1) return numerator(v).str() + "i";
    return "(" + rational_to_string(v) + ")i";
  };
  if (im == 0) return rational_to_string(re);
  if (re == 0) return imag_part(im);
  std::ostringstream os;
  os << "(" << rational_to_string(re) << (im < 0 ? " - " : " + ")
     << imag_part(im < 0 ? ExactRational(-im) : im) << ")";
  return os.str();
}

}  // namespace ffw
