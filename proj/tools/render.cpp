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

#include "render.hpp"

#include <sstream>

namespace ffw::cli {

namespace {

std::string monomial_text(const MultiIndex& v, const std::string& variable) {
  std::string out;
  for (std::size_t j = 0; j < v.size(); ++j) {
    if (v[j] == 0) continue;
    if (!out.empty()) out += ' ';
    out += variable;
    if (v.size() > 1) out += std::to_string(j + 1);
    if (v[j] > 1) out += "^" + std::to_string(v[j]);
  }
  return out;
}

std::string q_power_text(std::uint32_t s) {
  if (s == 0) return "";
  return s == 1 ? "/q" : "/q^" + std::to_string(s);
}

// Signed coefficient of 1/q^s, as a pair (negative?, magnitude text).
std::pair<bool, std::string> folded(const GaussianRational& tau_coefficient, std::uint32_t s) {
  const GaussianRational g = tau_coefficient * GaussianRational::i().pow(s);
  if (g.is_real()) {
    const ExactRational& re = g.re();
    return {re < 0, rational_to_string(re < 0 ? ExactRational(-re) : re)};
  }
  if (g.re() == 0) {
    const ExactRational& im = g.im();
    const ExactRational mag = im < 0 ? ExactRational(-im) : im;
    std::string text = mag == 1 ? "i" : (denominator(mag) == 1 ? rational_to_string(mag) + "i"
                                                                : "(" + rational_to_string(mag) + ")i");
    return {im < 0, text};
  }
  return {false, to_string(g)};
}

}  // namespace

std::string render_q_coefficient(const GaussianRational& tau_coefficient, std::uint32_t tau_power) {
  const auto [negative, text] = folded(tau_coefficient, tau_power);
  return (negative ? "-" : "") + text + q_power_text(tau_power);
}

std::string render_q_form(const ScaledCylinderPolynomial& p, const std::string& variable) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [key, c] : p.terms()) {
    auto [negative, text] = folded(c, key.tau);
    const std::string mono = monomial_text(key.v, variable);
    std::string body;
    if (text == "1" && key.tau == 0 && !mono.empty()) {
      body = mono;
    } else {
      body = text + q_power_text(key.tau);
      if (!mono.empty()) body += " " + mono;
    }
    if (first) {
      os << (negative ? "-" : "") << body;
    } else {
      os << (negative ? " - " : " + ") << body;
    }
    first = false;
  }
  return os.str();
}

}  // namespace ffw::cli
