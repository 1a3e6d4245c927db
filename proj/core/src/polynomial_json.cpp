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

#include "ffw/polynomial_json.hpp"

#include "ffw/errors.hpp"

namespace ffw {

nlohmann::json to_json(const ScaledCylinderPolynomial& p) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [key, c] : p.terms()) {
    terms.push_back({
        {"v", std::vector<std::uint32_t>(key.v.begin(), key.v.end())},
        {"tau", key.tau},
        {"re", rational_to_fraction_string(c.re())},
        {"im", rational_to_fraction_string(c.im())},
    });
  }
  return {{"n", p.dimension()}, {"terms", std::move(terms)}};
}

ScaledCylinderPolynomial polynomial_from_json(const nlohmann::json& j) {
  try {
    const auto n = j.at("n").get<std::int64_t>();
    if (n < 1) throw DomainError("polynomial JSON: n must be >= 1");
    ScaledCylinderPolynomial p(static_cast<std::size_t>(n));
    for (const auto& term : j.at("terms")) {
      auto v = term.at("v").get<std::vector<std::int64_t>>();
      if (v.size() != static_cast<std::size_t>(n)) {
        throw DomainError("polynomial JSON: term exponent length differs from n");
      }
      std::vector<std::uint32_t> exps;
      for (auto e : v) {
        if (e < 0) throw DomainError("polynomial JSON: negative exponent");
        exps.push_back(static_cast<std::uint32_t>(e));
      }
      const auto tau = term.at("tau").get<std::int64_t>();
      if (tau < 0) throw DomainError("polynomial JSON: negative tau power");
      GaussianRational c(parse_rational(term.at("re").get<std::string>()),
                         parse_rational(term.at("im").get<std::string>()));
      p.add_term({MultiIndex(std::move(exps)), static_cast<std::uint32_t>(tau)}, c);
    }
    return p;
  } catch (const nlohmann::json::exception& e) {
    throw DomainError(std::string("polynomial JSON: ") + e.what());
  }
}

}  // namespace ffw
