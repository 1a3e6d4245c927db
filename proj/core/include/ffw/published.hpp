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

#include <string>
#include <vector>

#include "ffw/polynomial.hpp"

/// Reference closed forms for the one-dimensional rows F1-F4 and the product
/// examples F5-F7, kept verbatim (misprints included) so that regenerated
/// formulas can be diffed against them.
namespace ffw::published {

/// One printed term: coefficient * prod v_j^{v[j]} / q^{q_power}.
struct PrintedTerm {
  std::vector<std::uint32_t> v;
  std::uint32_t q_power;
  GaussianRational coefficient;
};

/// Converts printed a/q^s terms to tau-form, using a/q^s = (a / i^s) (i/q)^s.
ScaledCylinderPolynomial from_printed(std::size_t dimension, const std::vector<PrintedTerm>& terms);

struct Table1Row {
  std::uint32_t p;                ///< row index; the formula row uses exponent 2p
  std::string printed_functional;
  std::string printed_transform;
  ScaledCylinderPolynomial transform;  ///< printed transform, tau-form
};

/// Rows F1..F4.
const std::vector<Table1Row>& table1();

struct Example {
  std::string name;
  MultiIndex functional_exponents;       ///< exponents of the printed functional
  std::vector<std::uint32_t> stated_p;   ///< the "Set n=..; p_j=.." line
  std::string printed_transform;
  std::vector<ScaledCylinderPolynomial> printed_factors;  ///< tau-form factors
};

/// Examples F5, F6, F7.
const std::vector<Example>& examples();

}  // namespace ffw::published
