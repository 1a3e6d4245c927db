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

#include "ffw/polynomial.hpp"

namespace ffw::cli {

/// Writes a tau-form polynomial with each tau^s folded into a power of i/q,
/// e.g. "v^4 + 6i/q v^2 - 3/q^2". One-variable polynomials use the bare
/// variable name; otherwise variables are numbered v1, v2, ...
std::string render_q_form(const ScaledCylinderPolynomial& p, const std::string& variable = "v");

/// Coefficient of one term in the same notation: "6i/q", "-3/q^2", "i/q".
std::string render_q_coefficient(const GaussianRational& tau_coefficient, std::uint32_t tau_power);

}  // namespace ffw::cli
