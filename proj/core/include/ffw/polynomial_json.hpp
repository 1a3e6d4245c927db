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

#include <nlohmann/json.hpp>

#include "ffw/polynomial.hpp"

namespace ffw {

/// {"n": int, "terms": [{"v": [int...], "tau": int, "re": "p/q", "im": "p/q"}, ...]}
/// with terms in canonical order and rationals written as "p/q".
nlohmann::json to_json(const ScaledCylinderPolynomial& p);

/// Inverse of to_json. Accepts terms in any order and merges duplicates.
/// Throws DomainError on schema violations.
ScaledCylinderPolynomial polynomial_from_json(const nlohmann::json& j);

}  // namespace ffw
