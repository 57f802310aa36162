// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef LORENTZ_POLY_JSON_HPP_
#define LORENTZ_POLY_JSON_HPP_

#include <string>

#include "json.hpp"
#include "lorentz/poly_core.hpp"

namespace lorentz {

// Polynomial file format:
//   {"n": int, "d": int, "kappa": [int, ...] (optional),
//    "terms": [{"exponent": [int, ...], "coeff": number}, ...]}
// Multiaffine polynomials use 0/1 exponents. Schema violations raise
// DomainError naming the offending field.
HomPoly poly_from_json(const nlohmann::json& j);
nlohmann::json poly_to_json(const HomPoly& f);
nlohmann::json poly_to_json(const MultiAffinePoly& f);

HomPoly parse_poly(const std::string& text);
HomPoly read_poly_file(const std::string& path);
std::string poly_to_string(const HomPoly& f);
void write_poly_file(const std::string& path, const HomPoly& f);

}  // namespace lorentz

#endif  // LORENTZ_POLY_JSON_HPP_
