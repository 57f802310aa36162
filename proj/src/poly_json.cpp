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

#include "lorentz/poly_json.hpp"

#include <optional>

#include <fstream>
#include <sstream>

#include "lorentz/error.hpp"

namespace lorentz {
namespace {

using nlohmann::json;

int require_int(const json& j, const std::string& field) {
  if (!j.is_number_integer()) throw DomainError(field + ": expected an integer");
  return j.get<int>();
}

}  // namespace

HomPoly poly_from_json(const json& j) {
  if (!j.is_object()) throw DomainError("polynomial: expected a JSON object");
  for (const char* key : {"n", "d", "terms"}) {
    if (!j.contains(key)) throw DomainError(std::string(key) + ": missing field");
  }
  const int n = require_int(j.at("n"), "n");
  const int d = require_int(j.at("d"), "d");
  std::vector<int> kappa;
  if (j.contains("kappa")) {
    const json& k = j.at("kappa");
    if (!k.is_array()) throw DomainError("kappa: expected an array");
    for (std::size_t i = 0; i < k.size(); ++i) {
      kappa.push_back(require_int(k[i], "kappa[" + std::to_string(i) + "]"));
    }
  }
  const json& terms = j.at("terms");
  if (!terms.is_array()) throw DomainError("terms: expected an array");
  std::optional<HomPoly> shape;
  try {
    shape.emplace(n, d, kappa);
  } catch (const DomainError& e) {
    throw DomainError(std::string("polynomial: ") + e.what());
  }
  std::map<Exponent, double> coeffs;
  for (std::size_t t = 0; t < terms.size(); ++t) {
    const std::string where = "terms[" + std::to_string(t) + "]";
    const json& term = terms[t];
    if (!term.is_object() || !term.contains("exponent") || !term.contains("coeff")) {
      throw DomainError(where + ": expected {\"exponent\": [...], \"coeff\": x}");
    }
    const json& e = term.at("exponent");
    if (!e.is_array()) throw DomainError(where + ".exponent: expected an array");
    Exponent alpha;
    for (std::size_t i = 0; i < e.size(); ++i) {
      alpha.push_back(require_int(e[i], where + ".exponent[" + std::to_string(i) + "]"));
    }
    try {
      shape->check_exponent(alpha);
    } catch (const DomainError& err) {
      throw DomainError(where + ".exponent: " + err.what());
    }
    if (!term.at("coeff").is_number()) {
      throw DomainError(where + ".coeff: expected a number");
    }
    if (coeffs.contains(alpha)) throw DomainError(where + ": duplicate exponent");
    coeffs[alpha] = term.at("coeff").get<double>();
  }
  try {
    return HomPoly(n, d, std::move(kappa), std::move(coeffs));
  } catch (const DomainError& e) {
    throw DomainError(std::string("polynomial: ") + e.what());
  }
}

json poly_to_json(const HomPoly& f) {
  json j;
  j["n"] = f.n();
  j["d"] = f.d();
  if (f.kappa() != std::vector<int>(f.n(), std::max(f.d(), 1))) j["kappa"] = f.kappa();
  json terms = json::array();
  for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
    const auto& [alpha, c] = *it;
    terms.push_back({{"exponent", alpha}, {"coeff", c}});
  }
  j["terms"] = std::move(terms);
  return j;
}

json poly_to_json(const MultiAffinePoly& f) { return poly_to_json(to_hom(f)); }

HomPoly parse_poly(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw DomainError(std::string("polynomial JSON: ") + e.what());
  }
  return poly_from_json(j);
}

HomPoly read_poly_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  try {
    return parse_poly(buffer.str());
  } catch (const DomainError& e) {
    throw DomainError(path + ": " + e.what());
  }
}

std::string poly_to_string(const HomPoly& f) { return poly_to_json(f).dump(2) + "\n"; }

void write_poly_file(const std::string& path, const HomPoly& f) {
  std::ofstream out(path);
  if (!out) throw DomainError("cannot write " + path);
  out << poly_to_string(f);
}

}  // namespace lorentz
