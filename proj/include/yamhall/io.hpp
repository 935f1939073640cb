#pragma once

// JSON forms of expansions and component reports (nlohmann::json).

#include <json.hpp>

#include "yamhall/degraphs.hpp"
#include "yamhall/qsym_schur.hpp"

namespace yamhall {

inline nlohmann::json poly_json(const BivariatePoly& p) {
  auto arr = nlohmann::json::array();
  for (const auto& [e, c] : p.terms()) arr.push_back({e.first, e.second, c});
  return arr;
}

inline nlohmann::json to_json(const SchurPolynomial& s) {
  nlohmann::json j{{"degree", s.degree()}, {"basis", "schur"}, {"terms", nlohmann::json::array()}};
  for (const auto& [lambda, p] : s.terms()) j["terms"].push_back({{"index", lambda.parts()}, {"poly", poly_json(p)}});
  return j;
}

inline nlohmann::json to_json(const QSymPolynomial& f) {
  nlohmann::json j{{"degree", f.degree()}, {"basis", "fundamental"}, {"terms", nlohmann::json::array()}};
  for (const auto& [sig, p] : f.terms()) j["terms"].push_back({{"index", sig.str()}, {"poly", poly_json(p)}});
  return j;
}

inline nlohmann::json to_json(const ComponentSchur& c) {
  nlohmann::json j{{"componentId", c.component},
                   {"size", c.size},
                   {"representative", format_word(c.representative)},
                   {"degType", c.type ? nlohmann::json(c.type->parts()) : nlohmann::json(nullptr)}};
  if (c.schur)
    j["schur"] = to_json(*c.schur);
  else
    j["failure"] = "not in the Schur span";
  return j;
}

}  // namespace yamhall
