#pragma once

#include <json.hpp>

#include <string>

#include "tiltfactor/theorems.hpp"

namespace tiltfactor {

using Json = nlohmann::ordered_json;

// Big integers are serialized as decimal strings: report values routinely
// exceed 64 bits (Steinberg dimensions, E-type identities).
inline Json combo_json(const WeylCombo& combo) {
  Json terms = Json::array();
  for (const auto& [w, c] : combo.terms()) terms.push_back(Json::array({w.coords(), to_decimal(c)}));
  return terms;
}

inline Json character_json(const Character& c) {
  Json entries = Json::array();
  for (const auto& [w, m] : c.entries()) entries.push_back(Json::array({w.coords(), to_decimal(m)}));
  return entries;
}

inline Json report_json(const VerificationReport& rep) {
  Json j;
  j["claim"] = to_string(rep.claim);
  Json inputs;
  inputs["type"] = std::string(1, rep.type_letter);
  inputs["rank"] = rep.rank;
  inputs["p"] = rep.p;
  inputs["r"] = rep.r;
  if (rep.mu) inputs["mu"] = rep.mu->coords();
  if (rep.lambda) inputs["lambda"] = rep.lambda->coords();
  if (rep.target) inputs["target"] = rep.target->coords();
  j["inputs"] = std::move(inputs);
  j["passed"] = rep.passed;
  j["donkin_assumed"] = rep.donkin_assumed;
  Json witnesses;
  witnesses["lhs"] = rep.lhs ? combo_json(*rep.lhs) : Json(nullptr);
  witnesses["rhs"] = rep.rhs ? combo_json(*rep.rhs) : Json(nullptr);
  if (rep.dim_lhs) witnesses["dim_lhs"] = to_decimal(*rep.dim_lhs);
  if (rep.dim_rhs) witnesses["dim_rhs"] = to_decimal(*rep.dim_rhs);
  j["witnesses"] = std::move(witnesses);
  j["skipped"] = rep.skipped;
  j["failures"] = rep.failures;
  return j;
}

inline Json certificate_json(const FactorizationCertificate& cert) {
  Json j;
  j["claim"] = "factorization";
  j["target"] = cert.target.coords();
  j["left"] = cert.left_weight.coords();
  j["right"] = cert.right_weight.coords();
  Json ld = Json::array();
  for (const auto& d : cert.left_digits) ld.push_back(d.coords());
  Json rd = Json::array();
  for (const auto& d : cert.right_digits) rd.push_back(d.coords());
  j["left_digits"] = std::move(ld);    // little-endian
  j["right_digits"] = std::move(rd);   // little-endian
  j["swap_positions"] = cert.swap_positions;
  j["character_checked"] = cert.character_checked;
  return j;
}

// Human-readable forms.
inline std::string combo_text(const WeylCombo& combo) {
  std::string s;
  for (const auto& [w, c] : combo.terms()) {
    if (!s.empty()) s += " + ";
    if (c != 1) s += to_decimal(c) + "*";
    s += "chi" + to_string(w);
  }
  return s.empty() ? "0" : s;
}

inline std::string character_text(const Character& c) {
  std::string s;
  for (const auto& [w, m] : c.entries()) {
    if (!s.empty()) s += ", ";
    s += to_string(w) + ": " + to_decimal(m);
  }
  return "{" + (s.empty() ? "" : s) + "}";
}

}  // namespace tiltfactor
