#pragma once

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace tiltfactor {

// Parsed form of one CLI invocation; round-trips through JSON.
struct JobSpec {
  std::string command;  // describe|char|tensor|minuscule|expand|verify|factorize|suite
  char type_letter = 'A';
  int rank = 1;
  int p = 0;
  int r = 0;
  std::vector<std::vector<int>> weights;
  std::optional<std::vector<int>> mu;
  std::optional<std::vector<int>> target;
  std::string claim;            // verify: lemma|proposition|corollary_a|corollary_b|supplied
  std::string kind = "weyl";    // char: weyl|orbit|simple|tilting|steinberg
  std::string suite;            // suite name
  std::string format = "text";  // text|json
  std::uint64_t budget = 0;     // 0 keeps the defaults
  int jobs = 0;                 // 0 uses hardware concurrency

  friend bool operator==(const JobSpec&, const JobSpec&) = default;
};

inline void to_json(nlohmann::ordered_json& j, const JobSpec& s) {
  j = nlohmann::ordered_json{
      {"command", s.command}, {"type", std::string(1, s.type_letter)},
      {"rank", s.rank},       {"p", s.p},
      {"r", s.r},             {"weights", s.weights},
      {"claim", s.claim},     {"kind", s.kind},
      {"suite", s.suite},     {"format", s.format},
      {"budget", s.budget},   {"jobs", s.jobs},
  };
  if (s.mu) j["mu"] = *s.mu;
  if (s.target) j["target"] = *s.target;
}

inline void from_json(const nlohmann::ordered_json& j, JobSpec& s) {
  s.command = j.at("command").get<std::string>();
  s.type_letter = j.at("type").get<std::string>().at(0);
  s.rank = j.at("rank").get<int>();
  s.p = j.at("p").get<int>();
  s.r = j.at("r").get<int>();
  s.weights = j.at("weights").get<std::vector<std::vector<int>>>();
  s.claim = j.at("claim").get<std::string>();
  s.kind = j.at("kind").get<std::string>();
  s.suite = j.at("suite").get<std::string>();
  s.format = j.at("format").get<std::string>();
  s.budget = j.at("budget").get<std::uint64_t>();
  s.jobs = j.at("jobs").get<int>();
  if (j.contains("mu")) s.mu = j.at("mu").get<std::vector<int>>();
  if (j.contains("target")) s.target = j.at("target").get<std::vector<int>>();
}

}  // namespace tiltfactor
