#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tiltfactor/budget.hpp"
#include "tiltfactor/theorems.hpp"

namespace tiltfactor {

// One entry of a named verification batch.
struct SuiteItem {
  std::string name;
  bool passed = false;
  std::string detail;  // failure or rejection text
  std::optional<VerificationReport> report;
};

std::vector<std::string> suite_names();
bool known_suite(const std::string& name);

// Runs the named batch, fanning items out over `jobs` worker threads
// (0 = hardware concurrency); results come back in input order.
std::vector<SuiteItem> run_suite_items(const std::string& name, const Budget& budget,
                                       int jobs = 0);

}  // namespace tiltfactor
