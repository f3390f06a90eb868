#pragma once

#include <string>
#include <vector>

namespace bunblocks::verify {

// Outcome of one acceptance criterion.
struct CriterionResult {
  int id = 0;
  std::string description;
  bool pass = false;
  std::string detail; // check count, or the first few failures
  double seconds = 0.0;
};

// Runs the nine acceptance criteria in order.  Criteria with a runtime
// budget fail when they exceed it.
std::vector<CriterionResult> run_all();

bool all_pass(const std::vector<CriterionResult>& results);

} // namespace bunblocks::verify
