#pragma once

// Self-check suites behind the `verify` command: each suite re-runs a set of
// cross-module identities at runtime and reports one pass/fail line per check.

#include <string>
#include <vector>

namespace tenspec {

struct VerifyResult {
  std::string suite;
  std::string name;
  bool pass = false;
  std::string detail;
};

/// suite: one of "grassmann", "closed", "roots", "density", "saddle", "mc",
/// or "all".  quick caps sizes for an interactive run.
std::vector<VerifyResult> run_verify(const std::string& suite, bool quick);

bool all_passed(const std::vector<VerifyResult>& results);

}  // namespace tenspec
