#pragma once

// Numbered acceptance criteria and the module invariants, shared by the
// verify subcommand and the acceptance test binary.

#include <cstdint>
#include <string>
#include <vector>

namespace qswitch::app {

struct CheckResult {
  std::string id;
  std::string name;
  bool passed = false;
  std::string detail;
};

std::vector<CheckResult> acceptance_checks(std::uint64_t seed);
std::vector<CheckResult> invariant_checks(std::uint64_t seed);

}  // namespace qswitch::app
