#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "checks.hpp"
#include "table.hpp"

namespace qswitch::app {

struct VerifyOutcome {
  std::vector<CheckResult> checks;
  bool all_passed() const;
};

VerifyOutcome run_verify(std::uint64_t seed);

void write_verify_json(std::ostream& out, const VerifyOutcome& outcome, std::uint64_t seed);
Table verify_table(const VerifyOutcome& outcome);

}  // namespace qswitch::app
