#include "report.hpp"

#include <algorithm>
#include <ostream>

#include <json.hpp>

namespace qswitch::app {

bool VerifyOutcome::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

VerifyOutcome run_verify(std::uint64_t seed) {
  VerifyOutcome outcome{acceptance_checks(seed)};
  for (auto& check : outcome.checks) check.id = "acceptance." + check.id;
  for (auto& check : invariant_checks(seed)) outcome.checks.push_back(std::move(check));
  return outcome;
}

void write_verify_json(std::ostream& out, const VerifyOutcome& outcome, std::uint64_t seed) {
  nlohmann::ordered_json doc;
  doc["seed"] = seed;
  auto checks = nlohmann::ordered_json::array();
  std::size_t passed = 0;
  for (const auto& c : outcome.checks) {
    checks.push_back({{"id", c.id}, {"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    passed += c.passed ? 1 : 0;
  }
  doc["checks"] = std::move(checks);
  doc["passed"] = passed;
  doc["failed"] = outcome.checks.size() - passed;
  doc["all_passed"] = outcome.all_passed();
  out << doc.dump(2) << '\n';
}

Table verify_table(const VerifyOutcome& outcome) {
  Table table{"verify", {"id", "name", "passed", "detail"}, {}};
  for (const auto& c : outcome.checks) table.add_row({c.id, c.name, c.passed, c.detail});
  return table;
}

}  // namespace qswitch::app
