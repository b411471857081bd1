#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "qswitch/advantage.hpp"

namespace qswitch::app {

// Bad flag values; maps to exit code 1.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class OutputFormat { kCsv, kJson };
enum class OutcomeChoice { kPlus, kMinus, kZero, kOne, kCustom };

struct RunConfig {
  std::string command;
  double q = 0.5;
  double p_min = 0.0;
  double p_max = kMaxNoise;
  double p_step = 0.001;
  double q_step = 0.05;
  double mu_step = 0.01;
  std::optional<double> lambda;
  std::optional<double> phi;
  std::optional<std::array<double, 3>> alpha;
  int paths = 2;
  OutcomeChoice outcome = OutcomeChoice::kPlus;
  GridSpec grid;
  std::uint64_t seed = 42;
  OutputFormat format = OutputFormat::kCsv;
  std::string out;
  std::string surface_out;
  std::string scan_out;

  // p_min, p_min + step, ... with p_max appended when the steps miss it.
  std::vector<double> p_grid() const;
  // Same over q in [0, 1].
  std::vector<double> q_grid() const;
  // Outcome state on the two-dimensional control.
  PureStateVector outcome_state() const;
  std::string outcome_name() const;
};

// Plain decimals plus "a/b", "pi", "pi/90", "2pi", "2*pi/3".
double parse_number(std::string_view text);
std::array<double, 3> parse_alpha(std::string_view text);
OutcomeChoice parse_outcome(std::string_view text);

// Range checks shared by every command.
void validate(const RunConfig& config);

std::vector<double> stepped_grid(double lo, double hi, double step);

}  // namespace qswitch::app
