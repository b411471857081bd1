#include "config.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <numbers>

namespace qswitch::app {
namespace {

constexpr double kRangeSlack = 1e-12;

// A factor is a decimal, "pi", or "<decimal>pi" / "<decimal>*pi".
double parse_factor(std::string_view text, std::string_view whole) {
  auto bad = [&] { return UsageError("cannot parse number '" + std::string(whole) + "'"); };
  if (text.empty()) throw bad();
  double scale = 1.0;
  if (text.size() >= 2 && text.substr(text.size() - 2) == "pi") {
    scale = std::numbers::pi;
    text.remove_suffix(2);
    if (!text.empty() && text.back() == '*') text.remove_suffix(1);
    if (text.empty()) return scale;
    if (text == "-") return -scale;
  }
  double value = 0.0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc{} || ptr != end || !std::isfinite(value)) throw bad();
  return value * scale;
}

}  // namespace

double parse_number(std::string_view text) {
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return parse_factor(text, text);
  const double num = parse_factor(text.substr(0, slash), text);
  const double den = parse_factor(text.substr(slash + 1), text);
  if (den == 0.0) throw UsageError("division by zero in '" + std::string(text) + "'");
  return num / den;
}

std::array<double, 3> parse_alpha(std::string_view text) {
  std::array<double, 3> out{};
  std::size_t count = 0;
  while (true) {
    const auto comma = text.find(',');
    if (count == 3) throw UsageError("--alpha takes exactly three values");
    out[count++] = parse_number(text.substr(0, comma));
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  if (count != 3) throw UsageError("--alpha takes exactly three values");
  return out;
}

OutcomeChoice parse_outcome(std::string_view text) {
  if (text == "plus") return OutcomeChoice::kPlus;
  if (text == "minus") return OutcomeChoice::kMinus;
  if (text == "0") return OutcomeChoice::kZero;
  if (text == "1") return OutcomeChoice::kOne;
  if (text == "custom") return OutcomeChoice::kCustom;
  throw UsageError("--outcome must be one of plus, minus, 0, 1, custom");
}

std::vector<double> stepped_grid(double lo, double hi, double step) {
  if (!(step > 0.0)) throw UsageError("grid step must be positive");
  if (!(hi >= lo)) throw UsageError("grid upper end is below the lower end");
  const auto count = static_cast<long>(std::floor((hi - lo) / step + 1e-9));
  if (count > 10'000'000) throw UsageError("grid has too many points");
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(count) + 2);
  for (long k = 0; k <= count; ++k) out.push_back(std::min(lo + k * step, hi));
  if (hi - out.back() > kRangeSlack) out.push_back(hi);
  return out;
}

std::vector<double> RunConfig::p_grid() const { return stepped_grid(p_min, std::min(p_max, kMaxNoise), p_step); }

std::vector<double> RunConfig::q_grid() const { return stepped_grid(0.0, 1.0, q_step); }

PureStateVector RunConfig::outcome_state() const {
  switch (outcome) {
    case OutcomeChoice::kPlus:
      return hadamard_state(HadamardOutcome::kPlus);
    case OutcomeChoice::kMinus:
      return hadamard_state(HadamardOutcome::kMinus);
    case OutcomeChoice::kZero:
      return PureStateVector::basis(2, 0);
    case OutcomeChoice::kOne:
      return PureStateVector::basis(2, 1);
    case OutcomeChoice::kCustom:
      if (!lambda || !phi) throw UsageError("--outcome custom needs --lambda and --phi");
      return OutcomeFamily2(*lambda, *phi).state();
  }
  throw UsageError("unknown outcome");
}

std::string RunConfig::outcome_name() const {
  switch (outcome) {
    case OutcomeChoice::kPlus:
      return "plus";
    case OutcomeChoice::kMinus:
      return "minus";
    case OutcomeChoice::kZero:
      return "0";
    case OutcomeChoice::kOne:
      return "1";
    case OutcomeChoice::kCustom:
      return "custom";
  }
  return "?";
}

void validate(const RunConfig& c) {
  if (!(c.q >= 0.0 && c.q <= 1.0)) throw UsageError("--q must lie in [0, 1]");
  if (!(c.p_min >= 0.0 && c.p_max <= kMaxNoise + kRangeSlack && c.p_min <= c.p_max)) {
    throw UsageError("p range must satisfy 0 <= p-min <= p-max <= 1/3");
  }
  if (!(c.p_step > 0.0)) throw UsageError("--p-step must be positive");
  if (!(c.q_step > 0.0 && c.q_step <= 1.0)) throw UsageError("--q-step must lie in (0, 1]");
  if (!(c.mu_step > 0.0 && c.mu_step <= 0.5)) throw UsageError("--mu-step must lie in (0, 1/2]");
  if (c.lambda && !(*c.lambda >= 0.0)) throw UsageError("--lambda must be >= 0");
  if (c.paths != 2 && c.paths != 3) throw UsageError("--paths must be 2 or 3");
  const auto& g = c.grid;
  if (!(g.lambda_min >= 0.0 && g.lambda_max >= g.lambda_min && g.lambda_step > 0.0)) {
    throw UsageError("lambda grid must satisfy 0 <= min <= max and step > 0");
  }
  if (!(g.phi_step > 0.0 && g.phi_step <= 2.0 * std::numbers::pi)) {
    throw UsageError("--phi-step must lie in (0, 2pi]");
  }
}

}  // namespace qswitch::app
