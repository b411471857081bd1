#include "qswitch/advantage.hpp"

#include <algorithm>
#include <cstddef>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

namespace qswitch {
namespace {

// Region boundaries closer than this to 1/3 count as touching it.
constexpr double kBoundarySlack = 1e-12;

ComplexMatrix input_projector() { return PureStateVector::basis(2, 0).projector(); }

// K values closer than this count as a tie; the earlier grid point wins.
constexpr double kTieTolerance = 1e-12;

// Power-basis coefficients this small relative to the largest are roundoff.
constexpr double kCoefficientChop = 1e-13;

double horner(const std::vector<double>& coefficients, double p) {
  double sum = 0.0;
  for (auto it = coefficients.rbegin(); it != coefficients.rend(); ++it) sum = sum * p + *it;
  return sum;
}

void check_mu(double mu) {
  if (!(mu >= 0.0 && mu <= 0.5)) {
    throw DomainError("mu=" + std::to_string(mu) + " outside [0, 1/2]");
  }
}

}  // namespace

SwitchParams::SwitchParams(double p, double q) : p_(p), q_(q) {
  isotropic_weights(p);
  if (!(q >= 0.0 && q <= 1.0)) {
    throw DomainError("control weight q=" + std::to_string(q) + " outside [0, 1]");
  }
  mu_ = std::sqrt(q * (1.0 - q));
}

double switched_fidelity(const SwitchParams& params) {
  const double p = params.p();
  const double mu = params.mu();
  const double numerator = 1.0 + 2.0 * mu - p * (4.0 + 8.0 * mu) + 8.0 * p * p * (1.0 + mu);
  const double denominator = 1.0 + 2.0 * mu * (1.0 - 12.0 * p * p);
  return numerator / denominator;
}

double switched_success_probability(const SwitchParams& params) {
  const double p = params.p();
  return 0.5 * (1.0 + 2.0 * params.mu() * (1.0 - 12.0 * p * p));
}

bool AdvantageRegions::region2_exists() const { return p_hi < kMaxNoise - kBoundarySlack; }

bool AdvantageRegions::contains(double p) const {
  return (p >= 0.0 && p < p_lo) || (region2_exists() && p > p_hi && p <= kMaxNoise);
}

AdvantageRegions advantage_regions(double mu) {
  check_mu(mu);
  const double a = 1.0 + 2.0 * mu;
  const double root = std::sqrt(3.0) * std::sqrt(a);
  const double denominator = 12.0 * (1.0 + 3.0 * mu);
  return {(3.0 * a - root) / denominator, (3.0 * a + root) / denominator};
}

double mu_threshold() {
  // p_hi(mu) = 1/3 reduces to 3s^2 - sqrt3 s - 2 = 0 with s = sqrt(1 + 2mu).
  const double s = (std::sqrt(3.0) + std::sqrt(27.0)) / 6.0;
  return (s * s - 1.0) / 2.0;
}

PostSelectedFidelity::PostSelectedFidelity(const IsotropicSwitchExpansion& expansion, const PureStateVector& outcome)
    : conditional_(expansion.condition_on(outcome)),
      overlap_(conditional_.expectation(input_projector()).power_coefficients()),
      probability_(conditional_.expectation(ComplexMatrix::identity(2)).power_coefficients()) {
  double scale = 0.0;
  for (double c : probability_) scale = std::max(scale, std::abs(c));
  const double chop = kCoefficientChop * scale;
  for (auto* poly : {&overlap_, &probability_}) {
    for (double& c : *poly) {
      if (std::abs(c) <= chop) c = 0.0;
    }
  }
  const auto first = std::find_if(probability_.begin(), probability_.end(), [](double c) { return c != 0.0; });
  const auto m = first - probability_.begin();
  vanishes_at_zero_ = m > 0;
  probability_.erase(probability_.begin(), probability_.begin() + m);
  overlap_.erase(overlap_.begin(), overlap_.begin() + std::min<std::ptrdiff_t>(m, std::ssize(overlap_)));
}

PostSelectedFidelity::PostSelectedFidelity(const ControlState& control, const PureStateVector& outcome)
    : PostSelectedFidelity(IsotropicSwitchExpansion(control.paths(), input_projector(), control), outcome) {}

std::optional<ConditionalState> PostSelectedFidelity::conditional(double p) const {
  try {
    return conditional_.at(p);
  } catch (const DegenerateOutcomeError&) {
    return std::nullopt;
  }
}

std::optional<double> PostSelectedFidelity::operator()(double p) const {
  if (p > 0.0 || !vanishes_at_zero_) {
    const double probability = horner(probability_, p);
    if (probability >= kDegenerateProbability) {
      return horner(overlap_, p) / probability;
    }
  }
  const auto state = conditional(p);
  if (!state) {
    return std::nullopt;
  }
  // Input is |0>, so the fidelity is the (0,0) entry.
  return state->state(0, 0).real();
}

MeritValue figure_of_merit(const IsotropicSwitchExpansion& expansion, const PureStateVector& outcome,
                           const QuadratureSpec& quad) {
  const PostSelectedFidelity fidelity(expansion, outcome);
  auto f = [&](double p) { return fidelity(p).value_or(-std::numeric_limits<double>::infinity()); };
  return {integrate_excess(f, kClassicalFidelity, 0.0, kMaxNoise, quad)};
}

MeritValue figure_of_merit(const PureStateVector& outcome, const ControlState& control, int paths,
                           const QuadratureSpec& quad) {
  if (control.paths() != paths || outcome.dim() != control.dim()) {
    throw DimensionError("figure_of_merit: outcome and control must both have dimension paths!");
  }
  return figure_of_merit(IsotropicSwitchExpansion(paths, input_projector(), control), outcome, quad);
}

double no_switch_merit(int n) {
  const double t = no_switch_threshold(n);
  return t * (0.5 - kClassicalFidelity) + (1.0 - std::pow(1.0 - 4.0 * t, n + 1)) / (8.0 * (n + 1));
}

PureStateVector outcome_state(OutcomeLabel label) {
  switch (label) {
    case OutcomeLabel::kPlus:
      return hadamard_state(HadamardOutcome::kPlus);
    case OutcomeLabel::kMinus:
      return hadamard_state(HadamardOutcome::kMinus);
    case OutcomeLabel::kZero:
      return PureStateVector::basis(2, 0);
    case OutcomeLabel::kOne:
      return PureStateVector::basis(2, 1);
  }
  throw DomainError("unknown outcome label");
}

const char* to_string(OutcomeLabel label) {
  switch (label) {
    case OutcomeLabel::kPlus:
      return "plus";
    case OutcomeLabel::kMinus:
      return "minus";
    case OutcomeLabel::kZero:
      return "0";
    case OutcomeLabel::kOne:
      return "1";
  }
  return "?";
}

double k_total(const ControlState& control, const QuadratureSpec& quad) {
  const IsotropicSwitchExpansion expansion(control.paths(), input_projector(), control);
  const auto overlap = expansion.expectation(tensor_product(input_projector(), control.density()));
  return integrate_simpson([&](double p) { return overlap(p); }, 0.0, kMaxNoise, quad);
}

TradeoffPoint tradeoff_point(const ControlState& control, OutcomeLabel label, const QuadratureSpec& quad) {
  if (control.dim() != 2) {
    throw DimensionError("tradeoff_point needs a two-path control");
  }
  return {k_total(control, quad), figure_of_merit(outcome_state(label), control, 2, quad).k, label};
}

double l1_coherence(const PureStateVector& state) {
  double sum = 0.0;
  for (std::size_t i = 0; i < state.dim(); ++i) {
    for (std::size_t j = 0; j < state.dim(); ++j) {
      if (i != j) sum += std::abs(state[i]) * std::abs(state[j]);
    }
  }
  return sum;
}

OutcomeFamily2::OutcomeFamily2(double lambda, double phi)
    : lambda_(lambda), phi_(phi), state_{1.0, lambda * std::polar(1.0, phi)} {
  if (!(lambda >= 0.0)) {
    throw DomainError("lambda must be >= 0");
  }
}

namespace {

PureStateVector parity_weighted(const std::vector<Complex>& odd_coefficients) {
  const auto perms = enumerate_permutations(3);
  std::vector<Complex> amps;
  std::size_t odd = 0;
  for (const auto& perm : perms) {
    amps.push_back(perm.even ? Complex(1.0) : odd_coefficients[odd++]);
  }
  return PureStateVector(std::move(amps));
}

}  // namespace

OutcomeFamily3::OutcomeFamily3(double lambda, double phi)
    : lambda_(lambda), phi_(phi), state_(parity_weighted(std::vector<Complex>(3, -lambda * std::polar(1.0, phi)))) {
  if (!(lambda >= 0.0)) {
    throw DomainError("lambda must be >= 0");
  }
}

AlphaOutcome::AlphaOutcome(std::array<double, 3> alpha)
    : alpha_(alpha), state_(parity_weighted({alpha[0], alpha[1], alpha[2]})) {}

std::vector<double> GridSpec::lambdas() const {
  if (!(lambda_step > 0.0) || !(lambda_max >= lambda_min) || lambda_min < 0.0) {
    throw DomainError("invalid lambda grid");
  }
  const auto count = static_cast<std::size_t>(std::floor((lambda_max - lambda_min) / lambda_step + 1e-9)) + 1;
  std::vector<double> out;
  for (std::size_t i = 0; i < count; ++i) {
    out.push_back(lambda_min + static_cast<double>(i) * lambda_step);
  }
  return out;
}

std::vector<double> GridSpec::phis() const {
  if (!(phi_step > 0.0)) {
    throw DomainError("invalid phi grid");
  }
  const auto count = static_cast<std::size_t>(std::ceil(2.0 * std::numbers::pi / phi_step - 1e-9));
  std::vector<double> out;
  for (std::size_t j = 0; j < count; ++j) {
    out.push_back(static_cast<double>(j) * phi_step);
  }
  return out;
}

std::vector<OutcomeScanPoint> scan_outcomes(const ControlState& control, OutcomeFamilyKind family,
                                            const GridSpec& grid, const QuadratureSpec& quad) {
  const int paths = family == OutcomeFamilyKind::kTwoPath ? 2 : 3;
  if (control.paths() != paths) {
    throw DimensionError("control dimension does not match the outcome family");
  }
  const IsotropicSwitchExpansion expansion(paths, input_projector(), control);
  std::vector<OutcomeScanPoint> out;
  for (double lambda : grid.lambdas()) {
    for (double phi : grid.phis()) {
      const PureStateVector outcome = family == OutcomeFamilyKind::kTwoPath ? OutcomeFamily2(lambda, phi).state()
                                                                            : OutcomeFamily3(lambda, phi).state();
      out.push_back({lambda, phi, figure_of_merit(expansion, outcome, quad).k});
    }
  }
  return out;
}

OutcomeScanPoint optimize_outcome(const ControlState& control, OutcomeFamilyKind family, const GridSpec& grid,
                                  const QuadratureSpec& quad) {
  const auto scan = scan_outcomes(control, family, grid, quad);
  OutcomeScanPoint best = scan.front();
  for (const auto& point : scan) {
    if (point.k > best.k + kTieTolerance) best = point;
  }
  return best;
}

std::vector<ProfilePoint> alpha_fidelity_profile(const AlphaOutcome& alpha, std::span<const double> p_grid) {
  const PostSelectedFidelity fidelity(ControlState::uniform(3), alpha.state());
  std::vector<ProfilePoint> out;
  out.reserve(p_grid.size());
  for (double p : p_grid) {
    const auto state = fidelity.conditional(p);
    if (!state) {
      out.push_back({p, std::nullopt, ProfileFlag::kDegenerate});
      continue;
    }
    out.push_back({p, state->state(0, 0).real(), state->from_marginal ? ProfileFlag::kFromMarginal : ProfileFlag::kOk});
  }
  return out;
}

}  // namespace qswitch
