#pragma once

// Quantities that decide whether the switched teleportation channel beats
// the classical 2/3 fidelity: closed-form fidelities and advantage regions
// for two paths, the noise-averaged figure of merit K, the joint-state
// fidelity K_total, l1 coherence, and grid search over post-selection
// outcomes.

#include <array>
#include <optional>
#include <span>
#include <vector>

#include "qswitch/causal_switch.hpp"
#include "qswitch/quadrature.hpp"

namespace qswitch {

inline constexpr double kClassicalFidelity = 2.0 / 3.0;
inline constexpr double kMaxNoise = 1.0 / 3.0;

// Isotropic noise p in [0, 1/3] and two-path control weight q in [0, 1].
class SwitchParams {
 public:
  SwitchParams(double p, double q);

  double p() const { return p_; }
  double q() const { return q_; }
  // sqrt(q(1-q)), in [0, 1/2].
  double mu() const { return mu_; }

 private:
  double p_;
  double q_;
  double mu_;
};

// Fidelity of the two-path switch post-selected on |+>:
//   (1 + 2mu - p(4 + 8mu) + 8p^2(1 + mu)) / (1 + 2mu(1 - 12p^2)).
double switched_fidelity(const SwitchParams& params);

// Probability of the |+> outcome, (1 + 2mu(1 - 12p^2)) / 2.
double switched_success_probability(const SwitchParams& params);

// Where switched_fidelity exceeds 2/3: [0, p_lo) and, when p_hi < 1/3,
// (p_hi, 1/3]. p_lo <= p_hi are the roots of
//   (1 + 2mu)/3 - 4(1 + 2mu)p + 8(1 + 3mu)p^2.
struct AdvantageRegions {
  double p_lo = 0.0;
  double p_hi = 0.0;

  bool region2_exists() const;
  bool contains(double p) const;
};

AdvantageRegions advantage_regions(double mu);

// Smallest mu for which the high-noise region exists (= 1/6).
double mu_threshold();

struct MeritValue {
  double k = 0.0;
};

// K = integral over p in [0, 1/3] of max(F(p) - 2/3, 0), with F the
// fidelity of the switch (pure input |0>) post-selected on `outcome`.
// Zero-probability outcomes on correlated states contribute no excess.
MeritValue figure_of_merit(const PureStateVector& outcome, const ControlState& control, int paths,
                           const QuadratureSpec& quad = {});
MeritValue figure_of_merit(const IsotropicSwitchExpansion& expansion, const PureStateVector& outcome,
                           const QuadratureSpec& quad = {});

// K for n channels in sequence, no switch. Closed form of the integral of
// max(1/2 + (1-4p)^n/2 - 2/3, 0).
double no_switch_merit(int n);

// Post-selected fidelity as a function of p. Empty where the outcome has
// zero probability on a correlated joint state.
//
// For p > 0 the value is <0|S(p)|0> / Tr S(p) with the common power of p
// cancelled first, so outcomes whose probability vanishes like p^k near
// p = 0 still give the right limit instead of roundoff.
class PostSelectedFidelity {
 public:
  PostSelectedFidelity(const IsotropicSwitchExpansion& expansion, const PureStateVector& outcome);
  PostSelectedFidelity(const ControlState& control, const PureStateVector& outcome);

  std::optional<ConditionalState> conditional(double p) const;
  std::optional<double> operator()(double p) const;

 private:
  ConditionalExpansion conditional_;
  std::vector<double> overlap_;      // <0|S(p)|0> / p^m, power basis
  std::vector<double> probability_;  // Tr S(p) / p^m
  bool vanishes_at_zero_ = false;
};

enum class OutcomeLabel { kPlus, kMinus, kZero, kOne };

PureStateVector outcome_state(OutcomeLabel label);
const char* to_string(OutcomeLabel label);

// Integral over p in [0, 1/3] of the fidelity between the pure input
// |0>(x)|c> and the switch output before the control is measured.
double k_total(const ControlState& control, const QuadratureSpec& quad = {});

struct TradeoffPoint {
  double k_total = 0.0;
  double k = 0.0;
  OutcomeLabel label = OutcomeLabel::kPlus;
};

TradeoffPoint tradeoff_point(const ControlState& control, OutcomeLabel label, const QuadratureSpec& quad = {});

// Sum of |rho_ij| over i != j for rho = |psi><psi|.
double l1_coherence(const PureStateVector& state);

// |0> + lambda e^{i phi} |1>, normalized.
class OutcomeFamily2 {
 public:
  OutcomeFamily2(double lambda, double phi);
  double lambda() const { return lambda_; }
  double phi() const { return phi_; }
  const PureStateVector& state() const { return state_; }

 private:
  double lambda_;
  double phi_;
  PureStateVector state_;
};

// sum_even |j> - lambda e^{i phi} sum_odd |j> over the 3! orderings,
// normalized. Parity is that of the ordering's permutation.
class OutcomeFamily3 {
 public:
  OutcomeFamily3(double lambda, double phi);
  double lambda() const { return lambda_; }
  double phi() const { return phi_; }
  const PureStateVector& state() const { return state_; }

 private:
  double lambda_;
  double phi_;
  PureStateVector state_;
};

// Three-path outcome with coefficient 1 on every even ordering and
// (a1, a2, a3) on the odd orderings in lexicographic order
// (0,2,1), (1,0,2), (2,1,0).
class AlphaOutcome {
 public:
  explicit AlphaOutcome(std::array<double, 3> alpha);
  const std::array<double, 3>& alpha() const { return alpha_; }
  const PureStateVector& state() const { return state_; }

 private:
  std::array<double, 3> alpha_;
  PureStateVector state_;
};

enum class OutcomeFamilyKind { kTwoPath, kThreePath };

struct GridSpec {
  double lambda_min = 0.0;
  double lambda_max = 2.0;
  double lambda_step = 0.05;
  double phi_step = 3.14159265358979323846 / 90.0;  // phi covers [0, 2pi)

  std::vector<double> lambdas() const;
  std::vector<double> phis() const;
};

struct OutcomeScanPoint {
  double lambda = 0.0;
  double phi = 0.0;
  double k = 0.0;
};

// K at every (lambda, phi) of the grid, lambda-major.
std::vector<OutcomeScanPoint> scan_outcomes(const ControlState& control, OutcomeFamilyKind family,
                                            const GridSpec& grid, const QuadratureSpec& quad = {});

// Grid argmax of K; ties go to the smaller lambda, then the smaller phi.
OutcomeScanPoint optimize_outcome(const ControlState& control, OutcomeFamilyKind family, const GridSpec& grid,
                                  const QuadratureSpec& quad = {});

enum class ProfileFlag { kOk, kFromMarginal, kDegenerate };

struct ProfilePoint {
  double p = 0.0;
  std::optional<double> fidelity;  // empty when kDegenerate
  ProfileFlag flag = ProfileFlag::kOk;
};

// Fidelity of the three-path switch with uniform control post-selected on
// the alpha outcome, at each p of the grid.
std::vector<ProfilePoint> alpha_fidelity_profile(const AlphaOutcome& alpha, std::span<const double> p_grid);

}  // namespace qswitch
