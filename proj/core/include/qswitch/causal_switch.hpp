#pragma once

// Channels composed in superposition of causal order. A control system of
// dimension N! selects the order in which N channels act on a qubit; basis
// state |k> of the control applies E_pi(0) E_pi(1) ... E_pi(N-1) for the k-th
// lexicographic permutation pi, so the last listed channel acts first. Measuring the control on a rank-1 outcome and
// post-selecting yields the effective qubit channel.

#include <cstddef>
#include <memory>
#include <random>
#include <span>
#include <vector>

#include "qswitch/linalg.hpp"
#include "qswitch/pauli_channels.hpp"
#include "qswitch/permutations.hpp"

namespace qswitch {

// Probabilities below this are treated as a zero-probability outcome.
inline constexpr double kDegenerateProbability = 1e-12;

// Pure state of the order-control system, dimension N! for N in {2, 3, 4}.
class ControlState {
 public:
  explicit ControlState(PureStateVector state);

  // sqrt(q)|0> + sqrt(1-q)|1>, q in [0, 1].
  static ControlState two_path(double q);
  // Equal superposition over all n! orderings.
  static ControlState uniform(int paths);

  std::size_t dim() const { return state_.dim(); }
  int paths() const { return paths_; }
  const PureStateVector& state() const { return state_; }
  ComplexMatrix density() const { return state_.projector(); }

  // sqrt(q(1-q)) = |c0||c1|. Two-path controls only.
  double mu() const;

 private:
  PureStateVector state_;
  int paths_ = 2;
};

// system (x) control density matrix, system index major.
class JointState {
 public:
  JointState(ComplexMatrix matrix, std::size_t control_dim);

  const ComplexMatrix& matrix() const { return matrix_; }
  std::size_t control_dim() const { return control_dim_; }

  ComplexMatrix system_marginal() const;
  ComplexMatrix control_marginal() const;

 private:
  ComplexMatrix matrix_;
  std::size_t control_dim_;
};

struct PostSelectionResult {
  ComplexMatrix state;  // normalized system state
  double probability = 0.0;
};

enum class HadamardOutcome { kPlus, kMinus };

// |+> or |-> on a two-dimensional control.
PureStateVector hadamard_state(HadamardOutcome outcome);

// Two channels under a switch. Control |0> runs channel A first then B,
// control |1> runs B first then A:
//   W_ij = B_j A_i (x) |0><0| + A_i B_j (x) |1><1|,  J = sum W_ij (rho (x) rho_c) W_ij^+.
JointState switch_two(std::span<const ComplexMatrix> kraus_a, std::span<const ComplexMatrix> kraus_b,
                      const ComplexMatrix& rho, const ControlState& control);
JointState switch_two(const DepolarizingChannel& a, const DepolarizingChannel& b, const ComplexMatrix& rho,
                      const ControlState& control);

// N identical Pauli channels under an N-path switch.
JointState switch_n(const DepolarizingChannel& channel, int paths, const ComplexMatrix& rho,
                    const ControlState& control);

// (I (x) <m|) J (I (x) |m>) / probability. Throws DegenerateOutcomeError
// when probability < kDegenerateProbability.
PostSelectionResult post_select(const JointState& joint, const PureStateVector& outcome);

// Unnormalized (I (x) <m|) J (I (x) |m>), a 2x2 operator.
ComplexMatrix project_control(const ComplexMatrix& joint, std::size_t control_dim, const PureStateVector& outcome);

// Unnormalized post-measurement system state for two identical isotropic
// channels, control sqrt(q)|0> + sqrt(1-q)|1>, Hadamard outcome +/-, summed
// term by term over the Pauli double sum.
ComplexMatrix closed_form_two(double p, double q, HadamardOutcome sign, const ComplexMatrix& rho);

// Result of conditioning on a control outcome. For a zero-probability
// outcome on a product joint state the system is uncorrelated with the
// control, so the conditional state is taken to be the system marginal and
// `from_marginal` is set.
struct ConditionalState {
  ComplexMatrix state;
  double probability = 0.0;
  bool from_marginal = false;
};

// post_select with the product-state convention above. Still throws
// DegenerateOutcomeError for zero-probability outcomes on correlated states.
ConditionalState conditional_system_state(const JointState& joint, const PureStateVector& outcome);

// Sum_z w_z(p) c_z with w_z(p) = (1-3p)^z p^(n-z): every quantity linear in
// the switch output under isotropic noise is a polynomial of this form.
class NoisePolynomial {
 public:
  NoisePolynomial(int paths, std::vector<double> coefficients);

  double operator()(double p) const;
  int paths() const { return paths_; }
  std::span<const double> coefficients() const { return coefficients_; }
  // Same polynomial in the power basis: entry k multiplies p^k.
  std::vector<double> power_coefficients() const;

 private:
  int paths_;
  std::vector<double> coefficients_;
};

class ConditionalExpansion;

// Isotropic-noise switch output decomposed by the number z of identity Kraus
// factors: J(p) = sum_z (1-3p)^z p^(n-z) J_z. The J_z are built once by the
// same explicit Kraus-sum as switch_n, after which the output at any p costs
// a handful of additions.
class IsotropicSwitchExpansion {
 public:
  IsotropicSwitchExpansion(int paths, const ComplexMatrix& rho, const ControlState& control);

  int paths() const { return paths_; }
  std::size_t control_dim() const { return control_dim_; }

  ComplexMatrix unnormalized_joint(double p) const;
  JointState joint(double p) const;

  // p -> Tr(observable J(p)).
  NoisePolynomial expectation(const ComplexMatrix& observable) const;

  ConditionalExpansion condition_on(const PureStateVector& outcome) const;

 private:
  int paths_;
  std::size_t control_dim_;
  std::shared_ptr<const std::vector<ComplexMatrix>> terms_;
};

// (I (x) <m|) J(p) (I (x) |m>) as a polynomial in p.
class ConditionalExpansion {
 public:
  ComplexMatrix unnormalized(double p) const;
  double probability(double p) const;

  // p -> Tr(observable (I (x) <m|) J(p) (I (x) |m>)), observable 2x2.
  NoisePolynomial expectation(const ComplexMatrix& observable) const;

  // Same conventions as conditional_system_state.
  ConditionalState at(double p) const;

 private:
  friend class IsotropicSwitchExpansion;
  ConditionalExpansion(int paths, std::size_t control_dim, std::vector<ComplexMatrix> projected,
                       std::shared_ptr<const std::vector<ComplexMatrix>> joint_terms);

  int paths_;
  std::size_t control_dim_;
  std::vector<ComplexMatrix> projected_;
  std::shared_ptr<const std::vector<ComplexMatrix>> joint_terms_;
};

// Haar-random pure qubit: normalized pair of standard complex Gaussians.
PureStateVector haar_random_qubit(std::mt19937_64& rng);

}  // namespace qswitch
