#include "qswitch/causal_switch.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace qswitch {
namespace {

constexpr double kProductTolerance = 1e-10;

bool valid_control_dim(std::size_t d) { return d == 2 || d == 6 || d == 24; }

int paths_for_dim(std::size_t d) { return d == 2 ? 2 : (d == 6 ? 3 : 4); }

ComplexMatrix basis_projector(std::size_t dim, std::size_t k) {
  ComplexMatrix out(dim, dim);
  out(k, k) = 1.0;
  return out;
}

void require_qubit_state(const ComplexMatrix& rho) {
  if (rho.rows() != 2 || rho.cols() != 2) {
    throw DimensionError("system input must be a 2x2 density matrix");
  }
  require_density_matrix(rho, "system input");
}

// Visits every tuple (i_0, ..., i_{n-1}) in {0..3}^n.
template <typename Visit>
void for_each_index_tuple(int n, Visit&& visit) {
  std::vector<int> idx(static_cast<std::size_t>(n), 0);
  while (true) {
    visit(idx);
    std::size_t pos = 0;
    while (pos < idx.size() && ++idx[pos] == 4) {
      idx[pos++] = 0;
    }
    if (pos == idx.size()) {
      return;
    }
  }
}

// Branch operator for one ordering, written as an operator product in the
// order listed: perm.mapping[0] is the leftmost factor and acts last.
ComplexMatrix ordered_product(const std::vector<const ComplexMatrix*>& per_channel, const Permutation& perm) {
  ComplexMatrix out = ComplexMatrix::identity(2);
  for (int channel : perm.mapping) {
    out = out * *per_channel[static_cast<std::size_t>(channel)];
  }
  return out;
}

// sum_k M_k (x) |k><k| applied as W X W^+.
ComplexMatrix conjugate_by_branches(const std::vector<ComplexMatrix>& branches, const ComplexMatrix& input) {
  const std::size_t d = branches.size();
  ComplexMatrix w(2 * d, 2 * d);
  for (std::size_t k = 0; k < d; ++k) {
    w += tensor_product(branches[k], basis_projector(d, k));
  }
  return w * input * dagger(w);
}

std::vector<ComplexMatrix> branch_operators(const std::vector<Permutation>& perms,
                                            std::span<const ComplexMatrix> kraus, const std::vector<int>& idx) {
  std::vector<const ComplexMatrix*> per_channel(idx.size());
  for (std::size_t c = 0; c < idx.size(); ++c) {
    per_channel[c] = &kraus[static_cast<std::size_t>(idx[c])];
  }
  std::vector<ComplexMatrix> out;
  out.reserve(perms.size());
  for (const auto& perm : perms) {
    out.push_back(ordered_product(per_channel, perm));
  }
  return out;
}

void check_paths(int paths, const ControlState& control) {
  if (paths < 2 || paths > 4) {
    throw DomainError("number of paths must be in {2, 3, 4}");
  }
  if (control.dim() != factorial(paths)) {
    throw DimensionError("control dimension " + std::to_string(control.dim()) + " != " + std::to_string(paths) +
                         "!");
  }
}

double noise_weight(int paths, int identity_count, double p) {
  return std::pow(1.0 - 3.0 * p, identity_count) * std::pow(p, paths - identity_count);
}

bool is_product(const ComplexMatrix& joint, std::size_t control_dim) {
  const auto sys = partial_trace(joint, 2, control_dim, Keep::kFirst);
  const auto ctl = partial_trace(joint, 2, control_dim, Keep::kSecond);
  return max_abs_diff(joint, tensor_product(sys, ctl)) < kProductTolerance;
}

ConditionalState condition_impl(const ComplexMatrix& joint, std::size_t control_dim,
                                const ComplexMatrix& unnormalized) {
  const double probability = trace(unnormalized).real();
  if (probability >= kDegenerateProbability) {
    return {unnormalized * Complex(1.0 / probability), probability, false};
  }
  if (is_product(joint, control_dim)) {
    auto marginal = partial_trace(joint, 2, control_dim, Keep::kFirst);
    marginal *= Complex(1.0 / trace(marginal).real());
    return {std::move(marginal), std::max(probability, 0.0), true};
  }
  throw DegenerateOutcomeError("post-selection probability " + std::to_string(probability) +
                               " below threshold on a correlated joint state");
}

}  // namespace

ControlState::ControlState(PureStateVector state) : state_(std::move(state)) {
  if (!valid_control_dim(state_.dim())) {
    throw DimensionError("control dimension must be 2, 6 or 24");
  }
  paths_ = paths_for_dim(state_.dim());
}

ControlState ControlState::two_path(double q) {
  if (!(q >= 0.0 && q <= 1.0)) {
    throw DomainError("control weight q=" + std::to_string(q) + " outside [0, 1]");
  }
  return ControlState(PureStateVector{std::sqrt(q), std::sqrt(1.0 - q)});
}

ControlState ControlState::uniform(int paths) {
  if (paths < 2 || paths > 4) {
    throw DomainError("number of paths must be in {2, 3, 4}");
  }
  return ControlState(PureStateVector(std::vector<Complex>(factorial(paths), 1.0)));
}

double ControlState::mu() const {
  if (dim() != 2) {
    throw DimensionError("mu is defined for two-path controls only");
  }
  return std::min(std::abs(state_[0]) * std::abs(state_[1]), 0.5);
}

JointState::JointState(ComplexMatrix matrix, std::size_t control_dim)
    : matrix_(std::move(matrix)), control_dim_(control_dim) {
  if (!valid_control_dim(control_dim_) || matrix_.rows() != 2 * control_dim_ || matrix_.cols() != 2 * control_dim_) {
    throw DimensionError("joint state must be (2 * control_dim) square");
  }
  if (!is_hermitian(matrix_)) {
    throw DomainError("joint state is not Hermitian");
  }
  if (std::abs(trace(matrix_) - 1.0) >= kHermitianTolerance) {
    throw DomainError("joint state does not have unit trace");
  }
}

ComplexMatrix JointState::system_marginal() const { return partial_trace(matrix_, 2, control_dim_, Keep::kFirst); }

ComplexMatrix JointState::control_marginal() const {
  return partial_trace(matrix_, 2, control_dim_, Keep::kSecond);
}

PureStateVector hadamard_state(HadamardOutcome outcome) {
  return outcome == HadamardOutcome::kPlus ? PureStateVector{1.0, 1.0} : PureStateVector{1.0, -1.0};
}

JointState switch_two(std::span<const ComplexMatrix> kraus_a, std::span<const ComplexMatrix> kraus_b,
                      const ComplexMatrix& rho, const ControlState& control) {
  require_qubit_state(rho);
  if (control.dim() != 2) {
    throw DimensionError("switch_two needs a two-dimensional control");
  }
  for (const auto& k : kraus_a) {
    if (k.rows() != 2 || k.cols() != 2) throw DimensionError("Kraus operators must be 2x2");
  }
  for (const auto& k : kraus_b) {
    if (k.rows() != 2 || k.cols() != 2) throw DimensionError("Kraus operators must be 2x2");
  }
  const ComplexMatrix input = tensor_product(rho, control.density());
  ComplexMatrix out(4, 4);
  for (const auto& a : kraus_a) {
    for (const auto& b : kraus_b) {
      out += conjugate_by_branches({b * a, a * b}, input);
    }
  }
  return JointState(std::move(out), 2);
}

JointState switch_two(const DepolarizingChannel& a, const DepolarizingChannel& b, const ComplexMatrix& rho,
                      const ControlState& control) {
  return switch_two(a.kraus(), b.kraus(), rho, control);
}

JointState switch_n(const DepolarizingChannel& channel, int paths, const ComplexMatrix& rho,
                    const ControlState& control) {
  check_paths(paths, control);
  require_qubit_state(rho);
  const auto perms = enumerate_permutations(paths);
  const std::size_t d = control.dim();
  const ComplexMatrix input = tensor_product(rho, control.density());
  const auto& weights = channel.weights();
  ComplexMatrix out(2 * d, 2 * d);
  for_each_index_tuple(paths, [&](const std::vector<int>& idx) {
    for (int i : idx) {
      if (weights[i] == 0.0) return;
    }
    out += conjugate_by_branches(branch_operators(perms, channel.kraus(), idx), input);
  });
  return JointState(std::move(out), d);
}

ComplexMatrix project_control(const ComplexMatrix& joint, std::size_t control_dim, const PureStateVector& outcome) {
  if (outcome.dim() != control_dim) {
    throw DimensionError("outcome dimension does not match the control");
  }
  if (joint.rows() != 2 * control_dim || joint.cols() != 2 * control_dim) {
    throw DimensionError("project_control: joint is not (2 * control_dim) square");
  }
  ComplexMatrix out(2, 2);
  for (std::size_t s = 0; s < 2; ++s) {
    for (std::size_t t = 0; t < 2; ++t) {
      Complex sum{};
      for (std::size_t k = 0; k < control_dim; ++k) {
        const Complex left = std::conj(outcome[k]);
        if (left == Complex{}) continue;
        for (std::size_t l = 0; l < control_dim; ++l) {
          sum += left * joint(s * control_dim + k, t * control_dim + l) * outcome[l];
        }
      }
      out(s, t) = sum;
    }
  }
  return out;
}

PostSelectionResult post_select(const JointState& joint, const PureStateVector& outcome) {
  ComplexMatrix projected = project_control(joint.matrix(), joint.control_dim(), outcome);
  const double probability = trace(projected).real();
  if (probability < kDegenerateProbability) {
    throw DegenerateOutcomeError("post-selection probability " + std::to_string(probability) +
                                 " below threshold");
  }
  projected *= Complex(1.0 / probability);
  return {std::move(projected), probability};
}

ConditionalState conditional_system_state(const JointState& joint, const PureStateVector& outcome) {
  return condition_impl(joint.matrix(), joint.control_dim(),
                        project_control(joint.matrix(), joint.control_dim(), outcome));
}

ComplexMatrix closed_form_two(double p, double q, HadamardOutcome sign, const ComplexMatrix& rho) {
  const auto weights = isotropic_weights(p);
  if (!(q >= 0.0 && q <= 1.0)) {
    throw DomainError("control weight q outside [0, 1]");
  }
  const double mu = std::sqrt(q * (1.0 - q));
  const double s = sign == HadamardOutcome::kPlus ? 1.0 : -1.0;
  ComplexMatrix out(2, 2);
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      const double w = weights[i] * weights[j] / 2.0;
      if (w == 0.0) continue;
      const auto& si = pauli_matrix(i);
      const auto& sj = pauli_matrix(j);
      const ComplexMatrix ij = si * sj;
      const ComplexMatrix ji = sj * si;
      ComplexMatrix term = (ij * rho * ji) * Complex(q);
      term += (ij * rho * ij) * Complex(s * mu);
      term += (ji * rho * ji) * Complex(s * mu);
      term += (ji * rho * ij) * Complex(1.0 - q);
      out += term * Complex(w);
    }
  }
  return out;
}

NoisePolynomial::NoisePolynomial(int paths, std::vector<double> coefficients)
    : paths_(paths), coefficients_(std::move(coefficients)) {
  if (coefficients_.size() != static_cast<std::size_t>(paths_) + 1) {
    throw DimensionError("NoisePolynomial needs paths+1 coefficients");
  }
}

double NoisePolynomial::operator()(double p) const {
  double sum = 0.0;
  for (int z = 0; z <= paths_; ++z) {
    sum += noise_weight(paths_, z, p) * coefficients_[static_cast<std::size_t>(z)];
  }
  return sum;
}

std::vector<double> NoisePolynomial::power_coefficients() const {
  // (1-3p)^z p^(n-z) = sum_k C(z,k) (-3)^k p^(k+n-z)
  std::vector<double> out(static_cast<std::size_t>(paths_) + 1, 0.0);
  for (int z = 0; z <= paths_; ++z) {
    double binomial = 1.0;
    double power = 1.0;
    for (int k = 0; k <= z; ++k) {
      out[static_cast<std::size_t>(k + paths_ - z)] += coefficients_[static_cast<std::size_t>(z)] * binomial * power;
      binomial = binomial * (z - k) / (k + 1);
      power *= -3.0;
    }
  }
  return out;
}

IsotropicSwitchExpansion::IsotropicSwitchExpansion(int paths, const ComplexMatrix& rho, const ControlState& control)
    : paths_(paths), control_dim_(control.dim()) {
  check_paths(paths, control);
  require_qubit_state(rho);
  const auto perms = enumerate_permutations(paths);
  const ComplexMatrix input = tensor_product(rho, control.density());
  std::vector<ComplexMatrix> paulis;
  for (int i = 0; i < 4; ++i) paulis.push_back(pauli_matrix(i));

  auto terms = std::vector<ComplexMatrix>(static_cast<std::size_t>(paths) + 1,
                                          ComplexMatrix(2 * control_dim_, 2 * control_dim_));
  for_each_index_tuple(paths, [&](const std::vector<int>& idx) {
    const auto identity_count = std::count(idx.begin(), idx.end(), 0);
    terms[static_cast<std::size_t>(identity_count)] += conjugate_by_branches(branch_operators(perms, paulis, idx), input);
  });
  terms_ = std::make_shared<const std::vector<ComplexMatrix>>(std::move(terms));
}

ComplexMatrix IsotropicSwitchExpansion::unnormalized_joint(double p) const {
  isotropic_weights(p);
  ComplexMatrix out(2 * control_dim_, 2 * control_dim_);
  for (int z = 0; z <= paths_; ++z) {
    const double w = noise_weight(paths_, z, p);
    if (w != 0.0) out += (*terms_)[static_cast<std::size_t>(z)] * Complex(w);
  }
  return out;
}

JointState IsotropicSwitchExpansion::joint(double p) const { return JointState(unnormalized_joint(p), control_dim_); }

NoisePolynomial IsotropicSwitchExpansion::expectation(const ComplexMatrix& observable) const {
  std::vector<double> coefficients;
  for (const auto& term : *terms_) {
    coefficients.push_back(trace(observable * term).real());
  }
  return NoisePolynomial(paths_, std::move(coefficients));
}

ConditionalExpansion IsotropicSwitchExpansion::condition_on(const PureStateVector& outcome) const {
  std::vector<ComplexMatrix> projected;
  for (const auto& term : *terms_) {
    projected.push_back(project_control(term, control_dim_, outcome));
  }
  return ConditionalExpansion(paths_, control_dim_, std::move(projected), terms_);
}

ConditionalExpansion::ConditionalExpansion(int paths, std::size_t control_dim, std::vector<ComplexMatrix> projected,
                                           std::shared_ptr<const std::vector<ComplexMatrix>> joint_terms)
    : paths_(paths), control_dim_(control_dim), projected_(std::move(projected)), joint_terms_(std::move(joint_terms)) {}

ComplexMatrix ConditionalExpansion::unnormalized(double p) const {
  ComplexMatrix out(2, 2);
  for (int z = 0; z <= paths_; ++z) {
    const double w = noise_weight(paths_, z, p);
    if (w != 0.0) out += projected_[static_cast<std::size_t>(z)] * Complex(w);
  }
  return out;
}

double ConditionalExpansion::probability(double p) const { return trace(unnormalized(p)).real(); }

NoisePolynomial ConditionalExpansion::expectation(const ComplexMatrix& observable) const {
  std::vector<double> coefficients;
  for (const auto& term : projected_) {
    coefficients.push_back(trace(observable * term).real());
  }
  return NoisePolynomial(paths_, std::move(coefficients));
}

ConditionalState ConditionalExpansion::at(double p) const {
  const ComplexMatrix projected = unnormalized(p);
  if (trace(projected).real() >= kDegenerateProbability) {
    return condition_impl(ComplexMatrix(), control_dim_, projected);
  }
  ComplexMatrix joint(2 * control_dim_, 2 * control_dim_);
  for (int z = 0; z <= paths_; ++z) {
    const double w = noise_weight(paths_, z, p);
    if (w != 0.0) joint += (*joint_terms_)[static_cast<std::size_t>(z)] * Complex(w);
  }
  return condition_impl(joint, control_dim_, projected);
}

PureStateVector haar_random_qubit(std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  while (true) {
    const Complex a(gauss(rng), gauss(rng));
    const Complex b(gauss(rng), gauss(rng));
    if (std::norm(a) + std::norm(b) > 1e-12) {
      return PureStateVector{a, b};
    }
  }
}

}  // namespace qswitch
