#pragma once

// Generalized depolarizing channels: the effective qubit channel realized by
// standard teleportation through an imperfect shared resource, together with
// the fidelity functionals used to judge it.

#include <array>
#include <span>

#include "qswitch/linalg.hpp"

namespace qswitch {

// Index 0..3 -> I, sigma_x, sigma_y, sigma_z.
const ComplexMatrix& pauli_matrix(int index);

// Probability 4-vector (p0, p1, p2, p3); p0 is the weight of the identity.
class PauliWeights {
 public:
  PauliWeights(double p0, double p1, double p2, double p3);

  double operator[](int i) const { return values_[static_cast<std::size_t>(i)]; }
  const std::array<double, 4>& values() const { return values_; }

  // True when p1 == p2 == p3.
  bool is_isotropic() const;

 private:
  std::array<double, 4> values_;
};

// (1 - 3p, p, p, p). Throws DomainError unless p in [0, 1/3].
PauliWeights isotropic_weights(double p);

// Two-qubit density matrix shared between sender and receiver.
class ResourceState {
 public:
  explicit ResourceState(ComplexMatrix chi);

  // sum_i w_i |B_i><B_i|
  static ResourceState bell_diagonal(const PauliWeights& weights);

  const ComplexMatrix& matrix() const { return chi_; }

 private:
  ComplexMatrix chi_;
};

// Lambda[rho] = sum_i p_i sigma_i rho sigma_i with Kraus operators
// K_i = sqrt(p_i) sigma_i.
class DepolarizingChannel {
 public:
  explicit DepolarizingChannel(const PauliWeights& weights);

  static DepolarizingChannel isotropic(double p) { return DepolarizingChannel(isotropic_weights(p)); }

  const PauliWeights& weights() const { return weights_; }
  std::span<const ComplexMatrix> kraus() const { return kraus_; }

 private:
  PauliWeights weights_;
  std::array<ComplexMatrix, 4> kraus_;
};

// |B_0> = |psi^-> = (|01> - |10>)/sqrt2 and |B_i> = (I (x) sigma_i)|psi^->.
// With this ordering resource weight i conjugates the teleported qubit by
// sigma_i.
std::array<PureStateVector, 4> bell_basis();

// p_i = <B_i|chi|B_i>; p_0 is the singlet fraction.
PauliWeights weights_from_resource(const ResourceState& chi);

ComplexMatrix apply_channel(const DepolarizingChannel& channel, const ComplexMatrix& rho);

// Squared Uhlmann fidelity of two qubit states via the closed form
// Tr(rho sigma) + 2 sqrt(det rho det sigma).
double qubit_fidelity(const ComplexMatrix& rho, const ComplexMatrix& sigma);

// Squared Uhlmann fidelity (Tr sqrt(sqrt(rho) sigma sqrt(rho)))^2 for any
// equal-dimension density matrices.
double general_fidelity(const ComplexMatrix& rho, const ComplexMatrix& sigma);

// Fidelity of n isotropic channels applied in sequence to a pure input:
// 1/2 + (1 - 4p)^n / 2.
double no_switch_fidelity(double p, int n);

// Noise level above which n sequential channels cannot beat the classical
// 2/3 fidelity: (1 - 3^{-1/n}) / 4.
double no_switch_threshold(int n);

}  // namespace qswitch
