#include "qswitch/pauli_channels.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace qswitch {
namespace {

constexpr double kWeightSumTolerance = 1e-12;
constexpr double kResourceSumTolerance = 1e-9;
constexpr double kNoiseSlack = 1e-12;

void require_noise_in_range(double p) {
  if (!(p >= -kNoiseSlack && p <= 1.0 / 3.0 + kNoiseSlack)) {
    throw DomainError("noise weight p=" + std::to_string(p) + " outside [0, 1/3]");
  }
}

}  // namespace

const ComplexMatrix& pauli_matrix(int index) {
  static const std::array<ComplexMatrix, 4> paulis = {
      ComplexMatrix{{1.0, 0.0}, {0.0, 1.0}},
      ComplexMatrix{{0.0, 1.0}, {1.0, 0.0}},
      ComplexMatrix{{0.0, Complex(0.0, -1.0)}, {Complex(0.0, 1.0), 0.0}},
      ComplexMatrix{{1.0, 0.0}, {0.0, -1.0}},
  };
  if (index < 0 || index > 3) {
    throw DomainError("pauli index must be in 0..3");
  }
  return paulis[static_cast<std::size_t>(index)];
}

PauliWeights::PauliWeights(double p0, double p1, double p2, double p3) : values_{p0, p1, p2, p3} {
  double sum = 0.0;
  for (double w : values_) {
    if (!(w >= 0.0 && w <= 1.0)) {
      throw DomainError("Pauli weight " + std::to_string(w) + " outside [0, 1]");
    }
    sum += w;
  }
  if (std::abs(sum - 1.0) > kWeightSumTolerance) {
    throw DomainError("Pauli weights sum to " + std::to_string(sum) + ", not 1");
  }
}

bool PauliWeights::is_isotropic() const { return values_[1] == values_[2] && values_[2] == values_[3]; }

PauliWeights isotropic_weights(double p) {
  require_noise_in_range(p);
  p = std::clamp(p, 0.0, 1.0 / 3.0);
  return PauliWeights(std::max(0.0, 1.0 - 3.0 * p), p, p, p);
}

ResourceState::ResourceState(ComplexMatrix chi) : chi_(std::move(chi)) {
  if (chi_.rows() != 4 || chi_.cols() != 4) {
    throw DimensionError("resource state must be 4x4");
  }
  require_density_matrix(chi_, "resource state");
}

ResourceState ResourceState::bell_diagonal(const PauliWeights& weights) {
  const auto bell = bell_basis();
  ComplexMatrix chi(4, 4);
  for (int i = 0; i < 4; ++i) {
    chi += bell[static_cast<std::size_t>(i)].projector() * Complex(weights[i]);
  }
  return ResourceState(std::move(chi));
}

DepolarizingChannel::DepolarizingChannel(const PauliWeights& weights) : weights_(weights) {
  for (int i = 0; i < 4; ++i) {
    kraus_[static_cast<std::size_t>(i)] = pauli_matrix(i) * Complex(std::sqrt(weights[i]));
  }
}

std::array<PureStateVector, 4> bell_basis() {
  const double r = 1.0 / std::sqrt(2.0);
  const PureStateVector singlet{0.0, r, -r, 0.0};
  auto rotated = [&](int i) {
    const ComplexMatrix op = tensor_product(pauli_matrix(0), pauli_matrix(i));
    std::vector<Complex> amps(4);
    for (std::size_t row = 0; row < 4; ++row) {
      for (std::size_t col = 0; col < 4; ++col) {
        amps[row] += op(row, col) * singlet[col];
      }
    }
    return PureStateVector(std::move(amps));
  };
  return {singlet, rotated(1), rotated(2), rotated(3)};
}

PauliWeights weights_from_resource(const ResourceState& chi) {
  const auto bell = bell_basis();
  std::array<double, 4> w{};
  double sum = 0.0;
  for (std::size_t i = 0; i < 4; ++i) {
    const auto& b = bell[i];
    Complex overlap{};
    for (std::size_t r = 0; r < 4; ++r) {
      for (std::size_t c = 0; c < 4; ++c) {
        overlap += std::conj(b[r]) * chi.matrix()(r, c) * b[c];
      }
    }
    w[i] = overlap.real();
    sum += w[i];
  }
  if (std::abs(sum - 1.0) > kResourceSumTolerance) {
    throw DomainError("Bell overlaps sum to " + std::to_string(sum) + ", resource is not normalized");
  }
  for (auto& x : w) {
    x = std::max(x, 0.0) / sum;
  }
  return PauliWeights(w[0], w[1], w[2], w[3]);
}

ComplexMatrix apply_channel(const DepolarizingChannel& channel, const ComplexMatrix& rho) {
  if (rho.rows() != 2 || rho.cols() != 2) {
    throw DimensionError("apply_channel: input must be a qubit state");
  }
  require_density_matrix(rho, "apply_channel input");
  ComplexMatrix out(2, 2);
  for (int i = 0; i < 4; ++i) {
    const double w = channel.weights()[i];
    if (w == 0.0) {
      continue;
    }
    const auto& s = pauli_matrix(i);
    out += (s * rho * s) * Complex(w);
  }
  return out;
}

double qubit_fidelity(const ComplexMatrix& rho, const ComplexMatrix& sigma) {
  if (rho.rows() != 2 || rho.cols() != 2 || sigma.rows() != 2 || sigma.cols() != 2) {
    throw DimensionError("qubit_fidelity: inputs must be 2x2");
  }
  require_density_matrix(rho, "qubit_fidelity rho");
  require_density_matrix(sigma, "qubit_fidelity sigma");
  const double overlap = trace(rho * sigma).real();
  // A numerically pure state has det ~ eps, which would add ~sqrt(eps) here.
  auto det_or_zero = [](const ComplexMatrix& m) {
    const double d = det2(m).real();
    return d > kSpectralFloor ? d : 0.0;
  };
  const double det_product = det_or_zero(rho) * det_or_zero(sigma);
  return overlap + 2.0 * std::sqrt(det_product);
}

double general_fidelity(const ComplexMatrix& rho, const ComplexMatrix& sigma) {
  if (rho.rows() != sigma.rows() || rho.cols() != sigma.cols()) {
    throw DimensionError("general_fidelity: dimension mismatch");
  }
  require_density_matrix(rho, "general_fidelity rho");
  require_density_matrix(sigma, "general_fidelity sigma");
  const ComplexMatrix root = psd_sqrt(rho);
  ComplexMatrix inner = root * sigma * root;
  inner = (inner + dagger(inner)) * Complex(0.5);
  const auto eig = hermitian_eigensystem(inner);
  // Eigenvalues at the roundoff floor would otherwise add ~sqrt(eps) each.
  const double floor = kSpectralFloor * std::max(1.0, eig.values.back());
  double sum = 0.0;
  for (double lambda : eig.values) {
    if (lambda > floor) sum += std::sqrt(lambda);
  }
  return sum * sum;
}

double no_switch_fidelity(double p, int n) {
  require_noise_in_range(p);
  if (n < 1) {
    throw DomainError("no_switch_fidelity: n must be >= 1");
  }
  return 0.5 + 0.5 * std::pow(1.0 - 4.0 * p, n);
}

double no_switch_threshold(int n) {
  if (n < 1) {
    throw DomainError("no_switch_threshold: n must be >= 1");
  }
  return (1.0 - std::pow(3.0, -1.0 / n)) / 4.0;
}

}  // namespace qswitch
