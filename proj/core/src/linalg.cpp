#include "qswitch/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace qswitch {
namespace {

void check_shape(std::size_t rows, std::size_t cols) {
  if (rows == 0 || cols == 0 || rows > kMaxDimension || cols > kMaxDimension) {
    throw DimensionError("matrix shape " + std::to_string(rows) + "x" + std::to_string(cols) +
                         " outside [1, " + std::to_string(kMaxDimension) + "]");
  }
}

void require_same_shape(const ComplexMatrix& a, const ComplexMatrix& b, const char* op) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionError(std::string(op) + ": shape mismatch");
  }
}

constexpr double kJacobiTolerance = 1e-12;
constexpr int kJacobiMaxSweeps = 100;

}  // namespace

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {
  check_shape(rows, cols);
}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  check_shape(rows, cols);
  if (entries_.size() != rows * cols) {
    throw DimensionError("entry count does not match rows*cols");
  }
}

ComplexMatrix::ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  check_shape(rows_, cols_);
  entries_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) {
      throw DimensionError("ragged initializer list");
    }
    entries_.insert(entries_.end(), row.begin(), row.end());
  }
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
  ComplexMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    m(i, i) = 1.0;
  }
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const double> values) {
  ComplexMatrix m(values.size(), values.size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    m(i, i) = values[i];
  }
  return m;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& other) {
  require_same_shape(*this, other, "operator+");
  for (std::size_t k = 0; k < entries_.size(); ++k) {
    entries_[k] += other.entries_[k];
  }
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& other) {
  require_same_shape(*this, other, "operator-");
  for (std::size_t k = 0; k < entries_.size(); ++k) {
    entries_[k] -= other.entries_[k];
  }
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex scale) {
  for (auto& e : entries_) {
    e *= scale;
  }
  return *this;
}

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
ComplexMatrix operator*(ComplexMatrix a, Complex scale) { return a *= scale; }
ComplexMatrix operator*(Complex scale, ComplexMatrix a) { return a *= scale; }
ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) { return matmul(a, b); }

ComplexMatrix tensor_product(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const Complex aij = a(i, j);
      if (aij == Complex{}) {
        continue;
      }
      for (std::size_t k = 0; k < b.rows(); ++k) {
        for (std::size_t l = 0; l < b.cols(); ++l) {
          out(i * b.rows() + k, j * b.cols() + l) = aij * b(k, l);
        }
      }
    }
  }
  return out;
}

ComplexMatrix dagger(const ComplexMatrix& a) {
  ComplexMatrix out(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      out(j, i) = std::conj(a(i, j));
    }
  }
  return out;
}

ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols() != b.rows()) {
    throw DimensionError("matmul: inner dimensions differ (" + std::to_string(a.cols()) + " vs " +
                         std::to_string(b.rows()) + ")");
  }
  ComplexMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Complex aik = a(i, k);
      if (aik == Complex{}) {
        continue;
      }
      for (std::size_t j = 0; j < b.cols(); ++j) {
        out(i, j) += aik * b(k, j);
      }
    }
  }
  return out;
}

Complex trace(const ComplexMatrix& a) {
  if (!a.is_square()) {
    throw DimensionError("trace: matrix is not square");
  }
  Complex t{};
  for (std::size_t i = 0; i < a.rows(); ++i) {
    t += a(i, i);
  }
  return t;
}

Complex det2(const ComplexMatrix& a) {
  if (a.rows() != 2 || a.cols() != 2) {
    throw DimensionError("det2: matrix is not 2x2");
  }
  return a(0, 0) * a(1, 1) - a(0, 1) * a(1, 0);
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_shape(a, b, "max_abs_diff");
  double worst = 0.0;
  for (std::size_t k = 0; k < a.entries().size(); ++k) {
    worst = std::max(worst, std::abs(a.entries()[k] - b.entries()[k]));
  }
  return worst;
}

bool is_hermitian(const ComplexMatrix& a, double tol) {
  if (!a.is_square()) {
    return false;
  }
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = i; j < a.cols(); ++j) {
      if (std::abs(a(i, j) - std::conj(a(j, i))) >= tol) {
        return false;
      }
    }
  }
  return true;
}

bool is_density_matrix(const ComplexMatrix& a, double tol) {
  if (a.empty() || !is_hermitian(a, tol)) {
    return false;
  }
  if (std::abs(trace(a) - 1.0) >= tol) {
    return false;
  }
  const auto eig = hermitian_eigensystem(a);
  return eig.values.front() >= -tol;
}

void require_density_matrix(const ComplexMatrix& a, const char* what) {
  if (!is_density_matrix(a)) {
    throw DomainError(std::string(what) + " is not a density matrix");
  }
}

Eigensystem hermitian_eigensystem(const ComplexMatrix& input) {
  if (!is_hermitian(input)) {
    throw DomainError("hermitian_eigensystem: input is not Hermitian");
  }
  const std::size_t n = input.rows();
  ComplexMatrix a = input;
  ComplexMatrix v = ComplexMatrix::identity(n);

  double scale = 1.0;
  for (const auto& e : a.entries()) {
    scale = std::max(scale, std::abs(e));
  }
  const double threshold = kJacobiTolerance * scale;

  auto max_off_diagonal = [&] {
    double worst = 0.0;
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        worst = std::max(worst, std::abs(a(p, q)));
      }
    }
    return worst;
  };

  int sweep = 0;
  for (; sweep < kJacobiMaxSweeps && max_off_diagonal() >= threshold; ++sweep) {
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const Complex apq = a(p, q);
        const double mag = std::abs(apq);
        if (mag < threshold * 1e-6) {
          continue;
        }
        // Phase rotation makes a(p,q) real, then a real Jacobi rotation
        // annihilates it. J = diag(1, conj(phase)) * [[c, s], [-s, c]].
        const Complex phase_conj = std::conj(apq / mag);
        const double tau = (a(q, q).real() - a(p, p).real()) / (2.0 * mag);
        const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        const Complex jpp = c;
        const Complex jpq = s;
        const Complex jqp = -s * phase_conj;
        const Complex jqq = c * phase_conj;

        for (std::size_t k = 0; k < n; ++k) {
          const Complex akp = a(k, p);
          const Complex akq = a(k, q);
          a(k, p) = akp * jpp + akq * jqp;
          a(k, q) = akp * jpq + akq * jqq;
          const Complex vkp = v(k, p);
          const Complex vkq = v(k, q);
          v(k, p) = vkp * jpp + vkq * jqp;
          v(k, q) = vkp * jpq + vkq * jqq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const Complex apk = a(p, k);
          const Complex aqk = a(q, k);
          a(p, k) = std::conj(jpp) * apk + std::conj(jqp) * aqk;
          a(q, k) = std::conj(jpq) * apk + std::conj(jqq) * aqk;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        a(p, p) = a(p, p).real();
        a(q, q) = a(q, q).real();
      }
    }
  }
  if (max_off_diagonal() >= threshold) {
    throw NumericalError("hermitian_eigensystem: Jacobi sweeps did not converge");
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t i, std::size_t j) { return a(i, i).real() < a(j, j).real(); });

  Eigensystem out{std::vector<double>(n), ComplexMatrix(n, n)};
  for (std::size_t k = 0; k < n; ++k) {
    out.values[k] = a(order[k], order[k]).real();
    for (std::size_t r = 0; r < n; ++r) {
      out.vectors(r, k) = v(r, order[k]);
    }
  }
  return out;
}

ComplexMatrix psd_sqrt(const ComplexMatrix& a) {
  const auto eig = hermitian_eigensystem(a);
  const std::size_t n = a.rows();
  const double floor = n == 0 ? 0.0 : kSpectralFloor * std::max(1.0, eig.values.back());
  ComplexMatrix out(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    double lambda = eig.values[k];
    if (lambda < -kHermitianTolerance) {
      throw DomainError("psd_sqrt: matrix has a negative eigenvalue");
    }
    const double root = lambda > floor ? std::sqrt(lambda) : 0.0;
    if (root == 0.0) {
      continue;
    }
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        out(i, j) += root * eig.vectors(i, k) * std::conj(eig.vectors(j, k));
      }
    }
  }
  return out;
}

ComplexMatrix partial_trace(const ComplexMatrix& joint, std::size_t dim_a, std::size_t dim_b, Keep keep) {
  const std::size_t n = dim_a * dim_b;
  if (dim_a == 0 || dim_b == 0 || joint.rows() != n || joint.cols() != n) {
    throw DimensionError("partial_trace: joint is not (dim_a*dim_b) square");
  }
  if (keep == Keep::kFirst) {
    ComplexMatrix out(dim_a, dim_a);
    for (std::size_t i = 0; i < dim_a; ++i) {
      for (std::size_t j = 0; j < dim_a; ++j) {
        for (std::size_t k = 0; k < dim_b; ++k) {
          out(i, j) += joint(i * dim_b + k, j * dim_b + k);
        }
      }
    }
    return out;
  }
  ComplexMatrix out(dim_b, dim_b);
  for (std::size_t k = 0; k < dim_b; ++k) {
    for (std::size_t l = 0; l < dim_b; ++l) {
      for (std::size_t i = 0; i < dim_a; ++i) {
        out(k, l) += joint(i * dim_b + k, i * dim_b + l);
      }
    }
  }
  return out;
}

PureStateVector::PureStateVector(std::vector<Complex> amplitudes) : amplitudes_(std::move(amplitudes)) {
  if (amplitudes_.empty() || amplitudes_.size() > kMaxDimension) {
    throw DimensionError("PureStateVector: dimension outside [1, 48]");
  }
  double norm2 = 0.0;
  for (const auto& z : amplitudes_) {
    norm2 += std::norm(z);
  }
  if (!(norm2 > 1e-24) || !std::isfinite(norm2)) {
    throw DomainError("PureStateVector: amplitudes have zero or non-finite norm");
  }
  const double inv = 1.0 / std::sqrt(norm2);
  for (auto& z : amplitudes_) {
    z *= inv;
  }
}

PureStateVector::PureStateVector(std::initializer_list<Complex> amplitudes)
    : PureStateVector(std::vector<Complex>(amplitudes)) {}

PureStateVector PureStateVector::basis(std::size_t dim, std::size_t index) {
  if (index >= dim) {
    throw DimensionError("PureStateVector::basis: index out of range");
  }
  std::vector<Complex> amps(dim);
  amps[index] = 1.0;
  return PureStateVector(std::move(amps));
}

Complex PureStateVector::inner(const PureStateVector& other) const {
  if (other.dim() != dim()) {
    throw DimensionError("inner: dimension mismatch");
  }
  Complex sum{};
  for (std::size_t k = 0; k < dim(); ++k) {
    sum += std::conj(amplitudes_[k]) * other.amplitudes_[k];
  }
  return sum;
}

ComplexMatrix PureStateVector::projector() const {
  ComplexMatrix out(dim(), dim());
  for (std::size_t i = 0; i < dim(); ++i) {
    for (std::size_t j = 0; j < dim(); ++j) {
      out(i, j) = amplitudes_[i] * std::conj(amplitudes_[j]);
    }
  }
  return out;
}

}  // namespace qswitch
