#pragma once

// Dense complex linear algebra for the small operators of this library:
// qubit states, Kraus operators and system(x)control joint states of
// dimension at most 2 * 4! = 48.

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "qswitch/errors.hpp"

namespace qswitch {

using Complex = std::complex<double>;

inline constexpr std::size_t kMaxDimension = 48;

// Tolerance used for Hermiticity, trace and positivity checks.
inline constexpr double kHermitianTolerance = 1e-10;
inline constexpr double kSpectralFloor = 1e-15;

class PureStateVector;

// Row-major dense complex matrix. A default-constructed matrix is empty
// (0 x 0); every other constructor yields rows, cols in [1, kMaxDimension].
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  ComplexMatrix(std::size_t rows, std::size_t cols);
  ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries);
  ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

  static ComplexMatrix identity(std::size_t n);
  static ComplexMatrix diagonal(std::span<const double> values);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return entries_.empty(); }
  bool is_square() const { return rows_ == cols_; }

  Complex& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Complex& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

  std::span<const Complex> entries() const { return entries_; }

  ComplexMatrix& operator+=(const ComplexMatrix& other);
  ComplexMatrix& operator-=(const ComplexMatrix& other);
  ComplexMatrix& operator*=(Complex scale);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Complex> entries_;
};

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator*(ComplexMatrix a, Complex scale);
ComplexMatrix operator*(Complex scale, ComplexMatrix a);
ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);

// Kronecker product, (a (x) b)[i*rb + k, j*cb + l] = a[i,j] * b[k,l].
ComplexMatrix tensor_product(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix dagger(const ComplexMatrix& a);
ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b);
Complex trace(const ComplexMatrix& a);
Complex det2(const ComplexMatrix& a);

// Largest elementwise modulus of a - b. Shapes must agree.
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

bool is_hermitian(const ComplexMatrix& a, double tol = kHermitianTolerance);

// Hermitian, unit trace and positive semidefinite, all within tol.
bool is_density_matrix(const ComplexMatrix& a, double tol = kHermitianTolerance);

// Throws DomainError naming `what` unless is_density_matrix(a).
void require_density_matrix(const ComplexMatrix& a, const char* what);

struct Eigensystem {
  std::vector<double> values;  // ascending
  ComplexMatrix vectors;       // column k pairs with values[k]
};

// Cyclic complex Jacobi. Throws DomainError for non-Hermitian input and
// NumericalError if 100 sweeps do not bring the off-diagonal below 1e-12.
Eigensystem hermitian_eigensystem(const ComplexMatrix& a);

// Square root of a Hermitian PSD matrix. Eigenvalues in [-1e-10, 0) are
// clamped to zero; anything more negative is a DomainError.
ComplexMatrix psd_sqrt(const ComplexMatrix& a);

enum class Keep { kFirst, kSecond };

// Traces out the factor not named by `keep` from an operator on A (x) B.
ComplexMatrix partial_trace(const ComplexMatrix& joint, std::size_t dim_a, std::size_t dim_b, Keep keep);

// Unit vector in C^d. Construction normalizes the given amplitudes.
class PureStateVector {
 public:
  explicit PureStateVector(std::vector<Complex> amplitudes);
  PureStateVector(std::initializer_list<Complex> amplitudes);

  static PureStateVector basis(std::size_t dim, std::size_t index);

  std::size_t dim() const { return amplitudes_.size(); }
  const Complex& operator[](std::size_t k) const { return amplitudes_[k]; }
  std::span<const Complex> amplitudes() const { return amplitudes_; }

  // <this|other>
  Complex inner(const PureStateVector& other) const;
  ComplexMatrix projector() const;

 private:
  std::vector<Complex> amplitudes_;
};

}  // namespace qswitch
