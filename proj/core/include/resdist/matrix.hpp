#pragma once

#include <complex>
#include <vector>

namespace resdist {

using cxd = std::complex<double>;

/// Dense complex square matrix, row-major. Everything in this project lives
/// in dimension <= 64, so the representation stays deliberately simple.
class Matrix {
 public:
  Matrix() = default;
  explicit Matrix(int dim) : dim_(dim), a_(static_cast<std::size_t>(dim) * dim) {}

  static Matrix identity(int dim);

  int dim() const { return dim_; }

  cxd& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * dim_ + j]; }
  const cxd& operator()(int i, int j) const { return a_[static_cast<std::size_t>(i) * dim_ + j]; }

  cxd trace() const;
  Matrix adjoint() const;

  /// max_ij |a_ij - conj(a_ji)|
  double hermiticity_defect() const;

  Matrix& operator+=(const Matrix& rhs);
  Matrix& operator-=(const Matrix& rhs);
  Matrix& operator*=(cxd scalar);

  friend Matrix operator+(Matrix lhs, const Matrix& rhs) { return lhs += rhs; }
  friend Matrix operator-(Matrix lhs, const Matrix& rhs) { return lhs -= rhs; }
  friend Matrix operator*(Matrix lhs, cxd scalar) { return lhs *= scalar; }
  friend Matrix operator*(cxd scalar, Matrix rhs) { return rhs *= scalar; }
  friend Matrix operator*(const Matrix& lhs, const Matrix& rhs);

 private:
  int dim_ = 0;
  std::vector<cxd> a_;
};

Matrix kron(const Matrix& a, const Matrix& b);

struct EighResult {
  std::vector<double> values;             // ascending
  std::vector<std::vector<cxd>> vectors;  // vectors[k] belongs to values[k]
};

/// Eigenvalues of a Hermitian matrix, ascending. The matrix is symmetrized to
/// (A + A^dagger)/2 before solving; callers are responsible for rejecting
/// inputs that are not Hermitian to their own tolerance.
///
/// The solver embeds A = X + iY into the real symmetric block matrix
/// [[X, -Y], [Y, X]] and runs cyclic Jacobi sweeps until the off-diagonal
/// Frobenius mass falls below 1e-13. Each eigenvalue of A appears twice in
/// the embedding; the doubled spectrum is folded back by pairing.
std::vector<double> eigvalsh(const Matrix& h);

/// Eigenvalues and eigenvectors of a Hermitian matrix. Complex eigenvectors
/// are recovered from the real embedding by a pivoted Gram-Schmidt pass per
/// eigenvalue cluster (the embedding maps every complex eigenvector to a
/// two-dimensional real invariant plane).
EighResult eigh(const Matrix& h);

/// Principal square root of a positive semidefinite Hermitian matrix.
/// Eigenvalues in (-1e-8, 0) are clamped to zero; anything more negative
/// throws ValidationError.
Matrix sqrt_psd(const Matrix& h);

}  // namespace resdist
