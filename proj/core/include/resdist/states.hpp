#pragma once

#include <array>
#include <span>
#include <vector>

#include "resdist/matrix.hpp"

namespace resdist {

/// Two-qubit Bell-diagonal state: weights (w, x, y, z) on the Bell basis
/// (psi+, psi-, phi+, phi-), where
///
///   psi+- = (|00> +- |11>)/sqrt(2),   phi+- = (|01> +- |10>)/sqrt(2).
///
/// Weights are nonnegative and sum to one within 1e-12.
struct BellDiagonalState {
  double w = 1.0;
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  BellDiagonalState() = default;
  BellDiagonalState(double w, double x, double y, double z);

  std::array<double, 4> weights() const { return {w, x, y, z}; }

  friend bool operator==(const BellDiagonalState&, const BellDiagonalState&) = default;

  /// theta = (w + x)(y + z), the quantity driving the step-B failure
  /// probability p_fail = 2 theta. Always in [0, 1/4].
  double theta() const { return (w + x) * (y + z); }
};

/// Isotropic family: weights (f, (1-f)/3, (1-f)/3, (1-f)/3).
BellDiagonalState isotropic(double f);

/// The parameter p of the equivalent mixture p psi+ + (1-p) I/4,
/// related to the fraction f by f = (1 + 3p)/4.
double isotropic_p_from_f(double f);

/// Small dense density matrix. Construction validates hermiticity (1e-10),
/// unit trace (1e-10) and positive semidefiniteness (1e-8); `trusted`
/// skips validation for matrices produced by trace-preserving internals.
class DensityMatrix {
 public:
  DensityMatrix() = default;
  explicit DensityMatrix(Matrix m);
  static DensityMatrix trusted(Matrix m);

  int dim() const { return m_.dim(); }
  const Matrix& matrix() const { return m_; }
  const cxd& operator()(int i, int j) const { return m_(i, j); }

 private:
  Matrix m_;
};

/// Unit-norm state vector (norm within 1e-12 of one).
class PureState {
 public:
  PureState() = default;
  explicit PureState(std::vector<cxd> amplitudes);

  int dim() const { return static_cast<int>(amp_.size()); }
  const std::vector<cxd>& amplitudes() const { return amp_; }
  DensityMatrix projector() const;

 private:
  std::vector<cxd> amp_;
};

/// Bell basis vector for label 0..3 = (psi+, psi-, phi+, phi-).
PureState bell_state(int label);

/// 4x4 matrix sum of weight * projector; eigenvalues equal the weights.
DensityMatrix to_density_matrix(const BellDiagonalState& s);

/// Diagonal of a 4x4 matrix in the Bell basis (w, x, y, z order).
std::array<double, 4> bell_weights(const Matrix& rho4);

/// Standard partial trace. `dims` factorizes the state space, `keep` lists
/// the subsystem indices to retain (ascending).
DensityMatrix partial_trace(const DensityMatrix& rho, std::span<const int> dims,
                            std::span<const int> keep);

/// Purification of rho on system x environment, environment dimension padded
/// to dim(rho). The environment basis follows the eigenbasis of rho in
/// descending eigenvalue order, so a pure input purifies to itself tensored
/// with a fixed reference ket.
PureState purify(const DensityMatrix& rho);

/// Root fidelity F = tr |sqrt(rho) sqrt(sigma)|, *not* its square. With this
/// convention the angle arccos F(rho, sigma) obeys the triangle inequality,
/// which is what the composition bound F >= 1 - 4*delta relies on.
double fidelity(const DensityMatrix& rho, const DensityMatrix& sigma);

/// (1/2) sum |eigenvalues of rho - sigma|.
double trace_distance(const DensityMatrix& rho, const DensityMatrix& sigma);

}  // namespace resdist
