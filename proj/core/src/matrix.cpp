#include "resdist/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numeric>

#include "resdist/errors.hpp"

namespace resdist {

Matrix Matrix::identity(int dim) {
  Matrix m(dim);
  for (int i = 0; i < dim; ++i) m(i, i) = 1.0;
  return m;
}

cxd Matrix::trace() const {
  cxd t = 0.0;
  for (int i = 0; i < dim_; ++i) t += (*this)(i, i);
  return t;
}

Matrix Matrix::adjoint() const {
  Matrix out(dim_);
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j) out(j, i) = std::conj((*this)(i, j));
  return out;
}

double Matrix::hermiticity_defect() const {
  double worst = 0.0;
  for (int i = 0; i < dim_; ++i)
    for (int j = i; j < dim_; ++j)
      worst = std::max(worst, std::abs((*this)(i, j) - std::conj((*this)(j, i))));
  return worst;
}

Matrix& Matrix::operator+=(const Matrix& rhs) {
  if (dim_ != rhs.dim_) throw ValidationError("matrix dimension mismatch in +");
  for (std::size_t k = 0; k < a_.size(); ++k) a_[k] += rhs.a_[k];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& rhs) {
  if (dim_ != rhs.dim_) throw ValidationError("matrix dimension mismatch in -");
  for (std::size_t k = 0; k < a_.size(); ++k) a_[k] -= rhs.a_[k];
  return *this;
}

Matrix& Matrix::operator*=(cxd scalar) {
  for (auto& v : a_) v *= scalar;
  return *this;
}

Matrix operator*(const Matrix& lhs, const Matrix& rhs) {
  if (lhs.dim_ != rhs.dim_) throw ValidationError("matrix dimension mismatch in *");
  const int n = lhs.dim_;
  Matrix out(n);
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < n; ++k) {
      const cxd lik = lhs(i, k);
      if (lik == cxd{}) continue;
      for (int j = 0; j < n; ++j) out(i, j) += lik * rhs(k, j);
    }
  }
  return out;
}

Matrix kron(const Matrix& a, const Matrix& b) {
  const int na = a.dim(), nb = b.dim();
  Matrix out(na * nb);
  for (int i = 0; i < na; ++i)
    for (int j = 0; j < na; ++j) {
      const cxd aij = a(i, j);
      if (aij == cxd{}) continue;
      for (int k = 0; k < nb; ++k)
        for (int l = 0; l < nb; ++l) out(i * nb + k, j * nb + l) = aij * b(k, l);
    }
  return out;
}

namespace {

// Cyclic Jacobi on a real symmetric matrix stored row-major in `a` (n*n).
// If `v` is non-null it accumulates the rotations (columns become the
// eigenvectors). Converges when the off-diagonal Frobenius mass drops
// below 1e-13; quadratic convergence makes the final mass much smaller.
void jacobi_real_symmetric(std::vector<double>& a, int n, std::vector<double>* v) {
  constexpr double kOffMassTol = 1e-13;
  constexpr int kMaxSweeps = 100;

  auto at = [&](int i, int j) -> double& { return a[static_cast<std::size_t>(i) * n + j]; };

  if (v) {
    v->assign(static_cast<std::size_t>(n) * n, 0.0);
    for (int i = 0; i < n; ++i) (*v)[static_cast<std::size_t>(i) * n + i] = 1.0;
  }

  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    double off2 = 0.0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) off2 += 2.0 * at(i, j) * at(i, j);
    if (std::sqrt(off2) < kOffMassTol) return;

    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const double apq = at(p, q);
        if (apq == 0.0) continue;
        const double app = at(p, p);
        const double aqq = at(q, q);
        const double tau = (aqq - app) / (2.0 * apq);
        // tan of the rotation angle, the root of t^2 + 2*tau*t - 1 = 0
        // with the smaller magnitude.
        double t;
        if (std::abs(tau) > 1e150) {
          t = 0.5 / tau;
        } else {
          t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        }
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;

        for (int k = 0; k < n; ++k) {
          const double akp = at(k, p);
          const double akq = at(k, q);
          at(k, p) = c * akp - s * akq;
          at(k, q) = s * akp + c * akq;
        }
        for (int k = 0; k < n; ++k) {
          const double apk = at(p, k);
          const double aqk = at(q, k);
          at(p, k) = c * apk - s * aqk;
          at(q, k) = s * apk + c * aqk;
        }
        if (v) {
          for (int k = 0; k < n; ++k) {
            double& vkp = (*v)[static_cast<std::size_t>(k) * n + p];
            double& vkq = (*v)[static_cast<std::size_t>(k) * n + q];
            const double tp = vkp, tq = vkq;
            vkp = c * tp - s * tq;
            vkq = s * tp + c * tq;
          }
        }
      }
    }
  }
  throw ValidationError("Jacobi eigensolver did not converge");
}

// Real symmetric embedding of the Hermitian matrix (A + A^dagger)/2.
std::vector<double> embed(const Matrix& h) {
  const int n = h.dim();
  const int m = 2 * n;
  std::vector<double> e(static_cast<std::size_t>(m) * m, 0.0);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const cxd hij = 0.5 * (h(i, j) + std::conj(h(j, i)));
      const double re = hij.real(), im = hij.imag();
      e[static_cast<std::size_t>(i) * m + j] = re;
      e[static_cast<std::size_t>(i) * m + (j + n)] = -im;
      e[static_cast<std::size_t>(i + n) * m + j] = im;
      e[static_cast<std::size_t>(i + n) * m + (j + n)] = re;
    }
  }
  return e;
}

}  // namespace

std::vector<double> eigvalsh(const Matrix& h) {
  const int n = h.dim();
  if (n == 0) return {};
  const int m = 2 * n;
  std::vector<double> e = embed(h);
  jacobi_real_symmetric(e, m, nullptr);
  std::vector<double> diag(m);
  for (int i = 0; i < m; ++i) diag[i] = e[static_cast<std::size_t>(i) * m + i];
  std::sort(diag.begin(), diag.end());
  std::vector<double> out(n);
  for (int k = 0; k < n; ++k) out[k] = 0.5 * (diag[2 * k] + diag[2 * k + 1]);
  return out;
}

EighResult eigh(const Matrix& h) {
  const int n = h.dim();
  EighResult res;
  if (n == 0) return res;
  const int m = 2 * n;
  std::vector<double> e = embed(h);
  std::vector<double> v;
  jacobi_real_symmetric(e, m, &v);

  std::vector<int> order(m);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return e[static_cast<std::size_t>(a) * m + a] < e[static_cast<std::size_t>(b) * m + b];
  });
  std::vector<double> vals(m);
  for (int k = 0; k < m; ++k) vals[k] = e[static_cast<std::size_t>(order[k]) * m + order[k]];

  // Column col of v, folded back to a complex candidate vector u + i w.
  auto candidate = [&](int col) {
    std::vector<cxd> c(n);
    for (int i = 0; i < n; ++i) {
      c[i] = cxd(v[static_cast<std::size_t>(i) * m + col],
                 v[static_cast<std::size_t>(i + n) * m + col]);
    }
    return c;
  };
  auto inner = [&](const std::vector<cxd>& a, const std::vector<cxd>& b) {
    cxd s = 0.0;
    for (int i = 0; i < n; ++i) s += std::conj(a[i]) * b[i];
    return s;
  };
  auto norm2 = [&](const std::vector<cxd>& a) {
    double s = 0.0;
    for (const auto& x : a) s += std::norm(x);
    return s;
  };

  // The doubled spectrum is exactly pairwise degenerate up to solver noise,
  // so chained clusters always have even size.
  constexpr double kClusterTol = 1e-11;
  res.values.reserve(n);
  res.vectors.reserve(n);
  int lo = 0;
  while (lo < m) {
    int hi = lo + 1;
    while (hi < m && vals[hi] - vals[hi - 1] <= kClusterTol) ++hi;
    const int count = hi - lo;
    const int want = count / 2;

    std::vector<std::vector<cxd>> residuals;
    residuals.reserve(count);
    for (int k = lo; k < hi; ++k) residuals.push_back(candidate(order[k]));

    std::vector<std::vector<cxd>> accepted;
    while (static_cast<int>(accepted.size()) < want) {
      int best = -1;
      double best_norm = -1.0;
      for (int k = 0; k < count; ++k) {
        const double nk = norm2(residuals[k]);
        if (nk > best_norm) {
          best_norm = nk;
          best = k;
        }
      }
      std::vector<cxd> picked = residuals[best];
      const double nrm = std::sqrt(best_norm);
      for (auto& x : picked) x /= nrm;
      for (auto& r : residuals) {
        const cxd ov = inner(picked, r);
        for (int i = 0; i < n; ++i) r[i] -= ov * picked[i];
      }
      accepted.push_back(std::move(picked));
    }

    for (int k = 0; k < want; ++k) {
      res.values.push_back(0.5 * (vals[lo + 2 * k] + vals[lo + 2 * k + 1]));
      res.vectors.push_back(std::move(accepted[k]));
    }
    lo = hi;
  }
  return res;
}

Matrix sqrt_psd(const Matrix& h) {
  const EighResult eg = eigh(h);
  const int n = h.dim();
  Matrix out(n);
  for (int k = 0; k < n; ++k) {
    double lam = eg.values[k];
    if (lam < -1e-8) throw ValidationError("sqrt_psd: matrix is not positive semidefinite");
    if (lam < 0.0) lam = 0.0;
    const double r = std::sqrt(lam);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) out(i, j) += r * eg.vectors[k][i] * std::conj(eg.vectors[k][j]);
  }
  return out;
}

}  // namespace resdist
