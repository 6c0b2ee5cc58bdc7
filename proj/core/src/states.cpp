#include "resdist/states.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>

#include "resdist/errors.hpp"

namespace resdist {

namespace {

double clamp_weight(double v, const char* what) {
  if (v < 0.0) {
    if (v < -1e-12) throw ValidationError(std::string(what) + ": negative weight");
    return 0.0;
  }
  return v;
}

}  // namespace

BellDiagonalState::BellDiagonalState(double w_, double x_, double y_, double z_)
    : w(clamp_weight(w_, "BellDiagonalState")),
      x(clamp_weight(x_, "BellDiagonalState")),
      y(clamp_weight(y_, "BellDiagonalState")),
      z(clamp_weight(z_, "BellDiagonalState")) {
  const double sum = w + x + y + z;
  if (std::abs(sum - 1.0) > 1e-12)
    throw ValidationError("BellDiagonalState: weights do not sum to one");
}

BellDiagonalState isotropic(double f) {
  if (f < 0.0 || f > 1.0) throw DomainError("isotropic: f outside [0, 1]");
  const double rest = (1.0 - f) / 3.0;
  return BellDiagonalState(f, rest, rest, rest);
}

double isotropic_p_from_f(double f) {
  if (f < 0.0 || f > 1.0) throw DomainError("isotropic_p_from_f: f outside [0, 1]");
  return (4.0 * f - 1.0) / 3.0;
}

DensityMatrix::DensityMatrix(Matrix m) : m_(std::move(m)) {
  if (m_.dim() == 0) throw ValidationError("DensityMatrix: empty matrix");
  if (m_.hermiticity_defect() > 1e-10)
    throw ValidationError("DensityMatrix: not Hermitian within 1e-10");
  if (std::abs(m_.trace() - cxd(1.0)) > 1e-10)
    throw ValidationError("DensityMatrix: trace differs from one beyond 1e-10");
  const std::vector<double> ev = eigvalsh(m_);
  if (ev.front() < -1e-8)
    throw ValidationError("DensityMatrix: negative eigenvalue beyond 1e-8");
}

DensityMatrix DensityMatrix::trusted(Matrix m) {
  DensityMatrix out;
  out.m_ = std::move(m);
  return out;
}

PureState::PureState(std::vector<cxd> amplitudes) : amp_(std::move(amplitudes)) {
  double n2 = 0.0;
  for (const auto& a : amp_) n2 += std::norm(a);
  if (std::abs(std::sqrt(n2) - 1.0) > 1e-12)
    throw ValidationError("PureState: amplitudes are not unit norm");
}

DensityMatrix PureState::projector() const {
  const int d = dim();
  Matrix m(d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) m(i, j) = amp_[i] * std::conj(amp_[j]);
  return DensityMatrix::trusted(std::move(m));
}

PureState bell_state(int label) {
  if (label < 0 || label > 3) throw DomainError("bell_state: label outside 0..3");
  const double s = 1.0 / std::sqrt(2.0);
  std::vector<cxd> amp(4, 0.0);
  switch (label) {
    case 0: amp[0] = s; amp[3] = s; break;   // psi+
    case 1: amp[0] = s; amp[3] = -s; break;  // psi-
    case 2: amp[1] = s; amp[2] = s; break;   // phi+
    case 3: amp[1] = s; amp[2] = -s; break;  // phi-
  }
  return PureState(std::move(amp));
}

DensityMatrix to_density_matrix(const BellDiagonalState& s) {
  Matrix m(4);
  m(0, 0) = m(3, 3) = 0.5 * (s.w + s.x);
  m(0, 3) = m(3, 0) = 0.5 * (s.w - s.x);
  m(1, 1) = m(2, 2) = 0.5 * (s.y + s.z);
  m(1, 2) = m(2, 1) = 0.5 * (s.y - s.z);
  return DensityMatrix::trusted(std::move(m));
}

std::array<double, 4> bell_weights(const Matrix& rho4) {
  if (rho4.dim() != 4) throw ValidationError("bell_weights: expected a 4x4 matrix");
  std::array<double, 4> out{};
  for (int label = 0; label < 4; ++label) {
    const auto& amp = bell_state(label).amplitudes();
    cxd v = 0.0;
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) v += std::conj(amp[i]) * rho4(i, j) * amp[j];
    out[label] = v.real();
  }
  return out;
}

DensityMatrix partial_trace(const DensityMatrix& rho, std::span<const int> dims,
                            std::span<const int> keep) {
  const int n = static_cast<int>(dims.size());
  long long prod = 1;
  for (int d : dims) {
    if (d <= 0) throw ValidationError("partial_trace: nonpositive subsystem dimension");
    prod *= d;
  }
  if (prod != rho.dim())
    throw ValidationError("partial_trace: subsystem dimensions do not factor the state");
  std::vector<bool> kept(n, false);
  for (int k : keep) {
    if (k < 0 || k >= n) throw ValidationError("partial_trace: keep index out of range");
    if (kept[k]) throw ValidationError("partial_trace: duplicate keep index");
    kept[k] = true;
  }

  int dim_keep = 1, dim_tr = 1;
  for (int s = 0; s < n; ++s) (kept[s] ? dim_keep : dim_tr) *= dims[s];

  // strides of each subsystem in the full index
  std::vector<long long> stride(n, 1);
  for (int s = n - 2; s >= 0; --s) stride[s] = stride[s + 1] * dims[s + 1];

  std::vector<int> keep_subsys, tr_subsys;
  for (int s = 0; s < n; ++s) (kept[s] ? keep_subsys : tr_subsys).push_back(s);

  auto expand = [&](long long packed, const std::vector<int>& subsys) {
    long long full = 0;
    for (int s = static_cast<int>(subsys.size()) - 1; s >= 0; --s) {
      const int d = dims[subsys[s]];
      full += (packed % d) * stride[subsys[s]];
      packed /= d;
    }
    return full;
  };

  Matrix out(dim_keep);
  for (long long i = 0; i < dim_keep; ++i) {
    const long long fi = expand(i, keep_subsys);
    for (long long j = 0; j < dim_keep; ++j) {
      const long long fj = expand(j, keep_subsys);
      cxd sum = 0.0;
      for (long long t = 0; t < dim_tr; ++t) {
        const long long ft = expand(t, tr_subsys);
        sum += rho.matrix()(static_cast<int>(fi + ft), static_cast<int>(fj + ft));
      }
      out(static_cast<int>(i), static_cast<int>(j)) = sum;
    }
  }
  return DensityMatrix::trusted(std::move(out));
}

PureState purify(const DensityMatrix& rho) {
  const int d = rho.dim();
  EighResult eg = eigh(rho.matrix());
  // descending eigenvalue order defines the environment basis
  std::reverse(eg.values.begin(), eg.values.end());
  std::reverse(eg.vectors.begin(), eg.vectors.end());

  std::vector<cxd> amp(static_cast<std::size_t>(d) * d, 0.0);
  double total = 0.0;
  for (int k = 0; k < d; ++k) {
    double lam = eg.values[k];
    if (lam < -1e-8) throw ValidationError("purify: state is not positive semidefinite");
    if (lam < 0.0) lam = 0.0;
    total += lam;
    const double r = std::sqrt(lam);
    for (int i = 0; i < d; ++i) amp[static_cast<std::size_t>(i) * d + k] = r * eg.vectors[k][i];
  }
  const double nrm = std::sqrt(total);
  for (auto& a : amp) a /= nrm;
  return PureState(std::move(amp));
}

double fidelity(const DensityMatrix& rho, const DensityMatrix& sigma) {
  if (rho.dim() != sigma.dim()) throw ValidationError("fidelity: dimension mismatch");
  const Matrix s = sqrt_psd(sigma.matrix());
  const Matrix g = s * rho.matrix() * s;
  double f = 0.0;
  for (double lam : eigvalsh(g)) f += std::sqrt(std::max(lam, 0.0));
  return std::clamp(f, 0.0, 1.0);
}

double trace_distance(const DensityMatrix& rho, const DensityMatrix& sigma) {
  if (rho.dim() != sigma.dim()) throw ValidationError("trace_distance: dimension mismatch");
  const Matrix diff = rho.matrix() - sigma.matrix();
  double td = 0.0;
  for (double lam : eigvalsh(diff)) td += std::abs(lam);
  return 0.5 * td;
}

}  // namespace resdist
