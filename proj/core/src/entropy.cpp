#include "resdist/entropy.hpp"

#include <algorithm>
#include <cmath>

#include "resdist/errors.hpp"

namespace resdist {

namespace {

double plog2p(double p) { return p > 0.0 ? p * std::log2(p) : 0.0; }

double entropy_of_spectrum(const std::vector<double>& ev) {
  double h = 0.0;
  for (double lam : ev) {
    if (lam <= 0.0) continue;  // negatives within tolerance were clamped by the caller
    h -= plog2p(lam);
  }
  return h;
}

}  // namespace

ProbVec::ProbVec(std::vector<double> entries) : p_(std::move(entries)) {
  if (p_.empty()) throw ValidationError("ProbVec: empty distribution");
  double sum = 0.0;
  for (double& v : p_) {
    if (v < 0.0) {
      if (v < -1e-12) throw ValidationError("ProbVec: negative entry beyond tolerance");
      v = 0.0;
    }
    if (v > 1.0) {
      if (v > 1.0 + 1e-12) throw ValidationError("ProbVec: entry above one beyond tolerance");
      v = 1.0;
    }
    sum += v;
  }
  if (std::abs(sum - 1.0) > 1e-9) throw ValidationError("ProbVec: entries do not sum to one");
}

double shannon(const ProbVec& p) {
  double h = 0.0;
  for (double v : p.entries()) h -= plog2p(v);
  return h;
}

double binary_entropy(double q) {
  if (q < 0.0 || q > 1.0) {
    if (q < -1e-12 || q > 1.0 + 1e-12) throw DomainError("binary_entropy: q outside [0, 1]");
    q = std::clamp(q, 0.0, 1.0);
  }
  return -plog2p(q) - plog2p(1.0 - q);
}

double von_neumann(const DensityMatrix& rho) {
  if (rho.matrix().hermiticity_defect() > 1e-10)
    throw ValidationError("von_neumann: state is not Hermitian within 1e-10");
  std::vector<double> ev = eigvalsh(rho.matrix());
  for (double& lam : ev) {
    if (lam < -1e-8) throw ValidationError("von_neumann: negative eigenvalue beyond 1e-8");
    if (lam < 0.0) lam = 0.0;
  }
  return entropy_of_spectrum(ev);
}

double conditional_entropy(const DensityMatrix& rho_ab, int dim_a, int dim_b) {
  if (dim_a <= 0 || dim_b <= 0 || dim_a * dim_b != rho_ab.dim())
    throw ValidationError("conditional_entropy: dimensions do not match the state");
  const std::array<int, 2> dims{dim_a, dim_b};
  const std::array<int, 1> keep_b{1};
  const DensityMatrix rho_b = partial_trace(rho_ab, dims, keep_b);
  return von_neumann(rho_ab) - von_neumann(rho_b);
}

double mutual_info_cq(const CqEnsemble& e) {
  if (e.probs.size() != e.states.size())
    throw ValidationError("mutual_info_cq: probability and state counts differ");
  if (e.states.empty()) throw ValidationError("mutual_info_cq: empty ensemble");
  const int d = e.states.front().dim();
  for (const auto& s : e.states)
    if (s.dim() != d) throw ValidationError("mutual_info_cq: ensemble dimensions differ");

  Matrix avg(d);
  double cond = 0.0;
  for (std::size_t k = 0; k < e.states.size(); ++k) {
    const double p = e.probs[k];
    if (p == 0.0) continue;
    avg += p * e.states[k].matrix();
    cond += p * von_neumann(e.states[k]);
  }
  const double mi = von_neumann(DensityMatrix::trusted(std::move(avg))) - cond;
  return std::max(mi, 0.0);
}

}  // namespace resdist
