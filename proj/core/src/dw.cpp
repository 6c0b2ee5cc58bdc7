#include "resdist/dw.hpp"

#include <cmath>
#include <utility>
#include <vector>

#include "resdist/errors.hpp"

namespace resdist {

namespace {

double plog2p(double p) { return p > 0.0 ? p * std::log2(p) : 0.0; }

double weight_entropy(const BellDiagonalState& s) {
  const auto w = s.weights();
  return shannon(ProbVec(std::vector<double>(w.begin(), w.end())));
}

}  // namespace

MeasuredEnsembles measure_purification(const DensityMatrix& rho_ab, int dim_a, int dim_b) {
  if (dim_a <= 0 || dim_b <= 0 || dim_a * dim_b != rho_ab.dim())
    throw ValidationError("measure_purification: dimensions do not match the state");
  const int d = rho_ab.dim();
  const int dim_e = d;  // purify pads the environment to dim(rho)
  const PureState psi = purify(rho_ab);
  const auto& amp = psi.amplitudes();  // index ((a * dim_b + b) * dim_e + e)

  std::vector<double> probs;
  std::vector<DensityMatrix> b_states, e_states;
  for (int a = 0; a < dim_a; ++a) {
    // phi^x amplitudes on B x E for measurement outcome x = a
    std::vector<cxd> phi(static_cast<std::size_t>(dim_b) * dim_e);
    double p = 0.0;
    for (int b = 0; b < dim_b; ++b)
      for (int e = 0; e < dim_e; ++e) {
        const cxd v = amp[static_cast<std::size_t>((a * dim_b + b)) * dim_e + e];
        phi[static_cast<std::size_t>(b) * dim_e + e] = v;
        p += std::norm(v);
      }
    if (p < 1e-15) continue;  // outcome never occurs
    const double inv = 1.0 / p;
    Matrix rho_b(dim_b), rho_e(dim_e);
    for (int b = 0; b < dim_b; ++b)
      for (int b2 = 0; b2 < dim_b; ++b2) {
        cxd sum = 0.0;
        for (int e = 0; e < dim_e; ++e)
          sum += phi[static_cast<std::size_t>(b) * dim_e + e] *
                 std::conj(phi[static_cast<std::size_t>(b2) * dim_e + e]);
        rho_b(b, b2) = sum * inv;
      }
    for (int e = 0; e < dim_e; ++e)
      for (int e2 = 0; e2 < dim_e; ++e2) {
        cxd sum = 0.0;
        for (int b = 0; b < dim_b; ++b)
          sum += phi[static_cast<std::size_t>(b) * dim_e + e] *
                 std::conj(phi[static_cast<std::size_t>(b) * dim_e + e2]);
        rho_e(e, e2) = sum * inv;
      }
    probs.push_back(p);
    b_states.push_back(DensityMatrix::trusted(std::move(rho_b)));
    e_states.push_back(DensityMatrix::trusted(std::move(rho_e)));
  }
  ProbVec pv{probs};
  return MeasuredEnsembles{CqEnsemble{pv, std::move(b_states)},
                           CqEnsemble{pv, std::move(e_states)}};
}

DwRates dw_rates_from_state(const DensityMatrix& rho_ab, int dim_a, int dim_b) {
  const MeasuredEnsembles ens = measure_purification(rho_ab, dim_a, dim_b);
  const double ixb = mutual_info_cq(ens.b_side);
  const double ixe = mutual_info_cq(ens.e_side);
  return DwRates{ixb - ixe, ixe};
}

double isotropic_dw_rand(double p) {
  if (p < 0.0 || p > 1.0) throw DomainError("isotropic_dw_rand: p outside [0, 1]");
  const double hi = (1.0 + 3.0 * p) / 4.0;
  const double lo = (1.0 - p) / 4.0;
  return -plog2p(hi) - 3.0 * plog2p(lo) - binary_entropy((1.0 + p) / 2.0);
}

double randomness_curve(double f) {
  const BellDiagonalState s = isotropic(f);
  const double coherent_info = 1.0 - weight_entropy(s);
  if (coherent_info > 0.0) return isotropic_dw_rand(isotropic_p_from_f(f));
  return 2.0 - weight_entropy(s);
}

double key_threshold() {
  auto excess = [](double f) { return weight_entropy(isotropic(f)) - 1.0; };
  double lo = 0.25, hi = 1.0;  // excess(lo) = 1 > 0, excess(hi) = -1 < 0
  while (hi - lo > 1e-10) {
    const double mid = 0.5 * (lo + hi);
    (excess(mid) > 0.0 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

Toy1Yields toy1_yields(double a_sq) {
  if (a_sq < 0.0 || a_sq > 1.0) throw DomainError("toy1_yields: a_sq outside [0, 1]");
  const double b_sq = 1.0 - a_sq;
  Toy1Yields out;
  out.p_ent = 2.0 * a_sq * b_sq;
  out.p_00 = a_sq * a_sq;
  out.p_11 = b_sq * b_sq;
  // 'ent': one maximally entangled pair plus two bits of private randomness;
  // '00': four bits of private randomness; '11': two bits of activity each.
  out.ebits = out.p_ent;
  out.rand_bits = 2.0 * out.p_ent + 4.0 * out.p_00;
  out.activity_bits = 4.0 * out.p_11;
  return out;
}

}  // namespace resdist
