#include "resdist/oracle.hpp"

#include <cmath>

#include "resdist/errors.hpp"
#include "resdist/rng.hpp"

namespace resdist {

namespace {

// Qubit 0 is the most significant bit of the basis index.
Matrix single_qubit_gate(int n_qubits, int qubit, const Matrix& g) {
  Matrix out = Matrix::identity(1);
  for (int q = 0; q < n_qubits; ++q)
    out = kron(out, q == qubit ? g : Matrix::identity(2));
  return out;
}

Matrix hadamard2() {
  const double s = 1.0 / std::sqrt(2.0);
  Matrix h(2);
  h(0, 0) = s; h(0, 1) = s;
  h(1, 0) = s; h(1, 1) = -s;
  return h;
}

Matrix cnot_gate(int n_qubits, int control, int target) {
  const int d = 1 << n_qubits;
  const int cbit = 1 << (n_qubits - 1 - control);
  const int tbit = 1 << (n_qubits - 1 - target);
  Matrix u(d);
  for (int i = 0; i < d; ++i) {
    const int j = (i & cbit) ? (i ^ tbit) : i;
    u(j, i) = 1.0;
  }
  return u;
}

// Projector onto the computational outcome `bits` of the trailing
// `n_measured` qubits (everything after the first pair).
Matrix outcome_projector(int n_qubits, int bits, int n_measured) {
  const int d = 1 << n_qubits;
  Matrix p(d);
  const int mask = (1 << n_measured) - 1;
  for (int i = 0; i < d; ++i)
    if ((i & mask) == bits) p(i, i) = 1.0;
  return p;
}

// Trace out everything but the leading two qubits.
Matrix reduce_to_first_pair(const Matrix& rho) {
  const int rest = rho.dim() / 4;
  Matrix red(4);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      cxd sum = 0.0;
      for (int t = 0; t < rest; ++t) sum += rho(i * rest + t, j * rest + t);
      red(i, j) = sum;
    }
  return red;
}

BellDiagonalState state_from_matrix(const Matrix& rho4) {
  const auto w = bell_weights(rho4);
  return BellDiagonalState(w[0], w[1], w[2], w[3]);
}

}  // namespace

LabelStepB label_step_b(BellLabel first, BellLabel second) {
  LabelStepB out;
  out.fail = (first.amp_bit ^ second.amp_bit) != 0;
  out.first = BellLabel{first.amp_bit, first.phase_bit ^ second.phase_bit};
  return out;
}

RawStepB exact_step_b_raw(const Matrix& rho16) {
  if (rho16.dim() != 16) throw ValidationError("exact_step_b_raw: expected a 16-dim state");
  const Matrix u = cnot_gate(4, 0, 2) * cnot_gate(4, 1, 3);
  const Matrix evolved = u * rho16 * u.adjoint();

  Matrix acc(4), fail(4);
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) {
      const Matrix p = outcome_projector(4, 2 * a + b, 2);
      const Matrix red = reduce_to_first_pair(p * evolved * p);
      if (a == b)
        acc += red;
      else
        fail += red;
    }

  RawStepB out;
  out.p_fail = fail.trace().real();
  const double p_keep = acc.trace().real();
  out.accepted = Matrix(4);
  out.residual = Matrix(4);
  if (p_keep >= kNoFailThreshold) out.accepted = (1.0 / p_keep) * acc;
  if (out.p_fail >= kNoFailThreshold) out.residual = (1.0 / out.p_fail) * fail;
  return out;
}

StepBOutcome exact_step_b(const BellDiagonalState& s) {
  const Matrix rho4 = to_density_matrix(s).matrix();
  const RawStepB raw = exact_step_b_raw(kron(rho4, rho4));
  StepBOutcome out;
  out.p_fail = raw.p_fail;
  out.accepted = state_from_matrix(raw.accepted);
  if (raw.p_fail >= kNoFailThreshold) out.residual = state_from_matrix(raw.residual);
  return out;
}

StepPOutcome exact_step_p(const BellDiagonalState& s) {
  const Matrix rho4 = to_density_matrix(s).matrix();
  const Matrix h = hadamard2();

  Matrix state = kron(kron(rho4, rho4), rho4);  // qubits A,B,A',B',A'',B''
  Matrix h_all = Matrix::identity(64);
  for (int q = 0; q < 6; ++q) h_all = single_qubit_gate(6, q, h) * h_all;
  state = h_all * state * h_all.adjoint();

  const Matrix u = cnot_gate(6, 0, 2) * cnot_gate(6, 0, 4) * cnot_gate(6, 1, 3) * cnot_gate(6, 1, 5);
  state = u * state * u.adjoint();

  Matrix h_pair = kron(h, h);
  Matrix zz(4);
  zz(0, 0) = 1.0; zz(1, 1) = -1.0; zz(2, 2) = -1.0; zz(3, 3) = 1.0;

  Matrix averaged(4);
  double p_double_disagree = 0.0;
  for (int ap = 0; ap < 2; ++ap)
    for (int bp = 0; bp < 2; ++bp)
      for (int app = 0; app < 2; ++app)
        for (int bpp = 0; bpp < 2; ++bpp) {
          const int bits = (ap << 3) | (bp << 2) | (app << 1) | bpp;
          const Matrix proj = outcome_projector(6, bits, 4);
          Matrix red = reduce_to_first_pair(proj * state * proj);
          const double prob = red.trace().real();
          if ((ap != bp) && (app != bpp)) {
            red = zz * red * zz;
            p_double_disagree += prob;
          }
          red = h_pair * red * h_pair;
          averaged += red;
        }

  StepPOutcome out;
  out.branch_main = state_from_matrix(averaged);
  const auto w = out.branch_main.weights();
  out.branch_swapped = BellDiagonalState(w[1], w[0], w[3], w[2]);
  out.q_main = 1.0 - p_double_disagree;
  return out;
}

McReport mc_step_b(const BellDiagonalState& s, long long n, std::uint64_t seed) {
  if (n < 1) throw DomainError("mc_step_b: sample count must be >= 1");
  McReport rep;
  rep.n_samples = n;
  rep.seed = seed;

  const auto w = s.weights();
  const double c0 = w[0];
  const double c1 = c0 + w[1];
  const double c2 = c1 + w[2];
  Xorshift64Star rng(seed);
  auto draw = [&]() {
    const double u = rng.next_double();
    if (u < c0) return BellLabel::from_index(0);
    if (u < c1) return BellLabel::from_index(1);
    if (u < c2) return BellLabel::from_index(2);
    return BellLabel::from_index(3);
  };

  for (long long k = 0; k < n; ++k) {
    const BellLabel l1 = draw();
    const BellLabel l2 = draw();
    const LabelStepB step = label_step_b(l1, l2);
    if (step.fail) {
      ++rep.failures;
      ++rep.residual_counts[step.first.index()];
    }
  }

  const double nd = static_cast<double>(n);
  rep.empirical_p_fail = static_cast<double>(rep.failures) / nd;
  rep.p_fail_std_error =
      std::sqrt(rep.empirical_p_fail * (1.0 - rep.empirical_p_fail) / nd);
  if (rep.failures > 0) {
    const double fd = static_cast<double>(rep.failures);
    std::array<double, 4> freq{};
    for (int i = 0; i < 4; ++i) {
      freq[i] = static_cast<double>(rep.residual_counts[i]) / fd;
      rep.residual_std_errors[i] = std::sqrt(freq[i] * (1.0 - freq[i]) / fd);
    }
    rep.empirical_residual = BellDiagonalState(freq[0], freq[1], freq[2], freq[3]);
  }
  return rep;
}

}  // namespace resdist
