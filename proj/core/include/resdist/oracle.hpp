#pragma once

#include <array>
#include <cstdint>
#include <optional>

#include "resdist/gl.hpp"
#include "resdist/states.hpp"

namespace resdist {

/// Classical Bell-basis label: amp_bit distinguishes psi (|00> +- |11>,
/// amp_bit 0) from phi (|01> +- |10>, amp_bit 1); phase_bit is the sign.
/// Index order (psi+, psi-, phi+, phi-) = (0, 1, 2, 3).
struct BellLabel {
  int amp_bit = 0;
  int phase_bit = 0;

  int index() const { return 2 * amp_bit + phase_bit; }
  static BellLabel from_index(int idx) { return BellLabel{(idx >> 1) & 1, idx & 1}; }

  friend bool operator==(const BellLabel&, const BellLabel&) = default;
};

/// Deterministic label dynamics of one step-B pair:
///   (a1, b1)(a2, b2) -> first pair (a1, b1 ^ b2), failure iff a1 ^ a2 = 1.
struct LabelStepB {
  bool fail = false;
  BellLabel first;
};
LabelStepB label_step_b(BellLabel first, BellLabel second);

/// Exact 16-dimensional density-matrix simulation of step B: bilateral
/// CNOTs on rho (x) rho, computational-basis measurement of the second pair,
/// post-selection on equal outcomes. Agrees with the analytic step_b map to
/// machine precision.
StepBOutcome exact_step_b(const BellDiagonalState& s);

/// Circuit core of step B on an arbitrary two-pair input (qubit order
/// A, B, A', B'). `accepted` / `residual` are the normalized states of the
/// unmeasured pair on the equal / unequal branch; a branch of probability
/// below kNoFailThreshold is left as the zero matrix.
struct RawStepB {
  double p_fail = 0.0;
  Matrix accepted;
  Matrix residual;
};
RawStepB exact_step_b_raw(const Matrix& rho16);

/// Exact 64-dimensional simulation of step P: Hadamards on all six qubits,
/// two bilateral CNOTs, computational-basis measurement of both primed
/// pairs, the conditional Z (x) Z correction on the double-disagree outcome
/// class, Hadamards back. Outcomes are averaged per measurement class;
/// branch_main carries the outcome-averaged Bell weights (the Z (x) Z
/// correction is a phase on Bell states, to which these are insensitive)
/// and q_main is the probability of not landing in the double-disagree
/// class. Matches the analytic step_p cubics.
StepPOutcome exact_step_p(const BellDiagonalState& s);

/// Seeded Monte-Carlo run of the step-B label dynamics.
struct McReport {
  long long n_samples = 0;
  std::uint64_t seed = 0;
  long long failures = 0;
  double empirical_p_fail = 0.0;
  double p_fail_std_error = 0.0;  // binomial sqrt(p(1-p)/n)
  std::array<long long, 4> residual_counts{};
  std::optional<BellDiagonalState> empirical_residual;  // absent when no failures
  std::array<double, 4> residual_std_errors{};          // multinomial, over failures

  friend bool operator==(const McReport&, const McReport&) = default;
};

McReport mc_step_b(const BellDiagonalState& s, long long n, std::uint64_t seed);

}  // namespace resdist
