#pragma once

#include <optional>
#include <vector>

#include "resdist/states.hpp"

namespace resdist {

/// Below this failure probability the failed branch is treated as absent:
/// no residual state is produced and the round contributes zero randomness.
inline constexpr double kNoFailThreshold = 1e-15;

/// One step B (bit error correction): pair up copies, bilateral CNOT,
/// measure the second pair in the computational basis and keep the first
/// pair when the outcomes agree.
///
///   accepted = ((w^2+x^2)/N, 2wx/N, (y^2+z^2)/N, 2yz/N),
///   N        = (w+x)^2 + (y+z)^2,
///   residual = (u, v, u, v) with u : v = (wy+xz) : (wz+xy),
///   p_fail   = 2 (w+x)(y+z).
struct StepBOutcome {
  BellDiagonalState accepted;
  std::optional<BellDiagonalState> residual;  // absent when p_fail < kNoFailThreshold
  double p_fail = 0.0;
};

StepBOutcome step_b(const BellDiagonalState& s);

/// One step P (phase error correction) on trios. The kept copy ends up in
/// branch_main = (w, x, y, z) given by cubic polynomials in the input
/// weights with probability q_main, else in the swapped branch
/// (x, w, z, y). Both step-B images coincide for the two branches.
struct StepPOutcome {
  BellDiagonalState branch_main;
  BellDiagonalState branch_swapped;
  double q_main = 1.0;
};

StepPOutcome step_p(const BellDiagonalState& s);

/// Local private randomness rate of one party, R_A = log|A| - S(A|B)_+ with
/// S(A|B)_+ = max{S(A|B), 0}, clamped to [0, 1] for qubit A.
double local_randomness(const BellDiagonalState& s);
double local_randomness(const DensityMatrix& rho_ab);

/// Closed one-dimensional recursion for theta = (w+x)(y+z) across one
/// step B followed by one step P:
///
///   theta' = theta^2 [3((1-2 theta)^2 - 2 theta^2)^2 + 4 theta^4] / (1-2 theta)^6.
///
/// Fixed points are 0 and 1/4. Matches the composed step maps to machine
/// precision (see theta_step_uncorrected for the variant that does not).
double theta_step(double theta);

/// Same recursion with denominator (1 - 2 theta^2)^6 instead. This variant
/// does not satisfy the composition identity (at theta = 0.1204 it yields
/// 0.0156 where the composed maps give 0.0681); it is kept for
/// cross-checking the corrected form.
double theta_step_uncorrected(double theta);

/// Key-bound accounting. `corrected` applies the survival factor
/// (1 - p_fail(k)) to every round; `verbatim` keeps the uncorrected form in
/// which rounds k >= 2 omit that factor.
enum class KeyMode { corrected, verbatim };

struct PipelineRound {
  double theta = 0.0;   // (w+x)(y+z) of the state entering this step B
  double p_fail = 0.0;  // = 2 * theta
  BellDiagonalState accepted;
  std::optional<BellDiagonalState> residual;
  double rand_rate = 0.0;  // R^k of the residual (0 when absent)
  double key_rate = 0.0;   // K^k = max{-S(A|B), 0} of the accepted state
};

struct PipelineTrace {
  std::vector<PipelineRound> rounds;
  std::vector<double> rate_rand_by_round;  // cumulative after k rounds
  std::vector<double> key_lb_by_round;
  double rate_rand = 0.0;
  double key_lb = 0.0;
};

/// Alternates step B and step P starting with step B and stopping after the
/// r-th step B. Cumulative rates per input copy:
///
///   rate_rand(r) = (1/2) [ p1 R^1 + sum_{k=2..r} (prod_{l<k} (1-p_l)/6) p_k R^k ]
///   key_lb(r)    = (1/2) [ (1-p1) K^1 + sum_{k=2..r} (prod_{l<k} (1-p_l)/6) c_k K^k ]
///
/// with c_k = (1-p_k) in corrected mode and c_k = 1 in verbatim mode.
PipelineTrace gl_pipeline(const BellDiagonalState& initial, int rounds,
                          KeyMode mode = KeyMode::corrected);

/// Step-B-only variant (the BBPSSW recursion): per-round survival is
/// (1-p_l)/2 instead of (1-p_l)/6, and no step P is interleaved.
PipelineTrace bbpssw_pipeline(const BellDiagonalState& initial, int rounds,
                              KeyMode mode = KeyMode::corrected);

}  // namespace resdist
