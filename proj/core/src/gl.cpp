#include "resdist/gl.hpp"

#include <algorithm>
#include <cmath>

#include "resdist/entropy.hpp"
#include "resdist/errors.hpp"

namespace resdist {

namespace {

double weight_entropy(const BellDiagonalState& s) {
  const auto w = s.weights();
  return shannon(ProbVec(std::vector<double>(w.begin(), w.end())));
}

// K = max{-S(A|B), 0} = max{1 - H(weights), 0} for Bell-diagonal states.
double key_rate_of(const BellDiagonalState& s) {
  return std::max(0.0, 1.0 - weight_entropy(s));
}

struct SurvivalModel {
  double shrink;   // fraction of copies remaining per completed round: 1/6 GL, 1/2 BBPSSW
  bool step_p_between;
};

PipelineTrace run_pipeline(const BellDiagonalState& initial, int rounds, KeyMode mode,
                           const SurvivalModel& model) {
  if (rounds < 1) throw DomainError("pipeline: rounds must be >= 1");
  PipelineTrace trace;
  trace.rounds.reserve(rounds);

  BellDiagonalState state = initial;
  double survival = 1.0;  // prod_{l<k} (1 - p_l) * shrink
  for (int k = 1; k <= rounds; ++k) {
    PipelineRound round;
    round.theta = state.theta();
    const StepBOutcome b = step_b(state);
    round.p_fail = b.p_fail;
    round.accepted = b.accepted;
    round.residual = b.residual;
    round.rand_rate = b.residual ? local_randomness(*b.residual) : 0.0;
    round.key_rate = key_rate_of(b.accepted);

    trace.rate_rand += 0.5 * survival * b.p_fail * round.rand_rate;
    const double keep = (k == 1 || mode == KeyMode::corrected) ? 1.0 - b.p_fail : 1.0;
    trace.key_lb += 0.5 * survival * keep * round.key_rate;

    trace.rounds.push_back(round);
    trace.rate_rand_by_round.push_back(trace.rate_rand);
    trace.key_lb_by_round.push_back(trace.key_lb);

    if (k == rounds) break;
    survival *= (1.0 - b.p_fail) * model.shrink;
    state = model.step_p_between ? step_p(b.accepted).branch_main : b.accepted;
  }
  return trace;
}

}  // namespace

StepBOutcome step_b(const BellDiagonalState& s) {
  const double w = s.w, x = s.x, y = s.y, z = s.z;
  StepBOutcome out;
  const double n = (w + x) * (w + x) + (y + z) * (y + z);
  out.accepted = BellDiagonalState((w * w + x * x) / n, 2.0 * w * x / n,
                                   (y * y + z * z) / n, 2.0 * y * z / n);
  out.p_fail = 2.0 * (w + x) * (y + z);
  if (out.p_fail >= kNoFailThreshold) {
    // u : v = (wy + xz) : (wz + xy); normalizing by the weight sum keeps the
    // symmetric case u == v exact.
    const double a = w * y + x * z;
    const double b = w * z + x * y;
    const double u = a / (2.0 * (a + b));
    const double v = b / (2.0 * (a + b));
    out.residual = BellDiagonalState(u, v, u, v);
  }
  return out;
}

StepPOutcome step_p(const BellDiagonalState& s) {
  const double a = s.w, b = s.x, c = s.y, d = s.z;
  const double w = a * a * a + 2 * a * a * b + a * b * b + 3 * a * c * c + 2 * b * c * c +
                   a * d * d + 4 * a * c * d + 2 * b * c * d;
  const double x = b * b * b + a * a * b + 2 * a * b * b + 3 * b * d * d + b * c * c +
                   2 * a * d * d + 4 * b * c * d + 2 * a * c * d;
  const double y = c * c * c + 2 * c * c * d + c * d * d + 3 * a * a * c + 2 * a * a * d +
                   b * b * c + 4 * a * b * c + 2 * a * b * d;
  const double z = d * d * d + c * c * d + 2 * c * d * d + 3 * b * b * d + 2 * b * b * c +
                   a * a * d + 4 * a * b * d + 2 * a * b * c;
  const double q = 1.0 - (a * a + c * c) * (b + d) - (b * b + d * d) * (a + c) -
                   2 * a * b * (c + d) - 2 * c * d * (a + b);
  StepPOutcome out;
  out.branch_main = BellDiagonalState(w, x, y, z);
  out.branch_swapped = BellDiagonalState(x, w, z, y);
  out.q_main = std::clamp(q, 0.0, 1.0);
  return out;
}

double local_randomness(const BellDiagonalState& s) {
  // S(A|B) = H(weights) - 1 for Bell-diagonal states.
  const double cond = weight_entropy(s) - 1.0;
  return std::clamp(1.0 - std::max(cond, 0.0), 0.0, 1.0);
}

double local_randomness(const DensityMatrix& rho_ab) {
  if (rho_ab.dim() != 4) throw ValidationError("local_randomness: expected a two-qubit state");
  const double cond = conditional_entropy(rho_ab, 2, 2);
  return std::clamp(1.0 - std::max(cond, 0.0), 0.0, 1.0);
}

double theta_step(double theta) {
  if (theta < 0.0 || theta > 0.25) throw DomainError("theta_step: theta outside [0, 0.25]");
  const double one_m = 1.0 - 2.0 * theta;
  const double bracket = one_m * one_m - 2.0 * theta * theta;
  const double t2 = theta * theta;
  const double num = t2 * (3.0 * bracket * bracket + 4.0 * t2 * t2);
  const double sq = one_m * one_m;
  return num / (sq * sq * sq);
}

double theta_step_uncorrected(double theta) {
  if (theta < 0.0 || theta > 0.25)
    throw DomainError("theta_step_uncorrected: theta outside [0, 0.25]");
  const double one_m = 1.0 - 2.0 * theta;
  const double bracket = one_m * one_m - 2.0 * theta * theta;
  const double t2 = theta * theta;
  const double num = t2 * (3.0 * bracket * bracket + 4.0 * t2 * t2);
  const double alt = 1.0 - 2.0 * theta * theta;
  const double sq = alt * alt;
  return num / (sq * sq * sq);
}

PipelineTrace gl_pipeline(const BellDiagonalState& initial, int rounds, KeyMode mode) {
  return run_pipeline(initial, rounds, mode, {1.0 / 6.0, true});
}

PipelineTrace bbpssw_pipeline(const BellDiagonalState& initial, int rounds, KeyMode mode) {
  return run_pipeline(initial, rounds, mode, {0.5, false});
}

}  // namespace resdist
