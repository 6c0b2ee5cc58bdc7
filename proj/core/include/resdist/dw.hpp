#pragma once

#include "resdist/entropy.hpp"
#include "resdist/states.hpp"

namespace resdist {

/// Rate pair of the one-way key -> private-randomness split:
/// r_key = I(X;B) - I(X;E) (raw, may be negative; clamping is the caller's
/// choice so that r_key + r_rand = I(X;B) holds exactly), r_rand = I(X;E).
struct DwRates {
  double r_key = 0.0;
  double r_rand = 0.0;
};

/// Purifies rho_AB to an environment E, measures A in the computational
/// basis and evaluates the rate split on the induced ensembles
/// {P(x), tr_E phi^x} and {P(x), tr_B phi^x}.
DwRates dw_rates_from_state(const DensityMatrix& rho_ab, int dim_a, int dim_b);

/// Classical-quantum ensembles induced by measuring A of the purification of
/// rho_AB in the computational basis. Exposed for cross-checks.
struct MeasuredEnsembles {
  CqEnsemble b_side;
  CqEnsemble e_side;
};
MeasuredEnsembles measure_purification(const DensityMatrix& rho_ab, int dim_a, int dim_b);

/// Closed form of the residual randomness rate in the key-positive regime of
/// the isotropic family, as a function of the mixing parameter p
/// (f = (1+3p)/4):
///
///   -(1+3p)/4 log2((1+3p)/4) - 3(1-p)/4 log2((1-p)/4) - h((1+p)/2).
double isotropic_dw_rand(double p);

/// Piecewise residual randomness of the isotropic state: I(X;E) via
/// isotropic_dw_rand once the coherent information -S(A|B) is positive,
/// 2 - H(AB) otherwise. Jumps downward at the key threshold.
double randomness_curve(double f);

/// The fraction f* where H(weights(f)) = 1, i.e. the coherent information
/// changes sign; bisection on (0.25, 1) to 1e-10.
double key_threshold();

/// Expected yields of the two-copy probabilistic distillation warm-up with
/// |Psi> = a|00> + b|11>: outcome probabilities (2 a^2 b^2, a^4, b^4) and
/// expected entanglement / private randomness / activity bits per two input
/// copies.
struct Toy1Yields {
  double p_ent = 0.0;
  double p_00 = 0.0;
  double p_11 = 0.0;
  double ebits = 0.0;
  double rand_bits = 0.0;
  double activity_bits = 0.0;
};

Toy1Yields toy1_yields(double a_sq);

}  // namespace resdist
