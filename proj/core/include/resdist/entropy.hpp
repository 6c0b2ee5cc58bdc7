#pragma once

#include <vector>

#include "resdist/states.hpp"

namespace resdist {

/// Probability distribution. Entries in [0, 1] (values within 1e-12 below
/// zero are clamped to zero, within 1e-12 above one clamped to one) and
/// summing to one within 1e-9.
class ProbVec {
 public:
  explicit ProbVec(std::vector<double> entries);

  const std::vector<double>& entries() const { return p_; }
  std::size_t size() const { return p_.size(); }
  double operator[](std::size_t i) const { return p_[i]; }

 private:
  std::vector<double> p_;
};

/// Shannon entropy in bits, with 0 log 0 := 0. All logarithms in this
/// library are base 2.
double shannon(const ProbVec& p);

/// h(q) = -q log2 q - (1-q) log2(1-q).
double binary_entropy(double q);

/// Von Neumann entropy in bits. Rejects matrices that are not Hermitian
/// within 1e-10 or have an eigenvalue below -1e-8; eigenvalues negative
/// within tolerance are clamped to zero.
double von_neumann(const DensityMatrix& rho);

/// S(A|B) = S(AB) - S(B) on a bipartite state of dimension dim_a * dim_b.
/// May be negative.
double conditional_entropy(const DensityMatrix& rho_ab, int dim_a, int dim_b);

/// Classical-quantum ensemble {P(x), rho^x}; all states share one dimension.
struct CqEnsemble {
  ProbVec probs;
  std::vector<DensityMatrix> states;
};

/// I(X;A) = H(sum_x P(x) rho^x) - sum_x P(x) H(rho^x), nonnegative.
double mutual_info_cq(const CqEnsemble& e);

}  // namespace resdist
