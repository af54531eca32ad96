#pragma once

// Double-precision evaluation of the sums and products near q = 1, used to
// exhibit the limits
//
//   (1-q)^{2k} prod (1-q^{2n})^{4k} / (1-q^{2n-1})^{4k}  ->  pi^{2k} / 4^k
//   (1-q)^{2k} * (Lambert sum)                          ->  d_k pi^{2k} / 4^k
//
// The Lambert sum is taken in the half-argument variable (q -> sqrt(q)) for
// both parities, so the same (1-q)^{2k} prefactor applies.

#include <string>
#include <vector>

namespace qzeta {

struct LimitReport {
  unsigned k;
  std::vector<double> q_points;
  std::vector<double> lhs_values;
  std::vector<double> rhs_values;
  double target;
  std::vector<double> relative_errors;
  bool converging;
};

/// q = 1 - 2^-m for m = 4..10.
std::vector<double> default_q_points();

/// (1-q)^{2k} prod_{n>=1} (1-q^{2n})^{4k} / (1-q^{2n-1})^{4k}; 0 <= q < 1.
double qgamma_product_value(unsigned k, double q);

/// Unscaled Lambert sum at q in the half-argument variable:
///   k even: sum 2^{2k-1} z P^e(z) / (1-z)^{2k},           z = q^{2n+1}
///   k odd:  sum w P^o(w) / (1-q^{2n+1})^{2k},             w = q^{n+1/2}
/// Terms are added until the next one falls below 1e-16 of the running sum.
double lambert_sum_value(unsigned k, double q);

/// Unscaled product side d_k q^{k/2} prod (1-q^{2n})^{4k} / (1-q^{2n-1})^{4k}.
double product_side_value(unsigned k, double q);

/// lhs: scaled product; rhs: the target at each point. Throws
/// std::invalid_argument unless q_points is non-empty, strictly increasing
/// and inside (0, 1).
LimitReport qgamma_limit_check(unsigned k, const std::vector<double>& q_points);

/// lhs: (1-q)^{2k} * lambert_sum_value; rhs: (1-q)^{2k} * product_side_value.
/// Target 2^{2k-1} (2k-1)! (1 - 4^-k) zeta(2k), from exact rationals.
LimitReport zeta_recovery_check(unsigned k, const std::vector<double>& q_points);

/// Columns q,lhs,target,rel_err.
std::string to_csv(const LimitReport& r);

}  // namespace qzeta
