#include "qzeta/numerics.hpp"

#include "qzeta/exactnum.hpp"
#include "qzeta/qpoly.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace qzeta {

namespace {

constexpr double kRelativeCutoff = 1e-16;

void require_unit_interval(double q) {
  if (!(q >= 0.0 && q < 1.0)) throw std::invalid_argument("q must lie in [0, 1)");
}

void validate_points(const std::vector<double>& q_points) {
  if (q_points.empty()) throw std::invalid_argument("q_points must not be empty");
  for (std::size_t i = 0; i < q_points.size(); ++i) {
    const double q = q_points[i];
    if (!(q > 0.0 && q < 1.0)) throw std::invalid_argument("q_points must lie in (0, 1)");
    if (i > 0 && !(q > q_points[i - 1])) {
      throw std::invalid_argument("q_points must be strictly increasing");
    }
  }
}

// 1 - q^e computed as -expm1(e log q) to keep precision near q = 1.
double one_minus_power(double log_q, double e) { return -std::expm1(e * log_q); }

double pi_power(unsigned k) { return std::pow(std::numbers::pi, 2.0 * k); }

LimitReport finish(unsigned k, const std::vector<double>& q_points, std::vector<double> lhs,
                   std::vector<double> rhs, double target) {
  LimitReport r{k, q_points, std::move(lhs), std::move(rhs), target, {}, true};
  for (std::size_t i = 0; i < r.lhs_values.size(); ++i) {
    r.relative_errors.push_back(std::abs(r.lhs_values[i] - target) / std::abs(target));
    if (i > 0 && !(r.relative_errors[i] < r.relative_errors[i - 1])) r.converging = false;
  }
  return r;
}

// log prod_{n>=1} (1-q^{2n}) / (1-q^{2n-1}).
double log_psi_product(double q) {
  if (q == 0.0) return 0.0;
  const double log_q = std::log(q);
  double acc = 0.0;
  for (double n = 1;; n += 1) {
    const double lead = std::exp((2 * n - 1) * log_q);
    if (lead < 1e-18) break;
    acc += std::log(one_minus_power(log_q, 2 * n)) - std::log(one_minus_power(log_q, 2 * n - 1));
  }
  return acc;
}

}  // namespace

std::vector<double> default_q_points() {
  std::vector<double> q;
  for (int m = 4; m <= 10; ++m) q.push_back(1.0 - std::ldexp(1.0, -m));
  return q;
}

double qgamma_product_value(unsigned k, double q) {
  require_unit_interval(q);
  return std::pow(1.0 - q, 2.0 * k) * std::exp(4.0 * k * log_psi_product(q));
}

double lambert_sum_value(unsigned k, double q) {
  if (k == 0) throw std::invalid_argument("k must be positive");
  require_unit_interval(q);
  if (q == 0.0) return 0.0;
  const double log_q = std::log(q);
  const bool even = k % 2 == 0;
  const IntPolynomial exact = even ? p_even(k) : p_odd(k);
  std::vector<double> poly;
  for (const auto& c : exact.coeffs()) poly.push_back(c.get_d());
  const double scale = even ? std::ldexp(1.0, static_cast<int>(2 * k - 1)) : 1.0;

  double acc = 0.0;
  for (double n = 0;; n += 1) {
    const double x = even ? std::exp((2 * n + 1) * log_q) : std::exp((n + 0.5) * log_q);
    const double denom = std::pow(one_minus_power(log_q, 2 * n + 1), 2.0 * k);
    double horner = 0.0;
    for (auto it = poly.rbegin(); it != poly.rend(); ++it) horner = horner * x + *it;
    const double term = scale * x * horner / denom;
    acc += term;
    if (term < kRelativeCutoff * acc) break;
  }
  return acc;
}

double product_side_value(unsigned k, double q) {
  if (k == 0) throw std::invalid_argument("k must be positive");
  require_unit_interval(q);
  return d_constant(k).get_d() * std::pow(q, 0.5 * k) * std::exp(4.0 * k * log_psi_product(q));
}

LimitReport qgamma_limit_check(unsigned k, const std::vector<double>& q_points) {
  if (k == 0) throw std::invalid_argument("k must be positive");
  validate_points(q_points);
  const BigRational coeff(BigInt(1), power(BigInt(4), k));
  const double target = coeff.get_d() * pi_power(k);
  std::vector<double> lhs, rhs;
  for (double q : q_points) {
    lhs.push_back(qgamma_product_value(k, q));
    rhs.push_back(target);
  }
  return finish(k, q_points, std::move(lhs), std::move(rhs), target);
}

LimitReport zeta_recovery_check(unsigned k, const std::vector<double>& q_points) {
  if (k == 0) throw std::invalid_argument("k must be positive");
  validate_points(q_points);
  const BigInt four_pow = power(BigInt(4), k);
  BigRational coeff = BigRational(power(BigInt(2), 2 * k - 1) * factorial(2 * k - 1)) *
                      make_rational(BigInt(four_pow - 1), four_pow) * zeta_even_exact(k);
  coeff.canonicalize();
  const double target = coeff.get_d() * pi_power(k);
  std::vector<double> lhs, rhs;
  for (double q : q_points) {
    const double prefactor = std::pow(1.0 - q, 2.0 * k);
    lhs.push_back(prefactor * lambert_sum_value(k, q));
    rhs.push_back(prefactor * product_side_value(k, q));
  }
  return finish(k, q_points, std::move(lhs), std::move(rhs), target);
}

std::string to_csv(const LimitReport& r) {
  std::ostringstream out;
  out.precision(17);
  out << "q,lhs,target,rel_err\n";
  for (std::size_t i = 0; i < r.q_points.size(); ++i) {
    out << r.q_points[i] << ',' << r.lhs_values[i] << ',' << r.target << ','
        << r.relative_errors[i] << '\n';
  }
  return out.str();
}

}  // namespace qzeta
