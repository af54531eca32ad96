#pragma once

// Integer polynomials and the P/Q polynomial families attached to each k.
//
// The even family is built two ways: from the a/b coefficient tables
// (p_even) and directly from Stirling numbers (q_even_direct). The odd family
// is likewise built from p_even (p_odd) and from q_even_direct (q_odd), so
// every object has an independent cross-check.

#include "qzeta/exactnum.hpp"
#include "qzeta/series.hpp"

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace qzeta {

class ParityError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Dense polynomial over the integers; coeffs()[i] multiplies z^i. Trailing
/// zero coefficients are always stripped, so the zero polynomial has no
/// coefficients and degree -1.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<BigInt> coeffs);

  static IntPolynomial monomial(unsigned degree, BigInt c = 1);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  std::span<const BigInt> coeffs() const { return coeffs_; }
  /// Zero beyond the degree.
  BigInt coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : BigInt(0); }

  BigInt operator()(const BigInt& z) const;
  double operator()(double z) const;

  bool is_palindromic() const;

  /// Ascending powers, e.g. "1 + 4z + z^2".
  std::string to_string(const std::string& var = "z") const;

  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

 private:
  void normalize();
  std::vector<BigInt> coeffs_;
};

IntPolynomial operator+(const IntPolynomial& p, const IntPolynomial& q);
IntPolynomial operator-(const IntPolynomial& p, const IntPolynomial& q);
IntPolynomial operator*(const IntPolynomial& p, const IntPolynomial& q);
IntPolynomial operator*(const BigInt& c, const IntPolynomial& p);

/// p(z^m).
IntPolynomial compose_power(const IntPolynomial& p, unsigned m);
/// z^j * p(z).
IntPolynomial shift(const IntPolynomial& p, unsigned j);
/// (1 + sign*z)^n.
IntPolynomial binomial_power(int sign, unsigned n);

/// p(q^m) as a series of the given order.
template <class Scalar = BigInt>
Series<Scalar> to_series(const IntPolynomial& p, std::size_t m, std::size_t order) {
  std::vector<Scalar> c(order + 1, Scalar(0));
  const auto pc = p.coeffs();
  for (std::size_t i = 0; i < pc.size() && i * m <= order; ++i) c[i * m] = Scalar(pc[i]);
  return Series<Scalar>(order, std::move(c));
}

/// a_k(m) for m = 0..2k-1.
std::vector<BigInt> a_table(unsigned k);
/// b_k(l) for l = 1..2k-1 (index 0 of the result is l = 1).
std::vector<BigInt> b_table(unsigned k);

/// Degree 2k-2 even-case polynomial from the b table.
IntPolynomial p_even(unsigned k);
/// sum_j j! S(2k-1, j) z^j (1-z)^{2k-1-j}; equals z * p_even(k).
IntPolynomial q_even_direct(unsigned k);
/// (1+z)^{2k} p_even(z) - 2^{2k-1} z p_even(z^2), for odd k.
IntPolynomial p_odd(unsigned k);
/// (1+w)^{2k} Q(w) - 2^{2k-1} Q(w^2) with Q = q_even_direct(k), for odd k.
IntPolynomial q_odd(unsigned k);

/// Quotient of p by a monic divisor when the division is exact.
std::optional<IntPolynomial> divide_exact(const IntPolynomial& p, const IntPolynomial& monic_divisor);

/// s with p(z) = s(z^2), when p has only even-degree terms.
std::optional<IntPolynomial> even_part_in_square(const IntPolynomial& p);

}  // namespace qzeta
