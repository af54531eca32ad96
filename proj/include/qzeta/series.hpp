#pragma once

// Truncated formal power series in q with dense coefficient storage.
//
// Series<Scalar> is templated on the coefficient ring. The exact rational
// instantiation QSeries is the public currency of the library; IntSeries
// (BigInt coefficients) is used where all data is integral and speed
// matters; Series<double> backs numeric evaluation tests.
//
// Every series carries an explicit order N and stores q^0..q^N. Binary
// operations produce a result of order min(N_lhs, N_rhs); nothing extends
// the order implicitly.

#include "qzeta/exactnum.hpp"

#include <algorithm>
#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

namespace qzeta {

class NotInvertibleError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

template <class Scalar>
class Series {
 public:
  using scalar_type = Scalar;

  /// The zero series of the given order.
  explicit Series(std::size_t order) : coeffs_(order + 1, Scalar(0)) {}

  /// Coefficients beyond q^order are dropped; missing ones are zero.
  Series(std::size_t order, std::vector<Scalar> coeffs) : coeffs_(std::move(coeffs)) {
    coeffs_.resize(order + 1, Scalar(0));
  }

  static Series one(std::size_t order) { return monomial(order, 0); }

  static Series monomial(std::size_t order, std::size_t exponent, Scalar c = Scalar(1)) {
    Series s(order);
    if (exponent <= order) s.coeffs_[exponent] = std::move(c);
    return s;
  }

  std::size_t order() const { return coeffs_.size() - 1; }
  const Scalar& operator[](std::size_t i) const { return coeffs_[i]; }
  std::span<const Scalar> coeffs() const { return coeffs_; }

  bool is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Scalar& c) { return c == 0; });
  }

  std::optional<std::size_t> lowest_exponent() const {
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
      if (coeffs_[i] != 0) return i;
    }
    return std::nullopt;
  }

  /// Moves the coefficient vector out; the series is left empty.
  std::vector<Scalar> release() && { return std::move(coeffs_); }

  friend bool operator==(const Series& a, const Series& b) { return a.coeffs_ == b.coeffs_; }

 private:
  std::vector<Scalar> coeffs_;
};

using QSeries = Series<BigRational>;
using IntSeries = Series<BigInt>;

enum class Parity { Even, Odd, Mixed, Zero };

std::string to_string(Parity p);

namespace detail {

template <class Scalar>
double to_double(const Scalar& x) {
  if constexpr (std::is_arithmetic_v<Scalar>) {
    return static_cast<double>(x);
  } else {
    return x.get_d();
  }
}

// acc[i] -= acc[i - step], high to low: multiplies by (1 - q^step).
template <class Scalar>
void times_one_minus_inplace(std::vector<Scalar>& acc, std::size_t step) {
  for (std::size_t i = acc.size(); i-- > step;) acc[i] -= acc[i - step];
}

// acc[i] += acc[i - step], low to high: divides by (1 - q^step).
template <class Scalar>
void over_one_minus_inplace(std::vector<Scalar>& acc, std::size_t step) {
  for (std::size_t i = step; i < acc.size(); ++i) acc[i] += acc[i - step];
}

template <class Scalar>
void schoolbook_full(std::span<const Scalar> a, std::span<const Scalar> b,
                     std::span<Scalar> out) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
}

// out (size a.size() + b.size() - 1, zero-initialized) += a * b, for
// a.size() == b.size().
template <class Scalar>
void karatsuba_full(std::span<const Scalar> a, std::span<const Scalar> b, std::span<Scalar> out) {
  const std::size_t n = a.size();
  if (n <= 32) {
    schoolbook_full(a, b, out);
    return;
  }
  const std::size_t lo = n / 2;
  const std::size_t hi = n - lo;
  auto a0 = a.first(lo), a1 = a.subspan(lo);
  auto b0 = b.first(lo), b1 = b.subspan(lo);

  std::vector<Scalar> z0(2 * lo - 1, Scalar(0));
  std::vector<Scalar> z2(2 * hi - 1, Scalar(0));
  karatsuba_full<Scalar>(a0, b0, z0);
  karatsuba_full<Scalar>(a1, b1, z2);

  std::vector<Scalar> sa(a1.begin(), a1.end());
  std::vector<Scalar> sb(b1.begin(), b1.end());
  for (std::size_t i = 0; i < lo; ++i) {
    sa[i] += a0[i];
    sb[i] += b0[i];
  }
  std::vector<Scalar> z1(2 * hi - 1, Scalar(0));
  karatsuba_full<Scalar>(sa, sb, z1);
  for (std::size_t i = 0; i < z0.size(); ++i) z1[i] -= z0[i];
  for (std::size_t i = 0; i < z2.size(); ++i) z1[i] -= z2[i];

  for (std::size_t i = 0; i < z0.size(); ++i) out[i] += z0[i];
  for (std::size_t i = 0; i < z1.size(); ++i) out[i + lo] += z1[i];
  for (std::size_t i = 0; i < z2.size(); ++i) out[i + 2 * lo] += z2[i];
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Ring operations

template <class Scalar>
Series<Scalar> truncate(const Series<Scalar>& s, std::size_t order) {
  const auto c = s.coeffs();
  const std::size_t n = std::min(order, s.order()) + 1;
  return Series<Scalar>(order, std::vector<Scalar>(c.begin(), c.begin() + n));
}

template <class Scalar>
Series<Scalar> add(const Series<Scalar>& s, const Series<Scalar>& t) {
  const std::size_t order = std::min(s.order(), t.order());
  std::vector<Scalar> out(order + 1);
  for (std::size_t i = 0; i <= order; ++i) out[i] = s[i] + t[i];
  return Series<Scalar>(order, std::move(out));
}

template <class Scalar>
Series<Scalar> sub(const Series<Scalar>& s, const Series<Scalar>& t) {
  const std::size_t order = std::min(s.order(), t.order());
  std::vector<Scalar> out(order + 1);
  for (std::size_t i = 0; i <= order; ++i) out[i] = s[i] - t[i];
  return Series<Scalar>(order, std::move(out));
}

template <class Scalar>
Series<Scalar> scale(const Series<Scalar>& s, const Scalar& c) {
  std::vector<Scalar> out(s.order() + 1);
  for (std::size_t i = 0; i <= s.order(); ++i) out[i] = s[i] * c;
  return Series<Scalar>(s.order(), std::move(out));
}

/// Truncated Cauchy product, O(N^2).
template <class Scalar>
Series<Scalar> mul_schoolbook(const Series<Scalar>& s, const Series<Scalar>& t) {
  const std::size_t order = std::min(s.order(), t.order());
  std::vector<Scalar> out(order + 1, Scalar(0));
  for (std::size_t i = 0; i <= order; ++i) {
    if (s[i] == 0) continue;
    for (std::size_t j = 0; i + j <= order; ++j) out[i + j] += s[i] * t[j];
  }
  return Series<Scalar>(order, std::move(out));
}

/// Divide-and-conquer product on the full (untruncated) operands, truncated
/// afterwards. Produces exactly the coefficients of mul_schoolbook.
template <class Scalar>
Series<Scalar> mul_karatsuba(const Series<Scalar>& s, const Series<Scalar>& t) {
  const std::size_t order = std::min(s.order(), t.order());
  const auto a = s.coeffs().first(order + 1);
  const auto b = t.coeffs().first(order + 1);
  std::vector<Scalar> full(2 * order + 1, Scalar(0));
  detail::karatsuba_full<Scalar>(a, b, full);
  full.resize(order + 1);
  return Series<Scalar>(order, std::move(full));
}

template <class Scalar>
Series<Scalar> mul(const Series<Scalar>& s, const Series<Scalar>& t) {
  return mul_schoolbook(s, t);
}

/// Multiplicative inverse to the same order. Over the integers the constant
/// term must be a unit (+-1); over a field it must be nonzero.
template <class Scalar>
Series<Scalar> inverse(const Series<Scalar>& s) {
  const Scalar& c0 = s[0];
  if (c0 == 0) throw NotInvertibleError("series with zero constant term is not invertible");
  if constexpr (std::is_same_v<Scalar, BigInt>) {
    if (c0 != 1 && c0 != -1) {
      throw NotInvertibleError("integer series constant term must be +-1 to invert");
    }
  }
  const std::size_t order = s.order();
  std::vector<Scalar> out(order + 1, Scalar(0));
  out[0] = Scalar(1) / c0;
  for (std::size_t n = 1; n <= order; ++n) {
    Scalar acc = 0;
    for (std::size_t k = 1; k <= n; ++k) {
      if (s[k] != 0) acc += s[k] * out[n - k];
    }
    out[n] = -acc / c0;
  }
  return Series<Scalar>(order, std::move(out));
}

template <class Scalar>
Series<Scalar> pow(const Series<Scalar>& s, unsigned exponent) {
  Series<Scalar> result = Series<Scalar>::one(s.order());
  Series<Scalar> base = s;
  while (exponent > 0) {
    if (exponent & 1U) result = mul(result, base);
    exponent >>= 1U;
    if (exponent > 0) base = mul(base, base);
  }
  return result;
}

/// Multiplies by q^j, keeping the order.
template <class Scalar>
Series<Scalar> shift(const Series<Scalar>& s, std::size_t j) {
  std::vector<Scalar> out(s.order() + 1, Scalar(0));
  for (std::size_t i = 0; i + j <= s.order(); ++i) out[i + j] = s[i];
  return Series<Scalar>(s.order(), std::move(out));
}

/// s(q^m), truncated at the order of s.
template <class Scalar>
Series<Scalar> substitute_power(const Series<Scalar>& s, std::size_t m) {
  if (m == 0) throw std::invalid_argument("substitute_power: m must be positive");
  std::vector<Scalar> out(s.order() + 1, Scalar(0));
  for (std::size_t i = 0; i * m <= s.order(); ++i) out[i * m] = s[i];
  return Series<Scalar>(s.order(), std::move(out));
}

/// s * (1 - q^step)^times.
template <class Scalar>
Series<Scalar> times_one_minus_power(const Series<Scalar>& s, std::size_t step, unsigned times = 1) {
  if (step == 0) throw std::invalid_argument("times_one_minus_power: step must be positive");
  const std::size_t order = s.order();
  auto c = Series<Scalar>(s).release();
  for (unsigned t = 0; t < times; ++t) detail::times_one_minus_inplace(c, step);
  return Series<Scalar>(order, std::move(c));
}

/// s / (1 - q^step)^times.
template <class Scalar>
Series<Scalar> over_one_minus_power(const Series<Scalar>& s, std::size_t step, unsigned times = 1) {
  if (step == 0) throw std::invalid_argument("over_one_minus_power: step must be positive");
  const std::size_t order = s.order();
  auto c = Series<Scalar>(s).release();
  for (unsigned t = 0; t < times; ++t) detail::over_one_minus_inplace(c, step);
  return Series<Scalar>(order, std::move(c));
}

/// Coefficient-wise conversion between rings (e.g. IntSeries -> QSeries).
template <class To, class From>
Series<To> convert(const Series<From>& s) {
  std::vector<To> out;
  out.reserve(s.order() + 1);
  for (const auto& c : s.coeffs()) out.push_back(To(c));
  return Series<To>(s.order(), std::move(out));
}

/// Numeric value of the truncated polynomial at x (Horner).
template <class Scalar>
double evaluate(const Series<Scalar>& s, double x) {
  double acc = 0.0;
  for (std::size_t i = s.order() + 1; i-- > 0;) acc = acc * x + detail::to_double(s[i]);
  return acc;
}

/// Smallest exponent where a and b differ, compared up to their common order.
template <class Scalar>
std::optional<std::size_t> first_difference(const Series<Scalar>& a, const Series<Scalar>& b) {
  const std::size_t order = std::min(a.order(), b.order());
  for (std::size_t i = 0; i <= order; ++i) {
    if (a[i] != b[i]) return i;
  }
  return std::nullopt;
}

template <class Scalar>
Parity parity_support(const Series<Scalar>& s) {
  bool even = false, odd = false;
  for (std::size_t i = 0; i <= s.order(); ++i) {
    if (s[i] == 0) continue;
    (i % 2 == 0 ? even : odd) = true;
  }
  if (even && odd) return Parity::Mixed;
  if (even) return Parity::Even;
  if (odd) return Parity::Odd;
  return Parity::Zero;
}

template <class Scalar>
Series<Scalar> operator+(const Series<Scalar>& s, const Series<Scalar>& t) { return add(s, t); }
template <class Scalar>
Series<Scalar> operator-(const Series<Scalar>& s, const Series<Scalar>& t) { return sub(s, t); }
template <class Scalar>
Series<Scalar> operator*(const Series<Scalar>& s, const Series<Scalar>& t) { return mul(s, t); }
template <class Scalar>
Series<Scalar> operator-(const Series<Scalar>& s) { return scale(s, Scalar(-1)); }

// ---------------------------------------------------------------------------
// Theta and eta-quotient constructions

/// sum_{n>=0} q^{n(n+1)/2}, including the constant term.
template <class Scalar = BigRational>
Series<Scalar> theta_psi(std::size_t order) {
  std::vector<Scalar> c(order + 1, Scalar(0));
  for (std::size_t n = 0, t = 0; t <= order; ++n, t += n) c[t] = 1;
  return Series<Scalar>(order, std::move(c));
}

/// prod_{n>=1} (1 - q^{a n})^e / (1 - q^{b n - c})^e, keeping only factors
/// whose leading exponent is <= order (the rest are 1 + O(q^{order+1})).
/// Requires a, b >= 1, b - c >= 1 and e >= 1.
template <class Scalar = BigRational>
Series<Scalar> product_pow(std::size_t a, std::size_t b, long c, unsigned e, std::size_t order) {
  if (a == 0 || b == 0) throw std::invalid_argument("product_pow: steps must be positive");
  if (static_cast<long>(b) - c < 1) {
    throw std::invalid_argument("product_pow: denominator exponents must be positive");
  }
  if (e == 0) throw std::invalid_argument("product_pow: exponent must be positive");
  auto acc = Series<Scalar>::one(order).release();
  for (std::size_t n = 1; a * n <= order; ++n) {
    for (unsigned t = 0; t < e; ++t) detail::times_one_minus_inplace(acc, a * n);
  }
  for (std::size_t n = 1;; ++n) {
    const long exp = static_cast<long>(b * n) - c;
    if (exp > static_cast<long>(order)) break;
    for (unsigned t = 0; t < e; ++t) {
      detail::over_one_minus_inplace(acc, static_cast<std::size_t>(exp));
    }
  }
  return Series<Scalar>(order, std::move(acc));
}

/// prod_{n>=1} (1 - q^{2n}) / (1 - q^{2n-1}).
template <class Scalar = BigRational>
Series<Scalar> eta_quotient_psi(std::size_t order) {
  return product_pow<Scalar>(2, 2, 1, 1, order);
}

}  // namespace qzeta
