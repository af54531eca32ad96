#include "qzeta/qpoly.hpp"

#include <algorithm>

namespace qzeta {

IntPolynomial::IntPolynomial(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) {
  normalize();
}

IntPolynomial IntPolynomial::monomial(unsigned degree, BigInt c) {
  std::vector<BigInt> v(degree + 1, BigInt(0));
  v[degree] = std::move(c);
  return IntPolynomial(std::move(v));
}

void IntPolynomial::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

BigInt IntPolynomial::operator()(const BigInt& z) const {
  BigInt acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + *it;
  return acc;
}

double IntPolynomial::operator()(double z) const {
  double acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + it->get_d();
  return acc;
}

bool IntPolynomial::is_palindromic() const {
  return std::equal(coeffs_.begin(), coeffs_.end(), coeffs_.rbegin());
}

std::string IntPolynomial::to_string(const std::string& var) const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const BigInt& c = coeffs_[i];
    if (c == 0) continue;
    const bool negative = c < 0;
    const BigInt magnitude = abs(c);
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    if (i == 0 || magnitude != 1) out += magnitude.get_str();
    if (i >= 1) out += var;
    if (i >= 2) out += "^" + std::to_string(i);
  }
  return out;
}

IntPolynomial operator+(const IntPolynomial& p, const IntPolynomial& q) {
  std::vector<BigInt> out(std::max(p.coeffs().size(), q.coeffs().size()));
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = p.coeff(i) + q.coeff(i);
  return IntPolynomial(std::move(out));
}

IntPolynomial operator-(const IntPolynomial& p, const IntPolynomial& q) {
  std::vector<BigInt> out(std::max(p.coeffs().size(), q.coeffs().size()));
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = p.coeff(i) - q.coeff(i);
  return IntPolynomial(std::move(out));
}

IntPolynomial operator*(const IntPolynomial& p, const IntPolynomial& q) {
  if (p.is_zero() || q.is_zero()) return {};
  const auto a = p.coeffs();
  const auto b = q.coeffs();
  std::vector<BigInt> out(a.size() + b.size() - 1, BigInt(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return IntPolynomial(std::move(out));
}

IntPolynomial operator*(const BigInt& c, const IntPolynomial& p) {
  std::vector<BigInt> out(p.coeffs().begin(), p.coeffs().end());
  for (auto& x : out) x *= c;
  return IntPolynomial(std::move(out));
}

IntPolynomial compose_power(const IntPolynomial& p, unsigned m) {
  if (m == 0) throw std::invalid_argument("compose_power: m must be positive");
  if (p.is_zero()) return {};
  std::vector<BigInt> out(static_cast<std::size_t>(p.degree()) * m + 1, BigInt(0));
  for (std::size_t i = 0; i < p.coeffs().size(); ++i) out[i * m] = p.coeffs()[i];
  return IntPolynomial(std::move(out));
}

IntPolynomial shift(const IntPolynomial& p, unsigned j) {
  if (p.is_zero()) return {};
  std::vector<BigInt> out(j, BigInt(0));
  out.insert(out.end(), p.coeffs().begin(), p.coeffs().end());
  return IntPolynomial(std::move(out));
}

IntPolynomial binomial_power(int sign, unsigned n) {
  std::vector<BigInt> out(n + 1);
  for (unsigned i = 0; i <= n; ++i) {
    out[i] = binomial(n, i);
    if (sign < 0 && i % 2 == 1) out[i] = -out[i];
  }
  return IntPolynomial(std::move(out));
}

namespace {

void require_positive(unsigned k) {
  if (k == 0) throw std::invalid_argument("k must be positive");
}

void require_odd(unsigned k) {
  require_positive(k);
  if (k % 2 == 0) throw ParityError("odd-case polynomial requested for even k");
}

}  // namespace

std::vector<BigInt> a_table(unsigned k) {
  require_positive(k);
  const unsigned top = 2 * k - 1;
  std::vector<BigInt> a(top + 1, BigInt(0));
  for (unsigned m = 0; m <= top; ++m) {
    for (unsigned j = m; j <= top; ++j) {
      BigInt term = factorial(j) * stirling2(top, j) * binomial(j, m);
      if (j % 2 == 1) term = -term;
      a[m] += term;
    }
  }
  return a;
}

std::vector<BigInt> b_table(unsigned k) {
  require_positive(k);
  const unsigned top = 2 * k - 1;
  const auto a = a_table(k);
  std::vector<BigInt> b(top, BigInt(0));
  for (unsigned l = 1; l <= top; ++l) {
    for (unsigned m = 0; m <= top; ++m) {
      BigInt term = a[m] * binomial(top - m, l);
      if (m % 2 == 1) term = -term;
      b[l - 1] += term;
    }
  }
  return b;
}

IntPolynomial p_even(unsigned k) {
  const auto b = b_table(k);
  std::vector<BigInt> c(b.size());
  for (std::size_t l = 1; l <= b.size(); ++l) c[l - 1] = (l % 2 == 1) ? BigInt(-b[l - 1]) : b[l - 1];
  return IntPolynomial(std::move(c));
}

IntPolynomial q_even_direct(unsigned k) {
  require_positive(k);
  const unsigned top = 2 * k - 1;
  IntPolynomial q;
  for (unsigned j = 0; j <= top; ++j) {
    const BigInt c = factorial(j) * stirling2(top, j);
    if (c == 0) continue;
    q = q + c * (IntPolynomial::monomial(j) * binomial_power(-1, top - j));
  }
  return q;
}

IntPolynomial p_odd(unsigned k) {
  require_odd(k);
  const IntPolynomial pe = p_even(k);
  const BigInt two_pow = power(BigInt(2), 2 * k - 1);
  return binomial_power(1, 2 * k) * pe - two_pow * shift(compose_power(pe, 2), 1);
}

IntPolynomial q_odd(unsigned k) {
  require_odd(k);
  const IntPolynomial qe = q_even_direct(k);
  const BigInt two_pow = power(BigInt(2), 2 * k - 1);
  return binomial_power(1, 2 * k) * qe - two_pow * compose_power(qe, 2);
}

std::optional<IntPolynomial> divide_exact(const IntPolynomial& p, const IntPolynomial& monic_divisor) {
  const int dd = monic_divisor.degree();
  if (dd < 0 || monic_divisor.coeffs().back() != 1) {
    throw std::invalid_argument("divide_exact: divisor must be monic");
  }
  if (p.degree() < dd) {
    if (p.is_zero()) return IntPolynomial{};
    return std::nullopt;
  }
  std::vector<BigInt> rem(p.coeffs().begin(), p.coeffs().end());
  std::vector<BigInt> quot(static_cast<std::size_t>(p.degree() - dd) + 1, BigInt(0));
  for (std::size_t i = quot.size(); i-- > 0;) {
    const BigInt lead = rem[i + static_cast<std::size_t>(dd)];
    quot[i] = lead;
    if (lead == 0) continue;
    for (std::size_t j = 0; j <= static_cast<std::size_t>(dd); ++j) {
      rem[i + j] -= lead * monic_divisor.coeffs()[j];
    }
  }
  for (const auto& r : rem) {
    if (r != 0) return std::nullopt;
  }
  return IntPolynomial(std::move(quot));
}

std::optional<IntPolynomial> even_part_in_square(const IntPolynomial& p) {
  std::vector<BigInt> out;
  const auto c = p.coeffs();
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i % 2 == 1) {
      if (c[i] != 0) return std::nullopt;
    } else {
      out.push_back(c[i]);
    }
  }
  return IntPolynomial(std::move(out));
}

}  // namespace qzeta
