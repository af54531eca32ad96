#include "qzeta/exactnum.hpp"

#include <cassert>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <vector>

namespace qzeta {

namespace {

bool is_decimal_integer(std::string_view text) {
  if (!text.empty() && text.front() == '-') text.remove_prefix(1);
  if (text.empty()) return false;
  for (char c : text) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

// Rows S(n, 0..n). Readers share the lock; growth takes it exclusively.
class StirlingTable {
 public:
  BigInt get(unsigned n, unsigned j) {
    if (j > n) return 0;
    {
      std::shared_lock lock(mutex_);
      if (n < rows_.size()) return rows_[n][j];
    }
    std::unique_lock lock(mutex_);
    if (rows_.empty()) rows_.push_back({BigInt(1)});
    while (rows_.size() <= n) {
      const auto& prev = rows_.back();
      const unsigned m = static_cast<unsigned>(rows_.size());
      std::vector<BigInt> row(m + 1);
      row[0] = 0;
      for (unsigned i = 1; i < m; ++i) row[i] = i * prev[i] + prev[i - 1];
      row[m] = 1;
      rows_.push_back(std::move(row));
    }
    return rows_[n][j];
  }

 private:
  std::shared_mutex mutex_;
  std::vector<std::vector<BigInt>> rows_;
};

class BernoulliTable {
 public:
  BigRational get(unsigned m) {
    {
      std::shared_lock lock(mutex_);
      if (m < values_.size()) return values_[m];
    }
    std::unique_lock lock(mutex_);
    if (values_.empty()) values_.push_back(BigRational(1));
    // sum_{i=0}^{n} C(n+1, i) B_i = 0
    while (values_.size() <= m) {
      const unsigned n = static_cast<unsigned>(values_.size());
      BigRational acc = 0;
      for (unsigned i = 0; i < n; ++i) acc += BigRational(binomial(n + 1, i)) * values_[i];
      BigRational b = -acc / BigRational(n + 1);
      b.canonicalize();
      values_.push_back(b);
    }
    return values_[m];
  }

 private:
  std::shared_mutex mutex_;
  std::vector<BigRational> values_;
};

StirlingTable& stirling_table() {
  static StirlingTable table;
  return table;
}

BernoulliTable& bernoulli_table() {
  static BernoulliTable table;
  return table;
}

}  // namespace

BigRational make_rational(const BigInt& numerator, const BigInt& denominator) {
  if (denominator == 0) throw std::invalid_argument("rational with zero denominator");
  BigRational r(numerator, denominator);
  r.canonicalize();
  return r;
}

BigRational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  const auto num = text.substr(0, slash);
  if (!is_decimal_integer(num)) {
    throw std::invalid_argument("malformed rational: " + std::string(text));
  }
  if (slash == std::string_view::npos) return BigRational(BigInt(std::string(num)));
  const auto den = text.substr(slash + 1);
  if (!is_decimal_integer(den)) {
    throw std::invalid_argument("malformed rational: " + std::string(text));
  }
  return make_rational(BigInt(std::string(num)), BigInt(std::string(den)));
}

std::string to_fraction_string(const BigRational& value) {
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

bool is_integer(const BigRational& value) { return value.get_den() == 1; }

BigInt factorial(unsigned n) {
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

BigInt binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

BigInt power(const BigInt& base, unsigned exponent) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exponent);
  return r;
}

BigInt stirling2(unsigned n, unsigned j) { return stirling_table().get(n, j); }

BigRational bernoulli(unsigned m) {
  if (m % 2 != 0) throw std::invalid_argument("bernoulli: index must be even");
  return bernoulli_table().get(m);
}

BigRational d_constant(unsigned k) {
  if (k == 0) throw std::invalid_argument("d_constant: k must be positive");
  const BigInt minus16_pow = power(BigInt(-16), k);
  const BigInt four_pow_minus_one = power(BigInt(4), k) - 1;
  BigRational d = -BigRational(minus16_pow * four_pow_minus_one) * bernoulli(2 * k) /
                  BigRational(8 * k);
  d.canonicalize();
  // Integral on the range where it has been checked.
  assert(k > 12 || is_integer(d));
  return d;
}

BigInt sigma(unsigned k, std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("sigma: n must be positive");
  BigInt total = 0;
  for (std::uint64_t d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    const std::uint64_t e = n / d;
    total += power(BigInt(static_cast<unsigned long>(d)), k);
    if (e != d) total += power(BigInt(static_cast<unsigned long>(e)), k);
  }
  return total;
}

BigInt sigma_sharp(unsigned k, std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("sigma_sharp: n must be positive");
  BigInt total = 0;
  for (std::uint64_t d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    const std::uint64_t e = n / d;
    if (e % 2 == 1) total += power(BigInt(static_cast<unsigned long>(d)), k);
    if (e != d && d % 2 == 1) total += power(BigInt(static_cast<unsigned long>(e)), k);
  }
  return total;
}

BigRational zeta_even_exact(unsigned k) {
  if (k == 0) throw std::invalid_argument("zeta_even_exact: k must be positive");
  const BigInt sign = (k % 2 == 1) ? 1 : -1;
  BigRational r = BigRational(sign * power(BigInt(2), 2 * k)) * bernoulli(2 * k) /
                  BigRational(2 * factorial(2 * k));
  r.canonicalize();
  return r;
}

}  // namespace qzeta
