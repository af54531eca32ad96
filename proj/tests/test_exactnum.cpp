#include "qzeta/exactnum.hpp"
#include "qzeta/series.hpp"

#include <doctest.h>

#include <functional>
#include <thread>
#include <vector>

using namespace qzeta;

namespace {

// Counts set partitions of {0..n-1} into exactly j blocks by walking
// restricted growth strings.
long count_set_partitions(unsigned n, unsigned j) {
  long count = 0;
  std::vector<unsigned> rgs(n, 0);
  std::function<void(unsigned, unsigned)> walk = [&](unsigned pos, unsigned blocks) {
    if (pos == n) {
      if (blocks == j) ++count;
      return;
    }
    for (unsigned b = 0; b <= blocks; ++b) {
      rgs[pos] = b;
      walk(pos + 1, b == blocks ? blocks + 1 : blocks);
    }
  };
  walk(0, 0);
  return count;
}

// B_m = m! [x^m] x / (e^x - 1), via the series inverse of sum x^j / (j+1)!.
BigRational bernoulli_from_generating_function(unsigned m) {
  std::vector<BigRational> c(m + 1);
  for (unsigned j = 0; j <= m; ++j) c[j] = BigRational(BigInt(1), factorial(j + 1));
  const QSeries inv = inverse(QSeries(m, c));
  BigRational b = inv[m] * BigRational(factorial(m));
  b.canonicalize();
  return b;
}

BigInt sigma_brute(unsigned k, unsigned n, bool odd_cofactor_only) {
  BigInt total = 0;
  for (unsigned d = 1; d <= n; ++d) {
    if (n % d != 0) continue;
    if (odd_cofactor_only && (n / d) % 2 == 0) continue;
    total += power(BigInt(d), k);
  }
  return total;
}

}  // namespace

TEST_CASE("stirling2 matches set-partition enumeration") {
  CHECK(stirling2(4, 2) == 7);
  CHECK(count_set_partitions(4, 2) == 7);
  for (unsigned n = 0; n <= 8; ++n) {
    for (unsigned j = 0; j <= n; ++j) {
      CHECK(stirling2(n, j) == count_set_partitions(n, j));
    }
  }
}

TEST_CASE("stirling2 boundary values") {
  CHECK(stirling2(0, 0) == 1);
  CHECK(stirling2(5, 0) == 0);
  CHECK(stirling2(3, 7) == 0);
  for (unsigned n = 0; n <= 30; ++n) CHECK(stirling2(n, n) == 1);
}

TEST_CASE("stirling2 satisfies the triangular recurrence for n <= 30") {
  for (unsigned n = 1; n <= 30; ++n) {
    for (unsigned j = 1; j <= n; ++j) {
      CHECK(stirling2(n, j) == j * stirling2(n - 1, j) + stirling2(n - 1, j - 1));
    }
  }
}

TEST_CASE("stirling2 table is consistent under concurrent growth") {
  std::vector<std::thread> pool;
  std::vector<BigInt> results(8);
  for (unsigned t = 0; t < results.size(); ++t) {
    pool.emplace_back([t, &results] { results[t] = stirling2(40 + t, 17); });
  }
  for (auto& th : pool) th.join();
  for (unsigned t = 0; t < results.size(); ++t) {
    CHECK(results[t] == (17 * stirling2(39 + t, 17) + stirling2(39 + t, 16)));
  }
}

TEST_CASE("bernoulli numbers") {
  CHECK(bernoulli(0) == 1);
  CHECK(bernoulli(2) == BigRational(1, 6));
  CHECK(bernoulli(4) == BigRational(-1, 30));
  CHECK(bernoulli(6) == BigRational(1, 42));
  for (unsigned m = 0; m <= 24; m += 2) CHECK(bernoulli(m) == bernoulli_from_generating_function(m));
  CHECK_THROWS_AS(bernoulli(3), std::invalid_argument);
}

TEST_CASE("d_constant worked values") {
  CHECK(d_constant(1) == 1);
  CHECK(d_constant(2) == 8);
  CHECK(d_constant(3) == 256);
  CHECK(d_constant(4) / 128 == 136);
  CHECK(d_constant(5) == 2031616);
  CHECK_THROWS_AS(d_constant(0), std::invalid_argument);
}

TEST_CASE("d_constant is integral for k <= 12") {
  for (unsigned k = 1; k <= 12; ++k) CHECK(is_integer(d_constant(k)));
}

TEST_CASE("sigma") {
  CHECK(sigma(1, 6) == 12);
  CHECK(sigma(5, 3) == 244);
  for (unsigned k = 0; k <= 7; ++k) CHECK(sigma(k, 1) == 1);
  for (unsigned n = 1; n <= 300; ++n) {
    CHECK(sigma(3, n) == sigma_brute(3, n, false));
  }
  CHECK_THROWS_AS(sigma(1, 0), std::invalid_argument);
}

TEST_CASE("sigma_sharp") {
  CHECK(sigma_sharp(1, 9) == 13);
  CHECK(sigma_sharp(1, 2) == 2);
  for (unsigned k = 0; k <= 7; ++k) CHECK(sigma_sharp(k, 1) == 1);
  for (unsigned n = 1; n <= 300; ++n) CHECK(sigma_sharp(5, n) == sigma_brute(5, n, true));
  CHECK_THROWS_AS(sigma_sharp(1, 0), std::invalid_argument);
}

TEST_CASE("sigma_sharp direct sum agrees with its two-branch recursion for n <= 10^4") {
  for (unsigned k : {1U, 3U, 5U}) {
    for (std::uint64_t n = 1; n <= 10000; ++n) {
      const BigInt expected = (n % 2 == 1) ? sigma(k, n) : power(BigInt(2), k) * sigma_sharp(k, n / 2);
      REQUIRE(sigma_sharp(k, n) == expected);
    }
  }
}

TEST_CASE("zeta_even_exact") {
  CHECK(zeta_even_exact(1) == BigRational(1, 6));
  CHECK(zeta_even_exact(2) == BigRational(1, 90));
  CHECK(zeta_even_exact(4) == BigRational(1, 9450));
  CHECK(zeta_even_exact(5) == BigRational(1, 93555));
}

TEST_CASE("odd-denominator sum constant equals (1 - 4^-k) zeta(2k)") {
  for (unsigned k = 1; k <= 8; ++k) {
    const BigInt four_k = power(BigInt(4), k);
    const BigRational lhs = zeta_even_exact(k) * make_rational(four_k - 1, four_k);
    const BigInt sign = (k % 2 == 1) ? 1 : -1;
    const BigRational rhs = BigRational(sign * (four_k - 1)) * bernoulli(2 * k) /
                            BigRational(2 * factorial(2 * k));
    CHECK(lhs == rhs);
  }
}

TEST_CASE("rational text form") {
  CHECK(to_fraction_string(BigRational(3, 2)) == "3/2");
  CHECK(to_fraction_string(BigRational(-4)) == "-4/1");
  CHECK(parse_rational("6/4") == BigRational(3, 2));
  CHECK(parse_rational("-17") == -17);
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1.5"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
  CHECK_THROWS_AS(make_rational(1, 0), std::invalid_argument);
  const BigRational r = make_rational(10, -4);
  CHECK(r.get_num() == -5);
  CHECK(r.get_den() == 2);
}
