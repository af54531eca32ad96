#include "qzeta/identity.hpp"

#include <doctest.h>

#include <functional>

using namespace qzeta;

namespace {

// phi(q)^12 via Euler's pentagonal number theorem: prod (1 - q^n) =
// sum_j (-1)^j q^{j(3j-1)/2} over all integers j.
IntSeries pentagonal_phi(std::size_t order) {
  std::vector<BigInt> c(order + 1);
  for (long j = -static_cast<long>(order); j <= static_cast<long>(order); ++j) {
    const long e = j * (3 * j - 1) / 2;
    if (e < 0 || e > static_cast<long>(order)) continue;
    c[static_cast<std::size_t>(e)] += (j % 2 == 0) ? 1 : -1;
  }
  return IntSeries(order, std::move(c));
}

QSeries t6_oracle(std::size_t order) {
  const IntSeries phi12 = pow(pentagonal_phi(order), 12);
  return convert<BigRational>(shift(substitute_power(phi12, 2), 1));
}

// Ordered tuples of `parts` triangular numbers summing to n, one tuple at a time.
long naive_tuples(unsigned parts, unsigned n) {
  std::vector<unsigned> tri;
  for (unsigned m = 0; m * (m + 1) / 2 <= n; ++m) tri.push_back(m * (m + 1) / 2);
  std::function<long(unsigned, unsigned)> go = [&](unsigned left, unsigned rest) -> long {
    if (left == 0) return rest == 0 ? 1 : 0;
    long total = 0;
    for (unsigned t : tri) {
      if (t > rest) break;
      total += go(left - 1, rest - t);
    }
    return total;
  };
  return go(parts, n);
}

}  // namespace

TEST_CASE("make_case") {
  const ZetaCase c = make_case(5, 100);
  CHECK(c.parity == KParity::Odd);
  CHECK(c.d == 2031616);
  CHECK(c.poly == p_odd(5));
  CHECK(make_case(4, 10).poly == p_even(4));
  CHECK_THROWS_AS(make_case(0, 10), std::invalid_argument);
}

TEST_CASE("lambert_lhs_even") {
  const QSeries s = lambert_lhs_even(2, 40);
  CHECK(s[2] == 8);
  CHECK(s[0] == 0);
  CHECK(parity_support(s) == Parity::Even);
  CHECK_THROWS_AS(lambert_lhs_even(3, 40), ParityError);
}

TEST_CASE("lambert_lhs_odd") {
  const QSeries s = lambert_lhs_odd(3, 40);
  CHECK(s[5] == 3126);
  CHECK(s[1] == 1);
  CHECK(parity_support(s) == Parity::Odd);
  CHECK_THROWS_AS(lambert_lhs_odd(2, 40), ParityError);
}

TEST_CASE("lambert_lhs equals eisenstein_h for k <= 6") {
  for (unsigned k = 1; k <= 6; ++k) {
    CHECK_MESSAGE(lambert_lhs(k, 120) == eisenstein_h(k, 120), "k = " << k);
  }
}

TEST_CASE("eisenstein_h") {
  const QSeries h = eisenstein_h(2, 20);
  CHECK(h[1] == 0);
  CHECK(h[2] == 8);
  CHECK(h[4] == 64);
  CHECK(h[6] == sigma_sharp(3, 6));
  CHECK(eisenstein_h(1, 20)[9] == 13);
}

TEST_CASE("rhs_product") {
  for (unsigned k = 1; k <= 6; ++k) {
    const QSeries r = rhs_product(k, 80);
    CHECK(r.lowest_exponent() == k);
    CHECK(r[k] == d_constant(k));
    CHECK(parity_support(r) == (k % 2 == 0 ? Parity::Even : Parity::Odd));
  }
}

TEST_CASE("cusp term vanishes for k = 1 and 2") {
  CHECK(extract_cusp_term(1, 200).is_zero());
  CHECK(extract_cusp_term(2, 200).is_zero());
}

TEST_CASE("cusp term for k = 3 is q phi^12(q^2)") {
  const QSeries t = extract_cusp_term(3, 200);
  CHECK(t == t6_oracle(200));
  CHECK(t[1] == 1);
  CHECK(t[3] == -12);
  CHECK(t[5] == 54);
  CHECK(t[7] == -88);
  CHECK(known_cusp_form(3, 200) == t6_oracle(200));
  CHECK_FALSE(known_cusp_form(4, 50).has_value());
}

TEST_CASE("cusp term parity invariants for k = 4, 5, 6") {
  for (unsigned k = 4; k <= 6; ++k) {
    const QSeries t = extract_cusp_term(k, 200);
    CHECK_FALSE(t.is_zero());
    CHECK(t[0] == 0);
    CHECK(parity_support(t) == (k % 2 == 0 ? Parity::Even : Parity::Odd));
  }
  CHECK(extract_cusp_term(4, 200).lowest_exponent() >= 2);
}

TEST_CASE("t_count matches naive tuple enumeration") {
  CHECK(t_count(4, 0) == 1);
  CHECK(t_count(4, 1) == 4);
  CHECK(t_count(4, 2) == 6);
  CHECK(t_count(8, 1) == 8);
  for (unsigned parts : {4U, 8U}) {
    for (unsigned n = 0; n <= 14; ++n) CHECK(t_count(parts, n) == naive_tuples(parts, n));
  }
  CHECK_THROWS_AS(t_count(20, 3), std::invalid_argument);
  CHECK_THROWS_AS(t_count(4, 61), std::invalid_argument);
}

TEST_CASE("t_count equals the psi power coefficient") {
  const IntSeries psi8 = pow(theta_psi<BigInt>(30), 8);
  for (unsigned n = 0; n <= 30; ++n) CHECK(t_count(8, n) == psi8[n]);
}

TEST_CASE("closed form for t_4k(n)") {
  const CountCheck c1 = t_count_closed_form_check(1, 50, 120);
  CHECK(c1.pass);
  REQUIRE(c1.rows.size() == 51);
  for (const auto& row : c1.rows) CHECK(row.series_value == sigma(1, 2 * row.n + 1));
  CHECK(*c1.rows[1].brute == 4);

  const CountCheck c2 = t_count_closed_form_check(2, 50, 120);
  CHECK(c2.pass);
  CHECK(c2.rows[1].series_value == 8);
  CHECK(c2.rows[1].closed_form == 8);

  for (unsigned k = 3; k <= 5; ++k) {
    const CountCheck c = t_count_closed_form_check(k, 50, 2 * 50 + k);
    CHECK_MESSAGE(c.pass, "k = " << k);
    CHECK_FALSE(c.first_failure.has_value());
  }
  CHECK_THROWS_AS(t_count_closed_form_check(3, 50, 50), std::invalid_argument);
}

TEST_CASE("stirling transform") {
  CHECK(stirling_transform_check(3, 50).check.pass);
  CHECK(stirling_transform_check(10, 60).check.pass);
  for (unsigned l = 1; l <= 10; ++l) CHECK(stirling_transform_check(l, 60).check.pass);
}

TEST_CASE("compare_series reports the smallest mismatching exponent") {
  std::vector<BigRational> a(11), b(11);
  b[4] = 1;
  b[7] = 2;
  const SeriesCheck c = compare_series("x", QSeries(10, a), QSeries(10, b));
  CHECK_FALSE(c.pass);
  CHECK(c.failure_exponent == std::size_t{4});
  CHECK(compare_series("y", QSeries(10, a), QSeries(10, a)).pass);
}

TEST_CASE("verify_theorem") {
  const VerificationReport r1 = verify_theorem(1, 200);
  CHECK(r1.pass);
  CHECK(r1.t_is_zero);
  CHECK(r1.t_parity == Parity::Zero);
  CHECK(verify_theorem(2, 200).t_is_zero);

  const VerificationReport r3 = verify_theorem(3, 400);
  CHECK(r3.pass);
  CHECK(r3.first_nonzero_exponent == std::size_t{1});

  const VerificationReport r4 = verify_theorem(4, 200);
  CHECK(r4.pass);
  CHECK_FALSE(r4.t_is_zero);
  CHECK(r4.t_parity == Parity::Even);
  CHECK(*r4.first_nonzero_exponent >= 2);

  const VerificationReport r5 = verify_theorem(5, 200);
  CHECK(r5.pass);
  CHECK(r5.t_parity == Parity::Odd);
  CHECK(r5.lhs_series_digest.size() == 16);

  CHECK_THROWS_AS(verify_theorem(4, 2), std::invalid_argument);
  CHECK_THROWS_AS(verify_theorem(0, 200), std::invalid_argument);
}
