#include "qzeta/identity.hpp"
#include "qzeta/numerics.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>

using namespace qzeta;

namespace {

bool strictly_decreasing(const std::vector<double>& v) {
  for (std::size_t i = 1; i < v.size(); ++i) {
    if (!(v[i] < v[i - 1])) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("default q points") {
  const auto q = default_q_points();
  REQUIRE(q.size() == 7);
  CHECK(q.front() == 1.0 - 1.0 / 16);
  CHECK(q.back() == 1.0 - 1.0 / 1024);
}

TEST_CASE("values at q = 0") {
  for (unsigned k = 1; k <= 4; ++k) {
    CHECK(qgamma_product_value(k, 0.0) == 1.0);
    CHECK(lambert_sum_value(k, 0.0) == 0.0);
  }
}

TEST_CASE("qgamma limit") {
  CHECK(qgamma_product_value(1, 0.99) == doctest::Approx(std::numbers::pi * std::numbers::pi / 4).epsilon(0.03));
  for (unsigned k = 1; k <= 4; ++k) {
    const LimitReport r = qgamma_limit_check(k, default_q_points());
    CHECK(r.converging);
    CHECK(strictly_decreasing(r.relative_errors));
    CHECK(r.target == doctest::Approx(std::pow(std::numbers::pi * std::numbers::pi / 4, k)));
  }
  std::vector<double> longer;
  for (int m = 4; m <= 12; ++m) longer.push_back(1.0 - std::ldexp(1.0, -m));
  CHECK(qgamma_limit_check(3, longer).converging);
}

TEST_CASE("zeta recovery") {
  for (unsigned k = 1; k <= 4; ++k) {
    const LimitReport r = zeta_recovery_check(k, default_q_points());
    CHECK(r.converging);
    const LimitReport at = zeta_recovery_check(k, {0.995});
    CHECK(at.relative_errors.front() < 0.05);
  }
  const LimitReport r1 = zeta_recovery_check(1, {0.5});
  CHECK(r1.target == doctest::Approx(std::numbers::pi * std::numbers::pi / 4));
  const double pi4 = std::pow(std::numbers::pi, 4);
  CHECK(zeta_recovery_check(2, {0.5}).target == doctest::Approx(0.5 * pi4));
}

TEST_CASE("Lambert and product sides agree numerically when the cusp term vanishes") {
  for (unsigned k = 1; k <= 2; ++k) {
    for (double q : {0.1, 0.5, 0.8, 0.95}) {
      CHECK_MESSAGE(lambert_sum_value(k, q) ==
                        doctest::Approx(product_side_value(k, q)).epsilon(1e-9),
                    "k = " << k << " q = " << q);
    }
  }
}

TEST_CASE("float sum agrees with the exact series") {
  constexpr std::size_t N = 600;
  for (unsigned k = 1; k <= 4; ++k) {
    const QSeries exact = lambert_lhs(k, N);
    for (double x : {0.3, 0.6, 0.9}) {
      CHECK(evaluate(exact, x) == doctest::Approx(lambert_sum_value(k, x * x)).epsilon(1e-10));
    }
  }
}

TEST_CASE("invalid q points are rejected") {
  CHECK_THROWS_AS(zeta_recovery_check(1, {1.0}), std::invalid_argument);
  CHECK_THROWS_AS(zeta_recovery_check(1, {0.0}), std::invalid_argument);
  CHECK_THROWS_AS(zeta_recovery_check(1, {0.9, 0.8}), std::invalid_argument);
  CHECK_THROWS_AS(qgamma_limit_check(1, {}), std::invalid_argument);
  CHECK_THROWS_AS(qgamma_limit_check(1, {-0.5}), std::invalid_argument);
}

TEST_CASE("csv layout") {
  const std::string csv = to_csv(zeta_recovery_check(1, {0.5, 0.75}));
  CHECK(csv.rfind("q,lhs,target,rel_err\n", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 3);
}
