#pragma once

// Both sides of the q-analogue identities for zeta(2k), in their
// integer-exponent form:
//
//   k even:  sum_{n>=0} 2^{2k-1} z P^e(z) / (1-z)^{2k},  z = q^{4n+2}
//   k odd:   sum_{n>=0} w P^o(w) / (1-w^2)^{2k},          w = q^{2n+1}
//
// Each left-hand side equals the Eisenstein part H_{2k}; subtracting the
// product side d_k q^k psi^{4k}(q^2) leaves the cusp correction T_{2k}.

#include "qzeta/exactnum.hpp"
#include "qzeta/qpoly.hpp"
#include "qzeta/series.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace qzeta {

enum class KParity { Even, Odd };

/// Parameters of one identity.
struct ZetaCase {
  unsigned k;
  KParity parity;
  BigRational d;
  IntPolynomial poly;  // P^e for even k, P^o for odd k
  std::size_t order;
};

/// Throws std::invalid_argument when k == 0.
ZetaCase make_case(unsigned k, std::size_t order);

QSeries lambert_lhs_even(unsigned k, std::size_t order);
QSeries lambert_lhs_odd(unsigned k, std::size_t order);
/// Dispatches on the parity of k.
QSeries lambert_lhs(unsigned k, std::size_t order);

/// sum sigma#_{2k-1}(n) q^n over n >= 1 with n = k (mod 2).
QSeries eisenstein_h(unsigned k, std::size_t order);

/// d_k q^k psi^{4k}(q^2).
QSeries rhs_product(unsigned k, std::size_t order);

/// lambert_lhs(k) - rhs_product(k).
QSeries extract_cusp_term(unsigned k, std::size_t order);

/// Closed forms of T_{2k} where known: 0 for k = 1, 2 and
/// q prod (1 - q^{2n})^{12} for k = 3. Built by direct factor
/// multiplication, independent of extract_cusp_term.
std::optional<QSeries> known_cusp_form(unsigned k, std::size_t order);

/// Ordered representations of n as a sum of `fourk` triangular numbers
/// (0 allowed), by enumeration. Limited to fourk <= 16 and n <= 60.
BigInt t_count(unsigned fourk, unsigned n);

inline constexpr unsigned kBruteForceMaxParts = 16;
inline constexpr unsigned kBruteForceMaxN = 60;

/// Outcome of comparing two series.
struct SeriesCheck {
  std::string name;
  bool pass = true;
  std::optional<std::size_t> failure_exponent;
  std::string expected;  // coefficients at the failure exponent
  std::string actual;
};

SeriesCheck compare_series(std::string name, const QSeries& expected, const QSeries& actual);

struct CountRow {
  unsigned n;
  BigInt series_value;             // [q^n] psi^{4k}(q)
  BigRational closed_form;         // (sigma#_{2k-1}(2n+k) - a(2n+k)) / d_k
  std::optional<BigInt> brute;     // t_count(4k, n) when within limits
  bool agree;
};

struct CountCheck {
  unsigned k;
  unsigned n_max;
  std::vector<CountRow> rows;
  bool pass;
  std::optional<unsigned> first_failure;
};

/// Checks t_{4k}(n) = (sigma#_{2k-1}(2n+k) - a(2n+k)) / d_k for 0 <= n <= n_max
/// with a(.) read from the extracted cusp term at the given order. The
/// brute-force count is included for n <= brute_n_max when 4k is within the
/// enumeration limits. Requires 2 n_max + k <= order.
CountCheck t_count_closed_form_check(unsigned k, unsigned n_max, std::size_t order,
                                     unsigned brute_n_max = 30);

struct TransformCheck {
  unsigned l;
  std::size_t order;
  SeriesCheck check;
};

/// sum n^l q^n against sum_j j! S(l,j) q^j / (1-q)^{j+1}.
TransformCheck stirling_transform_check(unsigned l, std::size_t order);

struct VerificationReport {
  unsigned k;
  std::size_t order;
  std::string lhs_series_digest;
  std::string rhs_series_digest;
  QSeries t_series{0};
  bool t_is_zero = false;
  Parity t_parity = Parity::Zero;
  std::optional<std::size_t> first_nonzero_exponent;
  bool pass = false;
  std::optional<std::size_t> failure_exponent;
  std::vector<SeriesCheck> checks;
};

/// Runs every sub-check for one k. Requires k >= 1 and order >= 4k.
VerificationReport verify_theorem(unsigned k, std::size_t order);

}  // namespace qzeta
