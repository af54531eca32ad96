#pragma once

// Exact integer/rational arithmetic and the combinatorial number generators
// (Stirling numbers, Bernoulli numbers, divisor sums) used by the q-series
// constructions.

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace qzeta {

/// Arbitrary-precision integer.
using BigInt = mpz_class;

/// Arbitrary-precision fraction. GMP keeps every value produced through its
/// arithmetic in lowest terms with a positive denominator; values built from
/// raw numerator/denominator pairs must go through make_rational().
using BigRational = mpq_class;

BigRational make_rational(const BigInt& numerator, const BigInt& denominator);

/// Parses "n" or "n/d" (decimal, optional leading '-'). Throws
/// std::invalid_argument on malformed input or a zero denominator.
BigRational parse_rational(std::string_view text);

/// Always "num/den", even when den == 1.
std::string to_fraction_string(const BigRational& value);

bool is_integer(const BigRational& value);

BigInt factorial(unsigned n);
BigInt binomial(unsigned n, unsigned k);
BigInt power(const BigInt& base, unsigned exponent);

/// Stirling number of the second kind S(n, j); zero when j > n. Backed by a
/// process-wide table that grows on demand and is safe for concurrent use.
BigInt stirling2(unsigned n, unsigned j);

/// Bernoulli number B_m for even m (B_1 = -1/2 convention internally).
/// Throws std::invalid_argument for odd m.
BigRational bernoulli(unsigned m);

/// d_k = -(-16)^k B_{2k} (4^k - 1) / (8k). Requires k >= 1.
BigRational d_constant(unsigned k);

/// sigma_k(n) = sum of d^k over the divisors d of n. Requires n >= 1.
BigInt sigma(unsigned k, std::uint64_t n);

/// Sum of d^k over divisors d of n with n/d odd. Requires n >= 1.
BigInt sigma_sharp(unsigned k, std::uint64_t n);

/// The rational r with zeta(2k) = r * pi^(2k).
BigRational zeta_even_exact(unsigned k);

}  // namespace qzeta
