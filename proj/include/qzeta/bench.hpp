#pragma once

// Timing of series multiplication strategies on psi^{4k} expansions. All
// strategies must agree coefficient-for-coefficient before any timing is
// reported.

#include "qzeta/series.hpp"

#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace qzeta {

class BenchMismatchError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct MulStrategy {
  std::string name;
  std::function<IntSeries(const IntSeries&, const IntSeries&)> mul;
};

/// schoolbook and karatsuba.
std::vector<MulStrategy> default_strategies();

/// theta_psi(order)^{4k} by repeated squaring with the given product.
IntSeries psi_power_with(const MulStrategy& strategy, unsigned k, std::size_t order);

struct BenchRow {
  std::string strategy;
  unsigned k;
  std::size_t order;
  double seconds;
  std::string digest;
};

/// One row per (k, strategy). Requires order >= 64; throws
/// BenchMismatchError if any two strategies disagree for some k.
std::vector<BenchRow> run_bench(std::size_t order, const std::vector<unsigned>& ks = {1, 3, 5},
                                const std::vector<MulStrategy>& strategies = default_strategies());

}  // namespace qzeta
