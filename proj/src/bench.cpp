#include "qzeta/bench.hpp"

#include "qzeta/serialize.hpp"

#include <chrono>

namespace qzeta {

std::vector<MulStrategy> default_strategies() {
  return {
      {"schoolbook", [](const IntSeries& a, const IntSeries& b) { return mul_schoolbook(a, b); }},
      {"karatsuba", [](const IntSeries& a, const IntSeries& b) { return mul_karatsuba(a, b); }},
  };
}

IntSeries psi_power_with(const MulStrategy& strategy, unsigned k, std::size_t order) {
  IntSeries result = IntSeries::one(order);
  IntSeries base = theta_psi<BigInt>(order);
  for (unsigned e = 4 * k; e > 0; e >>= 1U) {
    if (e & 1U) result = strategy.mul(result, base);
    if (e > 1) base = strategy.mul(base, base);
  }
  return result;
}

std::vector<BenchRow> run_bench(std::size_t order, const std::vector<unsigned>& ks,
                                const std::vector<MulStrategy>& strategies) {
  if (order < 64) throw std::invalid_argument("bench: order must be at least 64");
  std::vector<BenchRow> rows;
  for (unsigned k : ks) {
    const std::size_t first = rows.size();
    for (const auto& s : strategies) {
      const auto start = std::chrono::steady_clock::now();
      const IntSeries value = psi_power_with(s, k, order);
      const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
      rows.push_back({s.name, k, order, elapsed.count(), digest(value)});
    }
    for (std::size_t i = first + 1; i < rows.size(); ++i) {
      if (rows[i].digest != rows[first].digest) {
        throw BenchMismatchError("bench: strategy '" + rows[i].strategy + "' disagrees with '" +
                                 rows[first].strategy + "' for k = " + std::to_string(k));
      }
    }
  }
  return rows;
}

}  // namespace qzeta
