#include "qzeta/series.hpp"

namespace qzeta {

std::string to_string(Parity p) {
  switch (p) {
    case Parity::Even:
      return "even";
    case Parity::Odd:
      return "odd";
    case Parity::Mixed:
      return "mixed";
    case Parity::Zero:
      return "zero";
  }
  return "unknown";
}

template class Series<BigRational>;
template class Series<BigInt>;

}  // namespace qzeta
