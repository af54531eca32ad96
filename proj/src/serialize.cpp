#include "qzeta/serialize.hpp"

#include <cstdint>
#include <cstdio>
#include <stdexcept>

namespace qzeta {

namespace {

using nlohmann::json;

std::string fnv1a_hex(const std::vector<std::string>& parts) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  auto feed = [&h](unsigned char c) {
    h ^= c;
    h *= 0x100000001b3ULL;
  };
  for (const auto& p : parts) {
    for (unsigned char c : p) feed(c);
    feed(',');
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

template <class T>
json optional_json(const std::optional<T>& v) {
  return v ? json(*v) : json(nullptr);
}

}  // namespace

json to_json(const QSeries& s) {
  json coeffs = json::array();
  for (const auto& c : s.coeffs()) coeffs.push_back(to_fraction_string(c));
  return json{{"order", s.order()}, {"coeffs", std::move(coeffs)}};
}

QSeries series_from_json(const json& j) {
  if (!j.is_object() || !j.contains("order") || !j.contains("coeffs") ||
      !j["order"].is_number_unsigned() || !j["coeffs"].is_array()) {
    throw std::invalid_argument("series JSON must have unsigned 'order' and array 'coeffs'");
  }
  const auto order = j["order"].get<std::size_t>();
  const auto& arr = j["coeffs"];
  if (arr.size() != order + 1) {
    throw std::invalid_argument("series JSON: coeffs length must be order + 1");
  }
  std::vector<BigRational> c;
  c.reserve(arr.size());
  for (const auto& item : arr) {
    if (!item.is_string()) throw std::invalid_argument("series JSON: coefficients must be strings");
    c.push_back(parse_rational(item.get<std::string>()));
  }
  return QSeries(order, std::move(c));
}

json to_json(const IntPolynomial& p) {
  json coeffs = json::array();
  for (const auto& c : p.coeffs()) coeffs.push_back(c.get_str());
  return json{{"degree", p.degree()}, {"coeffs", std::move(coeffs)}};
}

IntPolynomial polynomial_from_json(const json& j) {
  if (!j.is_object() || !j.contains("degree") || !j.contains("coeffs") ||
      !j["degree"].is_number_integer() || !j["coeffs"].is_array()) {
    throw std::invalid_argument("polynomial JSON must have integer 'degree' and array 'coeffs'");
  }
  std::vector<BigInt> c;
  for (const auto& item : j["coeffs"]) {
    if (!item.is_string()) {
      throw std::invalid_argument("polynomial JSON: coefficients must be strings");
    }
    const BigRational r = parse_rational(item.get<std::string>());
    if (!is_integer(r)) throw std::invalid_argument("polynomial JSON: non-integer coefficient");
    c.push_back(r.get_num());
  }
  IntPolynomial p(std::move(c));
  if (p.degree() != j["degree"].get<int>()) {
    throw std::invalid_argument("polynomial JSON: degree does not match coefficients");
  }
  return p;
}

json to_json(const SeriesCheck& c) {
  json out{{"name", c.name}, {"pass", c.pass}, {"failure_exponent", optional_json(c.failure_exponent)}};
  if (!c.pass) {
    out["expected"] = c.expected;
    out["actual"] = c.actual;
  }
  return out;
}

json to_json(const VerificationReport& r) {
  json checks = json::array();
  for (const auto& c : r.checks) checks.push_back(to_json(c));
  return json{{"k", r.k},
              {"order", r.order},
              {"lhs_series_digest", r.lhs_series_digest},
              {"rhs_series_digest", r.rhs_series_digest},
              {"t_series", to_json(r.t_series)},
              {"t_is_zero", r.t_is_zero},
              {"t_parity", to_string(r.t_parity)},
              {"first_nonzero_exponent", optional_json(r.first_nonzero_exponent)},
              {"status", r.pass ? "pass" : "fail"},
              {"failure_exponent", optional_json(r.failure_exponent)},
              {"checks", std::move(checks)}};
}

json to_json(const CountCheck& c) {
  json rows = json::array();
  for (const auto& row : c.rows) {
    rows.push_back(json{{"n", row.n},
                        {"series", row.series_value.get_str()},
                        {"closed_form", row.closed_form.get_str()},
                        {"brute_force", row.brute ? json(row.brute->get_str()) : json(nullptr)},
                        {"agree", row.agree}});
  }
  return json{{"fourk", 4 * c.k},
              {"n_max", c.n_max},
              {"status", c.pass ? "pass" : "fail"},
              {"first_failure", optional_json(c.first_failure)},
              {"rows", std::move(rows)}};
}

json to_json(const LimitReport& r) {
  return json{{"k", r.k},
              {"q_points", r.q_points},
              {"lhs_values", r.lhs_values},
              {"rhs_values", r.rhs_values},
              {"target", r.target},
              {"relative_errors", r.relative_errors},
              {"converging", r.converging}};
}

std::string digest(const QSeries& s) {
  std::vector<std::string> parts;
  parts.reserve(s.order() + 1);
  for (const auto& c : s.coeffs()) parts.push_back(to_fraction_string(c));
  return fnv1a_hex(parts);
}

std::string digest(const IntSeries& s) {
  std::vector<std::string> parts;
  parts.reserve(s.order() + 1);
  for (const auto& c : s.coeffs()) parts.push_back(c.get_str() + "/1");
  return fnv1a_hex(parts);
}

}  // namespace qzeta
