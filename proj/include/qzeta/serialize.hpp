#pragma once

// JSON forms of the value types. Coefficients are always exact strings:
// series as {"order": N, "coeffs": ["num/den", ...]}, polynomials as
// {"degree": d, "coeffs": ["...", ...]}.

#include "qzeta/identity.hpp"
#include "qzeta/numerics.hpp"
#include "qzeta/qpoly.hpp"
#include "qzeta/series.hpp"

#include <json.hpp>

#include <string>

namespace qzeta {

nlohmann::json to_json(const QSeries& s);
/// Throws std::invalid_argument on a malformed document.
QSeries series_from_json(const nlohmann::json& j);

nlohmann::json to_json(const IntPolynomial& p);
IntPolynomial polynomial_from_json(const nlohmann::json& j);

nlohmann::json to_json(const SeriesCheck& c);
nlohmann::json to_json(const VerificationReport& r);
nlohmann::json to_json(const CountCheck& c);
nlohmann::json to_json(const LimitReport& r);

/// 64-bit FNV-1a of the serialized coefficients, as 16 hex digits.
std::string digest(const QSeries& s);
std::string digest(const IntSeries& s);

}  // namespace qzeta
