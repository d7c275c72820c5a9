#pragma once

#include <string>
#include <vector>

#include "aperiodic/algebra/field.hpp"
#include "aperiodic/cli/config.hpp"

namespace aperiodic::cli {

inline constexpr const char* kSchemaTag = "aperiodic.report/1";

/// Rational 10^-digits.
algebra::Rational accuracyOf(int digits);

/// Decimal string of x with `digits` places after the point, rounded to nearest.
std::string decimal(const algebra::Rational& x, int digits);
/// Decimal string of a double with `digits` significant places (non-certified data).
std::string decimal(double x, int digits = 12);

/// {"value": decimal, "accuracy": "1e-d"}.
Json realJson(const algebra::CertifiedReal& x, int digits);
/// {"exact": power-basis text, "value": decimal, "accuracy": ...}.
Json elementJson(const algebra::FieldElement& x, int digits);

/// Parses "p/q", "x+y*phi", "(x+y*phi)/sqrt5", "1/sqrt5", decimal literals such as "0.5".
/// Throws DomainError on anything else.
algebra::FieldElement parseElement(const std::string& text);
algebra::Rational parseRational(const std::string& text);

/// Sorted keys, two-space indent, trailing newline.
std::string canonicalDump(const Json& j);

/// Rows joined by commas, header first.
std::string csvTable(const std::vector<std::string>& header, const std::vector<std::vector<std::string>>& rows);

} // namespace aperiodic::cli
