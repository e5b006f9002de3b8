#pragma once

// Text and structured (JSON) forms of the library's values.
//
// Structured output is byte-deterministic: partitions appear in
// reverse-lexicographic order within a degree, Laurent exponents descending,
// object keys in a fixed order.
//
//   LaurentPoly  {"2": "1", "0": "-1"}            exponent -> rational "a/b"
//   Partition    [2, 1]
//   SymFunc      {"basis": "h", "terms": [{"partition": [2], "coefficient": <LaurentPoly>}, ...]}
//   RhoExpansion {"q": "2", "coeffs": [{"partition": [3], "coefficient": "1"}, ...], "dim": "2"}
//
// Expression files accept either a SymFunc document or a rho combination
//   {"rho_terms": [{"partition": [3], "coefficient": "1"}, ...]}
// where coefficients may be rational strings, integers, or LaurentPoly objects.

#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "ggp/gelfand_graev.hpp"
#include "ggp/laurent_poly.hpp"
#include "ggp/symfunc.hpp"

namespace ggp {

/// "(q^2-1)*h[2] - (q-1)*h[1,1]"; "0" for the zero function; the degree-0
/// term prints as its bare coefficient.
std::string render_text(const SymFunc& f);

/// "1*rho[3] + 1*rho[2,1]".
std::string render_text(const RhoExpansion& e);

std::string to_structured(const LaurentPoly& p);
std::string to_structured(const SymFunc& f);
std::string to_structured(const RhoExpansion& e);

using RhoTerms = std::vector<std::pair<Partition, LaurentPoly>>;
using Expression = std::variant<SymFunc, RhoTerms>;

/// Throws Error(parse_error) on malformed JSON or schema violations.
LaurentPoly parse_laurent(std::string_view json_text);
SymFunc parse_symfunc(std::string_view json_text);
Expression parse_expression(std::string_view json_text);

/// The symmetric function an expression denotes (rho combinations expand in
/// the complete basis).
SymFunc expression_value(const Expression& e);

}  // namespace ggp
