#include "ggp/serialize.hpp"

#include <cstdint>
#include <limits>

#include <json.hpp>

#include "ggp/error.hpp"

namespace ggp {

namespace {

using Json = nlohmann::ordered_json;

constexpr std::int64_t kMaxPart = std::numeric_limits<int>::max();

std::string render_terms(const std::vector<std::pair<std::string, LaurentPoly>>& terms) {
  if (terms.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [symbol, coefficient] : terms) {
    // Pull the sign of the leading (highest-exponent) coefficient outside.
    const bool negative = coefficient.terms().rbegin()->second < 0;
    const LaurentPoly magnitude = negative ? -coefficient : coefficient;
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    std::string c = to_string(magnitude);
    if (magnitude.terms().size() > 1) c = "(" + c + ")";
    out += symbol.empty() ? c : c + "*" + symbol;
  }
  return out;
}

Json laurent_json(const LaurentPoly& p) {
  Json out = Json::object();
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) out[std::to_string(it->first)] = to_string(it->second);
  return out;
}

Json partition_json(const Partition& lambda) {
  Json out = Json::array();
  for (int part : lambda.parts()) out.push_back(part);
  return out;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

[[noreturn]] void schema_error(const std::string& what) { throw Error(ErrorCode::parse_error, what); }

int parse_exponent(const std::string& key) {
  std::size_t used = 0;
  int value = 0;
  try {
    value = std::stoi(key, &used);
  } catch (const std::exception&) {
    schema_error("exponent '" + key + "' is not an integer");
  }
  if (used != key.size()) schema_error("exponent '" + key + "' is not an integer");
  return value;
}

// JSON integers that fit a signed 64-bit value; larger values must be strings.
Rational integer_from(const Json& j) {
  if (j.is_number_unsigned() && j.get<std::uint64_t>() > static_cast<std::uint64_t>(INT64_MAX)) {
    schema_error("integer out of range; write large values as strings");
  }
  return Rational(Integer(std::to_string(j.get<std::int64_t>())));
}

LaurentPoly laurent_from(const Json& j) {
  if (j.is_number_integer()) return LaurentPoly(integer_from(j));
  if (j.is_string()) return LaurentPoly(parse_rational(j.get<std::string>()));
  if (!j.is_object()) schema_error("coefficient must be a rational string, an integer, or an exponent map");
  LaurentPoly out;
  for (const auto& [key, value] : j.items()) {
    if (!value.is_string() && !value.is_number_integer()) schema_error("Laurent coefficient must be a rational");
    const Rational c = value.is_string() ? parse_rational(value.get<std::string>()) : integer_from(value);
    out += LaurentPoly::monomial(c, parse_exponent(key));
  }
  return out;
}

Partition partition_from(const Json& j) {
  if (!j.is_array()) schema_error("partition must be an array of positive integers");
  std::vector<int> parts;
  for (const auto& part : j) {
    if (!part.is_number_integer()) schema_error("partition parts must be integers");
    const bool too_big = part.is_number_unsigned() && part.get<std::uint64_t>() > static_cast<std::uint64_t>(kMaxPart);
    const auto value = part.get<std::int64_t>();
    if (too_big || value < 1 || value > kMaxPart) schema_error("partition part out of range");
    parts.push_back(static_cast<int>(value));
  }
  try {
    return Partition(std::move(parts));
  } catch (const Error& e) {
    schema_error(e.what());
  }
}

RhoTerms terms_from(const Json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_array()) schema_error(std::string("missing array '") + key + "'");
  RhoTerms out;
  for (const auto& term : j.at(key)) {
    if (!term.is_object() || !term.contains("partition") || !term.contains("coefficient")) {
      schema_error("each term needs 'partition' and 'coefficient'");
    }
    out.emplace_back(partition_from(term.at("partition")), laurent_from(term.at("coefficient")));
  }
  return out;
}

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    schema_error(std::string("invalid JSON: ") + e.what());
  }
}

SymFunc symfunc_from(const Json& j) {
  if (!j.is_object() || !j.contains("basis") || !j.at("basis").is_string()) schema_error("missing 'basis' tag");
  SymFunc out(parse_basis(j.at("basis").get<std::string>()));
  for (const auto& [lambda, c] : terms_from(j, "terms")) out.add_term(lambda, c);
  return out;
}

}  // namespace

std::string render_text(const SymFunc& f) {
  std::vector<std::pair<std::string, LaurentPoly>> terms;
  const std::string tag(1, basis_tag(f.basis()));
  for (const auto& [lambda, c] : f.terms()) terms.emplace_back(lambda.empty() ? "" : tag + to_string(lambda), c);
  return render_terms(terms);
}

std::string render_text(const RhoExpansion& e) {
  std::vector<std::pair<std::string, LaurentPoly>> terms;
  for (const auto& [lambda, c] : e.coeffs) terms.emplace_back(lambda.empty() ? "" : "rho" + to_string(lambda), c);
  return render_terms(terms);
}

std::string to_structured(const LaurentPoly& p) { return dump(laurent_json(p)); }

std::string to_structured(const SymFunc& f) {
  Json terms = Json::array();
  for (const auto& [lambda, c] : f.terms()) {
    terms.push_back(Json{{"partition", partition_json(lambda)}, {"coefficient", laurent_json(c)}});
  }
  return dump(Json{{"basis", std::string(1, basis_tag(f.basis()))}, {"terms", std::move(terms)}});
}

std::string to_structured(const RhoExpansion& e) {
  Json coeffs = Json::array();
  for (const auto& [lambda, c] : e.coeffs) {
    coeffs.push_back(Json{{"partition", partition_json(lambda)}, {"coefficient", to_string(c)}});
  }
  return dump(Json{{"q", to_string(e.q_value)}, {"coeffs", std::move(coeffs)}, {"dim", to_string(dim_sum(e))}});
}

LaurentPoly parse_laurent(std::string_view json_text) { return laurent_from(parse_json(json_text)); }

SymFunc parse_symfunc(std::string_view json_text) { return symfunc_from(parse_json(json_text)); }

Expression parse_expression(std::string_view json_text) {
  const Json j = parse_json(json_text);
  if (j.is_object() && j.contains("rho_terms")) {
    if (j.contains("basis") || j.contains("terms")) schema_error("expression is both a rho combination and a SymFunc");
    return terms_from(j, "rho_terms");
  }
  return symfunc_from(j);
}

SymFunc expression_value(const Expression& e) {
  if (const auto* f = std::get_if<SymFunc>(&e)) return *f;
  return rho_combination(std::get<RhoTerms>(e));
}

}  // namespace ggp
