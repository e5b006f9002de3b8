#pragma once

#include <map>
#include <string>

#include "ggp/rational.hpp"

namespace ggp {

/// Laurent polynomial in the single indeterminate q over Q.
///
/// Stored as a sparse exponent -> coefficient map with no zero coefficients,
/// so structural equality is mathematical equality and the zero polynomial
/// is the empty map.
class LaurentPoly {
 public:
  using Terms = std::map<int, Rational>;

  LaurentPoly() = default;
  LaurentPoly(const Rational& constant);  // NOLINT(google-explicit-constructor)
  LaurentPoly(long constant);             // NOLINT(google-explicit-constructor)
  LaurentPoly(int constant) : LaurentPoly(static_cast<long>(constant)) {}  // NOLINT

  /// Builds from an arbitrary map, dropping zero entries.
  explicit LaurentPoly(Terms terms);

  static LaurentPoly monomial(const Rational& coefficient, int exponent);
  /// q^exponent.
  static LaurentPoly q(int exponent = 1) { return monomial(Rational(1), exponent); }

  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept;
  Rational coefficient(int exponent) const;

  // Precondition for both: !is_zero().
  int min_exponent() const { return terms_.begin()->first; }
  int max_exponent() const { return terms_.rbegin()->first; }

  LaurentPoly& operator+=(const LaurentPoly& rhs);
  LaurentPoly& operator-=(const LaurentPoly& rhs);
  LaurentPoly& operator*=(const LaurentPoly& rhs);
  LaurentPoly& operator*=(const Rational& scalar);

  /// Multiplies by q^k.
  LaurentPoly shifted(int k) const;
  LaurentPoly pow(unsigned exponent) const;

  friend LaurentPoly operator-(LaurentPoly p);
  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

 private:
  Terms terms_;
};

LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b);
LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b);
LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);

/// c with b*c == a. Throws Error(divide_by_zero) for b == 0 and
/// Error(not_divisible) when the quotient is not a Laurent polynomial.
LaurentPoly exact_div(const LaurentPoly& a, const LaurentPoly& b);

/// p(p-1)...(p-m+1)/m!, and 1 for m == 0.
LaurentPoly falling_binomial(const LaurentPoly& p, unsigned m);

/// Value at q = x. Throws Error(eval_at_zero) when x == 0 and p has a
/// negative exponent.
Rational eval(const LaurentPoly& p, const Rational& x);

/// Human-readable rendering, exponents descending: "q^2-1", "1/2*q^2-1/2*q",
/// "q^-1", "0".
std::string to_string(const LaurentPoly& p);

}  // namespace ggp
