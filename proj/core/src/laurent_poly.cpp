#include "ggp/laurent_poly.hpp"

#include <utility>
#include <vector>

#include "ggp/error.hpp"

namespace ggp {

namespace {

void accumulate(LaurentPoly::Terms& terms, int exponent, const Rational& value) {
  if (value == 0) return;
  auto [it, inserted] = terms.try_emplace(exponent, value);
  if (!inserted) {
    it->second += value;
    if (it->second == 0) terms.erase(it);
  }
}

}  // namespace

LaurentPoly::LaurentPoly(const Rational& constant) {
  if (constant != 0) terms_.emplace(0, constant);
}

LaurentPoly::LaurentPoly(long constant) {
  if (constant != 0) terms_.emplace(0, Rational(constant));
}

LaurentPoly::LaurentPoly(Terms terms) {
  for (auto& [e, c] : terms) {
    if (c != 0) terms_.emplace(e, std::move(c));
  }
}

LaurentPoly LaurentPoly::monomial(const Rational& coefficient, int exponent) {
  LaurentPoly out;
  if (coefficient != 0) out.terms_.emplace(exponent, coefficient);
  return out;
}

bool LaurentPoly::is_constant() const noexcept {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0);
}

Rational LaurentPoly::coefficient(int exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? Rational(0) : it->second;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& rhs) {
  for (const auto& [e, c] : rhs.terms_) accumulate(terms_, e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& rhs) {
  for (const auto& [e, c] : rhs.terms_) accumulate(terms_, e, -c);
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& rhs) {
  Terms out;
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : rhs.terms_) accumulate(out, ea + eb, ca * cb);
  }
  terms_ = std::move(out);
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const Rational& scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, c] : terms_) c *= scalar;
  return *this;
}

LaurentPoly LaurentPoly::shifted(int k) const {
  LaurentPoly out;
  for (const auto& [e, c] : terms_) out.terms_.emplace_hint(out.terms_.end(), e + k, c);
  return out;
}

LaurentPoly LaurentPoly::pow(unsigned exponent) const {
  LaurentPoly result(1L);
  LaurentPoly base = *this;
  while (exponent != 0) {
    if (exponent & 1U) result *= base;
    exponent >>= 1U;
    if (exponent != 0) base *= base;
  }
  return result;
}

LaurentPoly operator-(LaurentPoly p) {
  for (auto& [e, c] : p.terms_) c = -c;
  return p;
}

LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly out = a;
  out *= b;
  return out;
}


LaurentPoly exact_div(const LaurentPoly& a, const LaurentPoly& b) {
  if (b.is_zero()) throw Error(ErrorCode::divide_by_zero, "division by the zero Laurent polynomial");
  if (a.is_zero()) return {};

  // Factor out the lowest powers of q; what remains are ordinary polynomials
  // with nonzero constant terms, whose quotient (if any) is a polynomial.
  const int shift = a.min_exponent() - b.min_exponent();
  const int b_deg = b.max_exponent() - b.min_exponent();
  const int a_deg = a.max_exponent() - a.min_exponent();

  std::vector<Rational> rem(static_cast<std::size_t>(a_deg) + 1);
  for (const auto& [e, c] : a.terms()) rem[static_cast<std::size_t>(e - a.min_exponent())] = c;
  std::vector<Rational> div(static_cast<std::size_t>(b_deg) + 1);
  for (const auto& [e, c] : b.terms()) div[static_cast<std::size_t>(e - b.min_exponent())] = c;

  LaurentPoly::Terms quotient;
  const Rational& lead = div.back();
  for (int k = a_deg - b_deg; k >= 0; --k) {
    const Rational factor = rem[static_cast<std::size_t>(k + b_deg)] / lead;
    if (factor == 0) continue;
    for (int j = 0; j <= b_deg; ++j) rem[static_cast<std::size_t>(k + j)] -= factor * div[static_cast<std::size_t>(j)];
    quotient.emplace(k + shift, factor);
  }
  for (const auto& r : rem) {
    if (r != 0) {
      throw Error(ErrorCode::not_divisible, "(" + to_string(a) + ") is not divisible by (" + to_string(b) + ")");
    }
  }
  return LaurentPoly(std::move(quotient));
}

LaurentPoly falling_binomial(const LaurentPoly& p, unsigned m) {
  LaurentPoly out(1L);
  for (unsigned k = 0; k < m; ++k) out *= p - LaurentPoly(static_cast<long>(k));
  out *= Rational(1) / Rational(factorial(m));
  return out;
}

Rational eval(const LaurentPoly& p, const Rational& x) {
  if (p.is_zero()) return 0;
  if (x == 0) {
    if (p.min_exponent() < 0) {
      throw Error(ErrorCode::eval_at_zero, "cannot evaluate " + to_string(p) + " at q = 0");
    }
    return p.coefficient(0);
  }
  // Horner over the dense exponent range, starting from the top.
  Rational acc = 0;
  int prev = p.max_exponent();
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    for (int gap = prev - it->first; gap > 0; --gap) acc *= x;
    acc += it->second;
    prev = it->first;
  }
  Rational tail = 1;
  const Rational base = prev >= 0 ? x : Rational(1) / x;
  for (int k = prev >= 0 ? prev : -prev; k > 0; --k) tail *= base;
  return acc * tail;
}

std::string to_string(const LaurentPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto& [e, c] = *it;
    const bool negative = c < 0;
    const Rational mag = negative ? Rational(-c) : c;
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? '-' : '+';
    }
    first = false;
    if (e == 0) {
      out += to_string(mag);
      continue;
    }
    if (mag != 1) out += to_string(mag) + "*";
    out += 'q';
    if (e != 1) out += "^" + std::to_string(e);
  }
  return out;
}

}  // namespace ggp
