#include "ggp/symfunc.hpp"

#include <string>

#include "ggp/error.hpp"
#include "transition.hpp"

namespace ggp {

namespace {

bool multiplicative(Basis b) {
  return b == Basis::complete || b == Basis::elementary || b == Basis::powersum;
}

// Applies a per-degree transition to every term of f.
SymFunc apply(const SymFunc& f, Basis target, bool towards_powersum) {
  SymFunc out(target);
  for (const auto& [lambda, c] : f.terms()) {
    const auto table = towards_powersum ? detail::to_powersum(f.basis(), lambda.size())
                                        : detail::from_powersum(target, lambda.size());
    for (const auto& [j, r] : table->rows[table->position(lambda)]) {
      LaurentPoly term = c;
      term *= r;
      out.add_term(table->index[j], term);
    }
  }
  return out;
}

SymFunc to_p(const SymFunc& f) {
  if (f.basis() == Basis::powersum) return f;
  return apply(f, Basis::powersum, true);
}

}  // namespace

char basis_tag(Basis b) noexcept {
  switch (b) {
    case Basis::monomial: return 'm';
    case Basis::elementary: return 'e';
    case Basis::complete: return 'h';
    case Basis::powersum: return 'p';
    case Basis::schur: return 's';
  }
  return '?';
}

Basis parse_basis(std::string_view tag) {
  if (tag.size() == 1) {
    for (Basis b : kAllBases) {
      if (basis_tag(b) == tag[0]) return b;
    }
  }
  throw Error(ErrorCode::parse_error, "unknown basis '" + std::string(tag) + "' (expected m, e, h, p or s)");
}

SymFunc::SymFunc(Basis basis, Terms terms) : basis_(basis) {
  for (auto& [lambda, c] : terms) {
    if (!c.is_zero()) terms_.emplace(lambda, std::move(c));
  }
}

SymFunc SymFunc::element(Basis basis, const Partition& lambda, const LaurentPoly& coefficient) {
  SymFunc out(basis);
  out.add_term(lambda, coefficient);
  return out;
}

LaurentPoly SymFunc::coefficient(const Partition& lambda) const {
  auto it = terms_.find(lambda);
  return it == terms_.end() ? LaurentPoly() : it->second;
}

std::optional<int> SymFunc::degree() const {
  if (terms_.empty()) return std::nullopt;
  // Terms are ordered by size first.
  const int lo = terms_.begin()->first.size();
  const int hi = terms_.rbegin()->first.size();
  if (lo != hi) return std::nullopt;
  return lo;
}

void SymFunc::add_term(const Partition& lambda, const LaurentPoly& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(lambda, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

SymFunc& SymFunc::operator+=(const SymFunc& rhs) {
  if (rhs.basis_ != basis_) {
    throw Error(ErrorCode::basis_mismatch, std::string("cannot add ") + basis_tag(rhs.basis_) + "-basis to " +
                                               basis_tag(basis_) + "-basis; convert first");
  }
  for (const auto& [lambda, c] : rhs.terms_) add_term(lambda, c);
  return *this;
}

SymFunc& SymFunc::operator-=(const SymFunc& rhs) { return *this += -rhs; }

SymFunc& SymFunc::operator*=(const LaurentPoly& scalar) {
  if (scalar.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [lambda, c] : terms_) c *= scalar;
  return *this;
}

bool operator==(const SymFunc& a, const SymFunc& b) {
  if (a.basis_ == b.basis_) return a.terms_ == b.terms_;
  return to_p(a).terms_ == to_p(b).terms_;
}

SymFunc add(const SymFunc& f, const SymFunc& g) {
  SymFunc out = f;
  out += g;
  return out;
}

SymFunc operator+(const SymFunc& f, const SymFunc& g) { return add(f, g); }

SymFunc operator-(const SymFunc& f, const SymFunc& g) {
  SymFunc out = f;
  out -= g;
  return out;
}

SymFunc operator-(const SymFunc& f) { return map_coefficients(f, [](const LaurentPoly& c) { return -c; }); }

SymFunc operator*(const LaurentPoly& c, SymFunc f) { return f *= c; }
SymFunc operator*(SymFunc f, const LaurentPoly& c) { return f *= c; }

SymFunc mul(const SymFunc& f, const SymFunc& g) {
  const Basis basis = f.basis();
  if (!multiplicative(basis)) return convert(mul(to_p(f), to_p(g)), basis);
  const SymFunc& rhs = g.basis() == basis ? g : convert(g, basis);
  SymFunc out(basis);
  for (const auto& [la, ca] : f.terms()) {
    for (const auto& [lb, cb] : rhs.terms()) out.add_term(concat_sort(la, lb), ca * cb);
  }
  return out;
}

SymFunc operator*(const SymFunc& f, const SymFunc& g) { return mul(f, g); }

SymFunc pow(const SymFunc& f, unsigned exponent) {
  SymFunc out = SymFunc::one(f.basis());
  for (unsigned k = 0; k < exponent; ++k) out = mul(out, f);
  return out;
}

SymFunc convert(const SymFunc& f, Basis target) {
  if (f.basis() == target) return f;
  const SymFunc p = to_p(f);
  if (target == Basis::powersum) return p;
  return apply(p, target, false);
}

SymFunc omega(const SymFunc& f) {
  SymFunc p(Basis::powersum);
  const SymFunc pf = to_p(f);
  for (const auto& [lambda, c] : pf.terms()) {
    p.add_term(lambda, (lambda.size() - lambda.length()) % 2 == 0 ? c : -c);
  }
  return convert(p, f.basis());
}

LaurentPoly inner(const SymFunc& f, const SymFunc& g) {
  const SymFunc pf = to_p(f);
  const SymFunc pg = to_p(g);
  LaurentPoly total;
  for (const auto& [lambda, c] : pf.terms()) {
    auto it = pg.terms().find(lambda);
    if (it == pg.terms().end()) continue;
    total += c * it->second * Rational(z_stat(lambda));
  }
  return total;
}

SymFunc plethysm_pb(const SymFunc& f, int b) {
  if (b < 1) throw Error(ErrorCode::invalid_argument, "plethysm f[p_b] needs b >= 1");
  if (b == 1) return f;
  SymFunc out(Basis::powersum);
  const SymFunc pf = to_p(f);
  for (const auto& [lambda, c] : pf.terms()) out.add_term(scale_parts(lambda, b), c);
  return convert(out, f.basis());
}

LaurentPoly specialize_p(const SymFunc& f, const std::map<int, LaurentPoly>& assign) {
  LaurentPoly total;
  const SymFunc pf = to_p(f);
  for (const auto& [lambda, c] : pf.terms()) {
    LaurentPoly term = c;
    for (int k : lambda.parts()) {
      auto it = assign.find(k);
      if (it == assign.end()) {
        throw Error(ErrorCode::missing_assignment, "no value assigned to p_" + std::to_string(k));
      }
      term *= it->second;
    }
    total += term;
  }
  return total;
}

}  // namespace ggp
