#pragma once

#include <map>
#include <optional>
#include <string_view>

#include "ggp/laurent_poly.hpp"
#include "ggp/partition.hpp"

namespace ggp {

enum class Basis { monomial, elementary, complete, powersum, schur };

inline constexpr Basis kAllBases[] = {Basis::monomial, Basis::elementary, Basis::complete, Basis::powersum,
                                      Basis::schur};

/// One-letter tag: m, e, h, p, s.
char basis_tag(Basis b) noexcept;
/// Accepts the one-letter tag. Throws Error(parse_error) otherwise.
Basis parse_basis(std::string_view tag);

/// A symmetric function over Laurent polynomials in q, expanded in one of the
/// five classical bases. Terms with zero coefficients are never stored.
class SymFunc {
 public:
  using Terms = std::map<Partition, LaurentPoly, RevLexOrder>;

  explicit SymFunc(Basis basis = Basis::complete) : basis_(basis) {}
  SymFunc(Basis basis, Terms terms);

  /// coefficient * b_lambda.
  static SymFunc element(Basis basis, const Partition& lambda, const LaurentPoly& coefficient = 1);
  /// The constant c, i.e. c * b_().
  static SymFunc constant(Basis basis, const LaurentPoly& c) { return element(basis, Partition(), c); }
  static SymFunc one(Basis basis = Basis::complete) { return constant(basis, 1); }

  Basis basis() const noexcept { return basis_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  LaurentPoly coefficient(const Partition& lambda) const;

  /// The common size of all index partitions; nullopt when terms of different
  /// sizes are present. The zero function has no degree either.
  std::optional<int> degree() const;
  bool is_homogeneous() const { return is_zero() || degree().has_value(); }

  /// Adds c * b_lambda in place.
  void add_term(const Partition& lambda, const LaurentPoly& c);

  SymFunc& operator+=(const SymFunc& rhs);
  SymFunc& operator-=(const SymFunc& rhs);
  SymFunc& operator*=(const LaurentPoly& scalar);

  /// Map equality in a shared basis; otherwise both sides are compared in the
  /// power-sum basis.
  friend bool operator==(const SymFunc& a, const SymFunc& b);

 private:
  Basis basis_;
  Terms terms_;
};

/// Coefficientwise sum; throws Error(basis_mismatch) if the bases differ.
SymFunc add(const SymFunc& f, const SymFunc& g);
SymFunc operator+(const SymFunc& f, const SymFunc& g);
SymFunc operator-(const SymFunc& f, const SymFunc& g);
SymFunc operator-(const SymFunc& f);
SymFunc operator*(const LaurentPoly& c, SymFunc f);
SymFunc operator*(SymFunc f, const LaurentPoly& c);

/// Product, expressed in the basis of f. In h, e and p this is concatenation
/// of index partitions; m and s go through the power-sum basis. g is
/// converted to f's basis first when they differ.
SymFunc mul(const SymFunc& f, const SymFunc& g);
SymFunc operator*(const SymFunc& f, const SymFunc& g);
SymFunc pow(const SymFunc& f, unsigned exponent);

SymFunc convert(const SymFunc& f, Basis target);

/// The involution omega (e_r <-> h_r), in f's basis.
SymFunc omega(const SymFunc& f);

/// Hall scalar product; <p_lambda, p_mu> = delta * z_lambda.
LaurentPoly inner(const SymFunc& f, const SymFunc& g);

/// Plethysm f[p_b]: p_k -> p_{kb}. The result is in f's basis.
/// Throws Error(invalid_argument) for b < 1.
SymFunc plethysm_pb(const SymFunc& f, int b);

/// Replaces each p_k in the power-sum expansion of f by assign.at(k).
/// Throws Error(missing_assignment) if a needed k is absent.
LaurentPoly specialize_p(const SymFunc& f, const std::map<int, LaurentPoly>& assign);

/// Applies `fn` to every coefficient, dropping results that become zero.
template <class Fn>
SymFunc map_coefficients(const SymFunc& f, Fn&& fn) {
  SymFunc out(f.basis());
  for (const auto& [lambda, c] : f.terms()) out.add_term(lambda, fn(c));
  return out;
}

}  // namespace ggp
