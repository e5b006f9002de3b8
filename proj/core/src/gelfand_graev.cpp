#include "ggp/gelfand_graev.hpp"

#include <algorithm>
#include <functional>
#include <string>

#include "ggp/error.hpp"
#include "ggp/hall_littlewood.hpp"

namespace ggp {

namespace {

void require_nonnegative(int n, const char* what) {
  if (n < 0) throw Error(ErrorCode::invalid_argument, std::string(what) + " needs n >= 0");
}

void require_positive(int n, const char* what) {
  if (n < 1) throw Error(ErrorCode::invalid_argument, std::string(what) + " needs n >= 1");
}

SymFunc h(const Partition& lambda, const LaurentPoly& c = 1) { return SymFunc::element(Basis::complete, lambda, c); }

// Shared enumeration for the orbit-family sums. For each degree i a multiset
// nu of indices (a partition of the weight w_i, sum_i i w_i = n) contributes
//   count(i)(count(i)-1)...(count(i)-l(nu)+1) / prod_j m_j(nu)!
//     * sign^{|nu|} * prod_j factor(i, j)^{m_j(nu)}.
SymFunc sum_over_families(int n, Basis basis, const std::function<LaurentPoly(int)>& count,
                          const std::function<SymFunc(int, int)>& factor, bool alternating) {
  // Block values per (degree i, multiset nu), reused across the recursion.
  std::vector<std::vector<std::pair<int, SymFunc>>> blocks(static_cast<std::size_t>(n) + 1);
  for (int i = 1; i <= n; ++i) {
    const LaurentPoly c_i = count(i);
    std::vector<SymFunc> factors(static_cast<std::size_t>(n / i) + 1, SymFunc(basis));
    for (int j = 1; j <= n / i; ++j) factors[static_cast<std::size_t>(j)] = factor(i, j);
    for (int w = 1; w * i <= n; ++w) {
      for (const auto& nu : partitions_of(w)) {
        const auto m = static_cast<unsigned>(nu.length());
        Rational weight(factorial(m));
        for (const auto& [part, mult] : nu.multiplicities()) weight /= Rational(factorial(static_cast<unsigned>(mult)));
        if (alternating && w % 2 != 0) weight = -weight;
        SymFunc block = SymFunc::constant(basis, falling_binomial(c_i, m) * weight);
        for (int part : nu.parts()) block = mul(block, factors[static_cast<std::size_t>(part)]);
        blocks[static_cast<std::size_t>(i)].emplace_back(w, std::move(block));
      }
    }
  }

  SymFunc total(basis);
  std::function<void(int, int, const SymFunc&)> descend = [&](int i, int remaining, const SymFunc& acc) {
    if (remaining == 0) {
      total += acc;
      return;
    }
    if (i > remaining) return;
    descend(i + 1, remaining, acc);
    for (const auto& [w, block] : blocks[static_cast<std::size_t>(i)]) {
      if (w * i <= remaining) descend(i + 1, remaining - w * i, mul(acc, block));
    }
  };
  descend(1, n, SymFunc::one(basis));
  return total;
}

}  // namespace

int mobius(int n) {
  if (n < 1) throw Error(ErrorCode::invalid_argument, "mobius needs n >= 1");
  int result = 1;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    n /= p;
    if (n % p == 0) return 0;
    result = -result;
  }
  if (n > 1) result = -result;
  return result;
}

LaurentPoly count_irreducible(int i) {
  require_positive(i, "count_irreducible");
  LaurentPoly total;
  for (int d = 1; d <= i; ++d) {
    if (i % d == 0) total += LaurentPoly::monomial(Rational(mobius(d)), i / d);
  }
  total *= Rational(1, i);
  return total;
}

LaurentPoly count_irreducible_nonzero_root(int i) {
  LaurentPoly count = count_irreducible(i);
  if (i == 1) count -= 1;
  return count;
}

std::vector<SymFunc> rho_sequence(int max_n) {
  require_nonnegative(max_n, "rho");
  std::vector<SymFunc> rhos;
  rhos.reserve(static_cast<std::size_t>(max_n) + 1);
  rhos.push_back(SymFunc::one());
  for (int n = 1; n <= max_n; ++n) {
    SymFunc next = h(Partition::row(n), LaurentPoly::q(n) - 1);
    for (int k = 1; k < n; ++k) next -= mul(rhos[static_cast<std::size_t>(n - k)], h(Partition::row(k)));
    rhos.push_back(std::move(next));
  }
  return rhos;
}

SymFunc rho(int n) { return rho_sequence(n).back(); }

LaurentPoly rho_coeff(int n, const Partition& lambda) {
  if (lambda.size() != n) {
    throw Error(ErrorCode::size_mismatch, "rho_coeff: " + to_string(lambda) + " is not a partition of " +
                                              std::to_string(n));
  }
  std::map<Partition, LaurentPoly, RevLexOrder> memo;
  std::function<LaurentPoly(const Partition&)> coeff = [&](const Partition& mu) -> LaurentPoly {
    if (mu.length() <= 1) return mu.empty() ? LaurentPoly(1) : LaurentPoly::q(mu.size()) - 1;
    if (auto it = memo.find(mu); it != memo.end()) return it->second;
    LaurentPoly total;
    for (const auto& [part, mult] : mu.multiplicities()) total -= coeff(remove_part(mu, part));
    memo.emplace(mu, total);
    return total;
  };
  return coeff(lambda);
}

SymFunc rho_via_hl(int n) {
  require_nonnegative(n, "rho_via_hl");
  return LaurentPoly::q(n) * qr_symfunc(n, HLParam::inverse_q());
}

SymFunc rho_via_m(int n) {
  require_nonnegative(n, "rho_via_m");
  std::map<int, LaurentPoly> assign;
  for (int k = 1; k <= n; ++k) assign.emplace(k, LaurentPoly::q(k) - 1);
  SymFunc out(Basis::complete);
  for (const auto& lambda : partitions_of(n)) {
    out.add_term(lambda, specialize_p(SymFunc::element(Basis::monomial, lambda), assign));
  }
  return out;
}

SymFunc rho_via_theta(int n) {
  require_nonnegative(n, "rho_via_theta");
  return sum_over_families(
      n, Basis::complete, count_irreducible_nonzero_root,
      [](int i, int j) { return plethysm_pb(h(Partition::row(j)), i); }, false);
}

bool verify_convolution(int n) {
  require_positive(n, "verify_convolution");
  const auto rhos = rho_sequence(n);
  SymFunc lhs(Basis::complete);
  for (int k = 0; k <= n; ++k) lhs += mul(rhos[static_cast<std::size_t>(k)], h(Partition::row(n - k)));
  return lhs == h(Partition::row(n), LaurentPoly::q(n));
}

SymFunc moebius_product_coefficient(int n) {
  require_nonnegative(n, "moebius_product_coefficient");
  return sum_over_families(
      n, Basis::elementary, count_irreducible,
      [](int i, int a) { return plethysm_pb(SymFunc::element(Basis::elementary, Partition::row(a)), i); }, true);
}

bool verify_moebius_product(int n) {
  require_positive(n, "verify_moebius_product");
  const LaurentPoly minus_q_to_n = LaurentPoly::monomial(n % 2 == 0 ? Rational(1) : Rational(-1), n);
  return moebius_product_coefficient(n) == SymFunc::element(Basis::elementary, Partition::row(n), minus_q_to_n);
}

bool verify_four_way(int n) {
  const SymFunc reference = rho(n);
  return reference == rho_via_hl(n) && reference == rho_via_m(n) && reference == rho_via_theta(n);
}

bool verify_sign_law(int n) {
  require_positive(n, "verify_sign_law");
  const SymFunc reference = rho(n);
  const LaurentPoly q_minus_one = LaurentPoly::q() - 1;
  for (const auto& lambda : partitions_of(n)) {
    const LaurentPoly c = rho_coeff(n, lambda);
    if (c != reference.coefficient(lambda)) return false;
    const LaurentPoly signed_c = lambda.length() % 2 == 1 ? c : -c;
    LaurentPoly quotient;
    try {
      quotient = exact_div(signed_c, q_minus_one);
    } catch (const Error& e) {
      if (e.code() == ErrorCode::not_divisible) return false;
      throw;
    }
    if (!quotient.is_zero() && quotient.min_exponent() < 0) return false;
    for (const auto& [e, coefficient] : quotient.terms()) {
      if (coefficient < 0 || coefficient.get_den() != 1) return false;
    }
  }
  return true;
}

SymFunc omega_rho(int n) {
  require_positive(n, "omega_rho");
  return omega(rho(n));
}

SymFunc product_rho(std::span<const int> components) {
  int top = 0;
  for (int c : components) {
    require_positive(c, "product_rho component");
    top = std::max(top, c);
  }
  const auto rhos = rho_sequence(top);
  SymFunc out = SymFunc::one();
  for (int c : components) out = mul(out, rhos[static_cast<std::size_t>(c)]);
  return out;
}

SymFunc rho_combination(const std::vector<std::pair<Partition, LaurentPoly>>& terms) {
  int top = 0;
  for (const auto& [lambda, c] : terms) top = std::max(top, lambda.empty() ? 0 : lambda[0]);
  const auto rhos = rho_sequence(top);
  SymFunc out(Basis::complete);
  for (const auto& [lambda, c] : terms) {
    SymFunc term = SymFunc::constant(Basis::complete, c);
    for (int part : lambda.parts()) term = mul(term, rhos[static_cast<std::size_t>(part)]);
    out += term;
  }
  return out;
}

SymFunc evaluate_at(const SymFunc& f, const Rational& x) {
  return map_coefficients(f, [&](const LaurentPoly& c) { return LaurentPoly(eval(c, x)); });
}

RhoExpansion to_rho_basis(const SymFunc& f, const Rational& q_value) {
  RhoExpansion out{q_value, {}};
  if (f.is_zero()) return out;
  const auto degree = f.degree();
  if (!degree) throw Error(ErrorCode::not_homogeneous, "to_rho_basis needs a homogeneous symmetric function");
  const int n = *degree;

  Rational power = 1;
  for (int k = 1; k <= n; ++k) {
    power *= q_value;
    if (power == 1) {
      throw Error(ErrorCode::degenerate_q, "q = " + to_string(q_value) + " satisfies q^" + std::to_string(k) +
                                               " = 1; the rho basis degenerates in degree " + std::to_string(n));
    }
  }

  std::map<Partition, Rational, RevLexOrder> residual;
  const SymFunc in_h = convert(f, Basis::complete);
  for (const auto& [mu, c] : in_h.terms()) residual.emplace(mu, eval(c, q_value));

  const auto rhos = rho_sequence(n);
  for (const auto& lambda : partitions_of(n)) {
    SymFunc rho_lambda = SymFunc::one();
    LaurentPoly diagonal = 1;
    for (int part : lambda.parts()) {
      rho_lambda = mul(rho_lambda, rhos[static_cast<std::size_t>(part)]);
      diagonal *= LaurentPoly::q(part) - 1;
    }
    for (const auto& [mu, c] : rho_lambda.terms()) {
      if (!refines(mu, lambda)) {
        throw Error(ErrorCode::internal, "rho" + to_string(lambda) + " has h" + to_string(mu) +
                                             " outside the refinement order");
      }
    }
    if (rho_lambda.coefficient(lambda) != diagonal) {
      throw Error(ErrorCode::internal, "unexpected diagonal entry for rho" + to_string(lambda));
    }

    auto it = residual.find(lambda);
    if (it == residual.end()) continue;
    const Rational c_lambda = it->second / eval(diagonal, q_value);
    for (const auto& [mu, c] : rho_lambda.terms()) {
      Rational& slot = residual[mu];
      slot -= c_lambda * eval(c, q_value);
      if (slot == 0) residual.erase(mu);
    }
    out.coeffs.emplace(lambda, c_lambda);
  }
  if (!residual.empty()) throw Error(ErrorCode::internal, "rho-basis solve left a nonzero residual");
  return out;
}

SymFunc from_rho_basis(const RhoExpansion& e) {
  std::vector<std::pair<Partition, LaurentPoly>> terms;
  for (const auto& [lambda, c] : e.coeffs) terms.emplace_back(lambda, LaurentPoly(c));
  return evaluate_at(rho_combination(terms), e.q_value);
}

Rational dim_sum(const RhoExpansion& e) {
  Rational total = 0;
  for (const auto& [lambda, c] : e.coeffs) total += c;
  return total;
}

}  // namespace ggp
