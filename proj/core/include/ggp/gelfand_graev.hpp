#pragma once

#include <map>
#include <span>
#include <utility>
#include <vector>

#include "ggp/laurent_poly.hpp"
#include "ggp/partition.hpp"
#include "ggp/symfunc.hpp"

namespace ggp {

// ---------------------------------------------------------------------------
// Irreducible polynomial counts over F_q, as polynomials in q.

int mobius(int n);

/// L_q(i) = (1/i) sum_{d | i} mu(d) q^{i/d}: monic irreducibles of degree i.
LaurentPoly count_irreducible(int i);

/// l_q(i): monic irreducibles of degree i with nonzero constant term, i.e.
/// L_q(1) - 1 for i = 1 and L_q(i) otherwise.
LaurentPoly count_irreducible_nonzero_root(int i);

// ---------------------------------------------------------------------------
// rho_n: the plethysm image of the characteristic of the Gelfand-Graev
// character of GL_n(F_q). All routes return the complete (h) basis.

/// Recurrence: rho_0 = 1, rho_n = (q^n - 1) h_n - sum_{k=1}^{n-1} rho_{n-k} h_k.
SymFunc rho(int n);

/// rho_0, ..., rho_{max_n} from a single pass of the recurrence.
std::vector<SymFunc> rho_sequence(int max_n);

/// [h_lambda] rho_n from the coefficient recurrence alone:
///   [h_(n)] rho_n = q^n - 1, and for l(lambda) >= 2
///   [h_lambda] rho_n = - sum over distinct parts a of [h_{lambda - a}] rho_{n-a}.
/// Throws Error(size_mismatch) unless |lambda| == n.
LaurentPoly rho_coeff(int n, const Partition& lambda);

/// q^n q_n(Y; q^-1).
SymFunc rho_via_hl(int n);

/// sum_{lambda |- n} m_lambda(q-1) h_lambda with p_k(q-1) = q^k - 1.
SymFunc rho_via_m(int n);

/// Direct enumeration of the orbit families {m_{i,j}}: for each degree i a
/// multiset of h-indices j, weighted by
///   l_q(i)(l_q(i)-1)...(l_q(i)-m_i+1) / prod_j m_{i,j}!
/// times prod_j (h_j[p_i])^{m_{i,j}}.
SymFunc rho_via_theta(int n);

/// sum_{k=0}^n rho_k h_{n-k} == q^n h_n.
bool verify_convolution(int n);

/// The t^n coefficient of prod_i prod_j (1 - y_j^i t^i)^{L_q(i)}, computed on
/// e_a[p_i] without variables, in the elementary basis.
SymFunc moebius_product_coefficient(int n);

/// moebius_product_coefficient(n) == (-q)^n e_n.
bool verify_moebius_product(int n);

/// rho(n) == rho_via_hl(n) == rho_via_m(n) == rho_via_theta(n).
bool verify_four_way(int n);

/// For every lambda |- n: rho_coeff agrees with the coefficient of h_lambda in
/// rho(n), and (-1)^{l(lambda)-1} [h_lambda] rho_n is (q-1) times a polynomial
/// with nonnegative integer coefficients.
bool verify_sign_law(int n);

/// omega(rho_n), in the complete basis.
SymFunc omega_rho(int n);

/// prod_i rho_{n_i}; the empty product is 1.
SymFunc product_rho(std::span<const int> components);

/// sum_k c_k rho_{lambda_k}, in the complete basis.
SymFunc rho_combination(const std::vector<std::pair<Partition, LaurentPoly>>& terms);

// ---------------------------------------------------------------------------
// Expansion in the multiplicative basis {rho_lambda} at a numeric q.

struct RhoExpansion {
  Rational q_value;
  std::map<Partition, Rational, RevLexOrder> coeffs;

  friend bool operator==(const RhoExpansion&, const RhoExpansion&) = default;
};

/// The unique C_lambda with f(q_value) = sum C_lambda rho_lambda(q_value).
///
/// rho_lambda is supported on h_mu with mu refining lambda, with diagonal
/// entry prod_i (q^{lambda_i} - 1), so the system is triangular with respect
/// to refinement and is solved coarsest partition first. Throws
/// Error(not_homogeneous) if f mixes degrees and Error(degenerate_q) if
/// q_value^k == 1 for some 1 <= k <= n.
RhoExpansion to_rho_basis(const SymFunc& f, const Rational& q_value);

/// sum C_lambda rho_lambda evaluated at e.q_value, in the complete basis with
/// constant coefficients.
SymFunc from_rho_basis(const RhoExpansion& e);

/// sum of all C_lambda.
Rational dim_sum(const RhoExpansion& e);

/// Evaluates every coefficient of f at q = x.
SymFunc evaluate_at(const SymFunc& f, const Rational& x);

}  // namespace ggp
