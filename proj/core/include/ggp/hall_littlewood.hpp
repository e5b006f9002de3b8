#pragma once

#include "ggp/laurent_poly.hpp"
#include "ggp/symfunc.hpp"

namespace ggp {

/// Instantiation of the Hall-Littlewood parameter t inside the coefficient
/// ring, usually q^-1.
struct HLParam {
  LaurentPoly value;

  static HLParam inverse_q() { return {LaurentPoly::q(-1)}; }
};

/// q_r(Y;t), the u^r coefficient of prod_i (1 - y_i t u)/(1 - y_i u), in the
/// complete basis: sum_{i=0}^r (-t)^i e_i h_{r-i}. q_0 = 1.
SymFunc qr_symfunc(int r, const HLParam& t);

/// P_(n)(Y;t) = q_n(Y;t) / (1 - t), by exact coefficientwise division.
/// Throws Error(invalid_argument) for t == 1 and Error(not_divisible) if a
/// coefficient does not divide (which would be a bug, not a user error).
SymFunc hl_one_row(int n, const HLParam& t);

/// The twisted one-row function q^{-n((n))} P_(n)(Y;q^-1) = P_(n)(Y;q^-1).
SymFunc twisted_hl_one_row(int n);

}  // namespace ggp
