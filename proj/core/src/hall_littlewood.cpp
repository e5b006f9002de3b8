#include "ggp/hall_littlewood.hpp"

#include <string>

#include "ggp/error.hpp"

namespace ggp {

SymFunc qr_symfunc(int r, const HLParam& t) {
  if (r < 0) throw Error(ErrorCode::invalid_argument, "q_r needs r >= 0");
  SymFunc out(Basis::complete);
  const LaurentPoly minus_t = -t.value;
  for (int i = 0; i <= r; ++i) {
    const SymFunc e_i = convert(SymFunc::element(Basis::elementary, Partition::row(i)), Basis::complete);
    const SymFunc h_rest = SymFunc::element(Basis::complete, Partition::row(r - i));
    out += minus_t.pow(static_cast<unsigned>(i)) * mul(e_i, h_rest);
  }
  return out;
}

SymFunc hl_one_row(int n, const HLParam& t) {
  if (n < 1) throw Error(ErrorCode::invalid_argument, "P_(n) needs n >= 1");
  const LaurentPoly one_minus_t = LaurentPoly(1) - t.value;
  if (one_minus_t.is_zero()) throw Error(ErrorCode::invalid_argument, "Hall-Littlewood parameter t must not be 1");
  return map_coefficients(qr_symfunc(n, t), [&](const LaurentPoly& c) { return exact_div(c, one_minus_t); });
}

SymFunc twisted_hl_one_row(int n) { return hl_one_row(n, HLParam::inverse_q()); }

}  // namespace ggp
