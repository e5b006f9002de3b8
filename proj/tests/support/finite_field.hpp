#pragma once

// Brute-force counting of monic irreducible polynomials over a prime field
// F_p by trial division. Independent of the Mobius-inversion formula.

#include <functional>
#include <vector>

namespace ggp::testing {

// Coefficients low degree first; monic polynomials of degree d have d+1 entries.
using FpPoly = std::vector<int>;

inline int mod(int a, int p) { return ((a % p) + p) % p; }

// True iff monic `divisor` divides `f` over F_p.
inline bool divides(const FpPoly& divisor, FpPoly f, int p) {
  const std::size_t dd = divisor.size() - 1;
  for (std::size_t top = f.size() - 1; top >= dd && top < f.size(); --top) {
    const int factor = f[top];
    if (factor != 0) {
      for (std::size_t j = 0; j <= dd; ++j) f[top - dd + j] = mod(f[top - dd + j] - factor * divisor[j], p);
    }
    if (top == dd) break;
  }
  for (std::size_t i = 0; i < dd; ++i) {
    if (f[i] != 0) return false;
  }
  return true;
}

inline void for_each_monic(int degree, int p, const std::function<void(const FpPoly&)>& visit) {
  FpPoly f(static_cast<std::size_t>(degree) + 1, 0);
  f.back() = 1;
  std::function<void(int)> rec = [&](int i) {
    if (i == degree) {
      visit(f);
      return;
    }
    for (int c = 0; c < p; ++c) {
      f[static_cast<std::size_t>(i)] = c;
      rec(i + 1);
    }
  };
  rec(0);
}

inline bool irreducible(const FpPoly& f, int p) {
  const int degree = static_cast<int>(f.size()) - 1;
  bool reducible = false;
  for (int d = 1; d <= degree / 2 && !reducible; ++d) {
    for_each_monic(d, p, [&](const FpPoly& g) { reducible = reducible || divides(g, f, p); });
  }
  return !reducible;
}

struct IrreducibleCounts {
  long all = 0;
  long nonzero_root = 0;  // excludes f(x) = x
};

inline IrreducibleCounts count_monic_irreducible(int degree, int p) {
  IrreducibleCounts out;
  for_each_monic(degree, p, [&](const FpPoly& f) {
    if (!irreducible(f, p)) return;
    ++out.all;
    if (f[0] != 0) ++out.nonzero_root;
  });
  return out;
}

}  // namespace ggp::testing
