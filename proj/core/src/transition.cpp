#include "transition.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <span>

#include "ggp/error.hpp"

namespace ggp::detail {

namespace {

using RatTerms = std::map<Partition, Rational, RevLexOrder>;

enum class Kind { h_to_p, e_to_p, p_to_m, p_to_h, p_to_e, m_to_p, s_to_p, p_to_s, identity };

void accumulate(RatTerms& terms, const Partition& lambda, const Rational& value) {
  if (value == 0) return;
  auto [it, inserted] = terms.try_emplace(lambda, value);
  if (!inserted) {
    it->second += value;
    if (it->second == 0) terms.erase(it);
  }
}

// Product in a multiplicative basis (indices concatenate).
RatTerms multiply(const RatTerms& a, const RatTerms& b) {
  RatTerms out;
  for (const auto& [la, ca] : a) {
    for (const auto& [lb, cb] : b) accumulate(out, concat_sort(la, lb), ca * cb);
  }
  return out;
}

Transition from_rows(int n, const std::function<RatTerms(const Partition&)>& expand) {
  Transition t;
  t.index = partitions_of(n);
  t.rows.reserve(t.index.size());
  for (const auto& lambda : t.index) {
    std::vector<std::pair<std::size_t, Rational>> row;
    for (const auto& [mu, c] : expand(lambda)) row.emplace_back(t.position(mu), c);
    std::sort(row.begin(), row.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    t.rows.push_back(std::move(row));
  }
  return t;
}

Transition from_dense(int n, const DenseMatrix& m) {
  Transition t;
  t.index = partitions_of(n);
  t.rows.resize(t.index.size());
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < m[i].size(); ++j) {
      if (m[i][j] != 0) t.rows[i].emplace_back(j, m[i][j]);
    }
  }
  return t;
}

// Newton's identities: k h_k = sum_{i=1}^k p_i h_{k-i} and
// k e_k = sum_{i=1}^k (-1)^{i-1} p_i e_{k-i}.
std::vector<RatTerms> newton_one_row(int n, bool elementary) {
  std::vector<RatTerms> rows(static_cast<std::size_t>(n) + 1);
  rows[0].emplace(Partition(), 1);
  for (int k = 1; k <= n; ++k) {
    RatTerms acc;
    for (int i = 1; i <= k; ++i) {
      const Rational sign = (elementary && i % 2 == 0) ? -1 : 1;
      const RatTerms p_i{{Partition::row(i), sign}};
      for (const auto& [mu, c] : multiply(p_i, rows[static_cast<std::size_t>(k - i)])) accumulate(acc, mu, c);
    }
    for (auto& [mu, c] : acc) c /= k;
    rows[static_cast<std::size_t>(k)] = std::move(acc);
  }
  return rows;
}

Transition multiplicative_to_powersum(int n, bool elementary) {
  const auto one_row = newton_one_row(n, elementary);
  return from_rows(n, [&](const Partition& lambda) {
    RatTerms acc{{Partition(), 1}};
    for (int part : lambda.parts()) acc = multiply(acc, one_row[static_cast<std::size_t>(part)]);
    return acc;
  });
}

// p_k m_nu = sum over lambda obtained by adding k to one part of nu (or
// appending k), weighted by the multiplicity in lambda of the part produced.
// Rows are built by peeling the smallest part off lambda.
RatTerms powersum_times_monomial(int k, const RatTerms& f) {
  RatTerms out;
  for (const auto& [nu, c] : f) {
    std::vector<int> parts(nu.parts().begin(), nu.parts().end());
    for (std::size_t j = 0; j <= parts.size(); ++j) {
      if (j > 0 && j < parts.size() && parts[j] == parts[j - 1]) continue;
      std::vector<int> grown = parts;
      if (j == parts.size()) grown.push_back(k);
      else grown[j] += k;
      const Partition lambda = Partition::from_unsorted(std::move(grown));
      const int made = j == parts.size() ? k : parts[j] + k;
      accumulate(out, lambda, c * lambda.multiplicity(made));
    }
  }
  return out;
}

Transition powersum_to_monomial(int n) {
  std::map<Partition, RatTerms, RevLexOrder> memo;
  std::function<const RatTerms&(const Partition&)> row = [&](const Partition& lambda) -> const RatTerms& {
    if (auto it = memo.find(lambda); it != memo.end()) return it->second;
    RatTerms value;
    if (lambda.empty()) {
      value.emplace(Partition(), 1);
    } else {
      const int smallest = lambda[static_cast<std::size_t>(lambda.length() - 1)];
      value = powersum_times_monomial(smallest, row(remove_part(lambda, smallest)));
    }
    return memo.emplace(lambda, std::move(value)).first->second;
  };
  return from_rows(n, [&](const Partition& lambda) { return row(lambda); });
}

// Murnaghan-Nakayama: chi^lambda(mu) removes a rim hook of length mu_1 in
// every possible way, with sign (-1)^(height). Rim hooks are bead moves on the
// beta-numbers lambda_i + (l - 1 - i); the height is the number of beads jumped.
class CharacterTable {
 public:
  Integer operator()(const Partition& lambda, std::span<const int> mu) {
    if (mu.empty()) return lambda.empty() ? 1 : 0;
    auto key = std::make_pair(std::vector<int>(lambda.parts().begin(), lambda.parts().end()),
                              std::vector<int>(mu.begin(), mu.end()));
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;

    const int r = mu.front();
    const int l = lambda.length();
    std::vector<int> beta(static_cast<std::size_t>(l));
    for (int i = 0; i < l; ++i) beta[static_cast<std::size_t>(i)] = lambda[static_cast<std::size_t>(i)] + (l - 1 - i);

    Integer total = 0;
    for (int i = 0; i < l; ++i) {
      const int from = beta[static_cast<std::size_t>(i)];
      const int to = from - r;
      if (to < 0 || std::find(beta.begin(), beta.end(), to) != beta.end()) continue;
      int jumped = 0;
      for (int b : beta) jumped += (b > to && b < from) ? 1 : 0;
      std::vector<int> moved = beta;
      moved[static_cast<std::size_t>(i)] = to;
      std::sort(moved.begin(), moved.end(), std::greater<>());
      std::vector<int> parts;
      for (int j = 0; j < l; ++j) {
        const int part = moved[static_cast<std::size_t>(j)] - (l - 1 - j);
        if (part > 0) parts.push_back(part);
      }
      const Integer sub = (*this)(Partition(std::move(parts)), mu.subspan(1));
      if (jumped % 2 == 0) total += sub;
      else total -= sub;
    }
    memo_.emplace(std::move(key), total);
    return total;
  }

 private:
  std::map<std::pair<std::vector<int>, std::vector<int>>, Integer> memo_;
};

// s_lambda = sum_mu chi^lambda(mu) p_mu / z_mu.
Transition schur_to_powersum(int n) {
  CharacterTable chi;
  const auto mus = partitions_of(n);
  return from_rows(n, [&](const Partition& lambda) {
    RatTerms row;
    for (const auto& mu : mus) {
      const Integer c = chi(lambda, mu.parts());
      if (c != 0) accumulate(row, mu, Rational(c) / Rational(z_stat(mu)));
    }
    return row;
  });
}

// p_mu = sum_lambda chi^lambda(mu) s_lambda.
Transition powersum_to_schur(int n) {
  CharacterTable chi;
  const auto lambdas = partitions_of(n);
  return from_rows(n, [&](const Partition& mu) {
    RatTerms row;
    for (const auto& lambda : lambdas) {
      const Integer c = chi(lambda, mu.parts());
      if (c != 0) accumulate(row, lambda, Rational(c));
    }
    return row;
  });
}

Transition identity(int n) {
  return from_rows(n, [](const Partition& lambda) { return RatTerms{{lambda, 1}}; });
}

std::shared_ptr<const Transition> get(Kind kind, int n);

Transition build(Kind kind, int n) {
  switch (kind) {
    case Kind::h_to_p: return multiplicative_to_powersum(n, false);
    case Kind::e_to_p: return multiplicative_to_powersum(n, true);
    case Kind::p_to_m: return powersum_to_monomial(n);
    case Kind::p_to_h: return from_dense(n, invert_triangular(to_dense(*get(Kind::h_to_p, n))));
    case Kind::p_to_e: return from_dense(n, invert_triangular(to_dense(*get(Kind::e_to_p, n))));
    case Kind::m_to_p: return from_dense(n, invert_triangular(to_dense(*get(Kind::p_to_m, n))));
    case Kind::s_to_p: return schur_to_powersum(n);
    case Kind::p_to_s: return powersum_to_schur(n);
    case Kind::identity: return identity(n);
  }
  throw Error(ErrorCode::internal, "unknown transition kind");
}

// Write-once cache. Entries are built outside the lock; when two threads race
// on the same key, both compute identical values and the first insert wins.
std::shared_ptr<const Transition> get(Kind kind, int n) {
  static std::mutex mutex;
  static std::map<std::pair<Kind, int>, std::shared_ptr<const Transition>> cache;
  const auto key = std::make_pair(kind, n);
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  auto built = std::make_shared<const Transition>(build(kind, n));
  std::lock_guard lock(mutex);
  return cache.try_emplace(key, std::move(built)).first->second;
}

}  // namespace

std::size_t Transition::position(const Partition& lambda) const {
  auto it = std::lower_bound(index.begin(), index.end(), lambda, RevLexOrder{});
  if (it == index.end() || *it != lambda) {
    throw Error(ErrorCode::internal, "partition " + to_string(lambda) + " outside transition index");
  }
  return static_cast<std::size_t>(it - index.begin());
}

std::shared_ptr<const Transition> to_powersum(Basis source, int n) {
  switch (source) {
    case Basis::complete: return get(Kind::h_to_p, n);
    case Basis::elementary: return get(Kind::e_to_p, n);
    case Basis::monomial: return get(Kind::m_to_p, n);
    case Basis::schur: return get(Kind::s_to_p, n);
    case Basis::powersum: return get(Kind::identity, n);
  }
  throw Error(ErrorCode::internal, "unknown basis");
}

std::shared_ptr<const Transition> from_powersum(Basis target, int n) {
  switch (target) {
    case Basis::complete: return get(Kind::p_to_h, n);
    case Basis::elementary: return get(Kind::p_to_e, n);
    case Basis::monomial: return get(Kind::p_to_m, n);
    case Basis::schur: return get(Kind::p_to_s, n);
    case Basis::powersum: return get(Kind::identity, n);
  }
  throw Error(ErrorCode::internal, "unknown basis");
}

DenseMatrix to_dense(const Transition& t) {
  DenseMatrix m(t.index.size(), std::vector<Rational>(t.index.size()));
  for (std::size_t i = 0; i < t.rows.size(); ++i) {
    for (const auto& [j, c] : t.rows[i]) m[i][j] = c;
  }
  return m;
}

DenseMatrix invert_triangular(const DenseMatrix& m) {
  const std::size_t n = m.size();
  bool lower = true;
  bool upper = true;
  for (std::size_t i = 0; i < n; ++i) {
    if (m[i][i] == 0) throw Error(ErrorCode::internal, "triangular inverse: zero on the diagonal");
    for (std::size_t j = 0; j < n; ++j) {
      if (j > i && m[i][j] != 0) lower = false;
      if (j < i && m[i][j] != 0) upper = false;
    }
  }
  if (!lower && !upper) throw Error(ErrorCode::internal, "triangular inverse: matrix is not triangular");

  // Solve for a lower-triangular matrix; the upper case runs on the transpose.
  DenseMatrix a = m;
  if (!lower) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) a[i][j] = m[j][i];
    }
  }
  DenseMatrix x(n, std::vector<Rational>(n));
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = j; i < n; ++i) {
      Rational acc = i == j ? 1 : 0;
      for (std::size_t k = j; k < i; ++k) acc -= a[i][k] * x[k][j];
      x[i][j] = acc / a[i][i];
    }
  }
  if (!lower) {
    DenseMatrix t(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) t[i][j] = x[j][i];
    }
    return t;
  }
  return x;
}

}  // namespace ggp::detail
