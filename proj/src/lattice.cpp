#include "icheb/lattice.hpp"

#include <algorithm>
#include <functional>

namespace icheb {

namespace {

Int dot_gram(const std::vector<std::vector<Int>>& G, const std::vector<Int>& a,
             const std::vector<Int>& b) {
  std::size_t n = G.size();
  Int acc(0);
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i] == 0) continue;
    Int row(0);
    for (std::size_t j = 0; j < n; ++j) {
      if (b[j] == 0) continue;
      row += G[i][j] * b[j];
    }
    acc += a[i] * row;
  }
  return acc;
}

Int round_div(const Int& num, const Int& den) {
  // nearest integer to num/den, den > 0
  Int q, r;
  mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  if (2 * r >= den) q += 1;
  return q;
}

}  // namespace

Rat gram_value(const std::vector<std::vector<Int>>& gram, const std::vector<Int>& v) {
  return Rat(dot_gram(gram, v, v));
}

GramLLL lll_reduce_gram(const std::vector<std::vector<Int>>& gram, const Rat& delta) {
  std::size_t n = gram.size();
  if (n == 0) throw std::invalid_argument("lll: empty gram");
  for (const auto& row : gram)
    if (row.size() != n) throw std::invalid_argument("lll: gram not square");
  if (!(delta > Rat(1, 4) && delta < 1))
    throw std::invalid_argument("lll: delta out of (1/4, 1)");

  std::vector<std::vector<Int>> H(n, std::vector<Int>(n, Int(0)));
  for (std::size_t i = 0; i < n; ++i) H[i][i] = 1;

  // all-integer GSO bookkeeping: d[i] = Gram minor determinants, lambda[i][j]
  std::vector<Int> d(n + 1, Int(1));
  std::vector<std::vector<Int>> lambda(n, std::vector<Int>(n, Int(0)));

  auto gram_of = [&](std::size_t i, std::size_t j) { return dot_gram(gram, H[i], H[j]); };

  std::size_t k = 1, k_max = 0;
  d[0] = 1;
  d[1] = gram_of(0, 0);
  if (d[1] <= 0) throw std::invalid_argument("lll: gram not positive definite");

  auto red = [&](std::size_t kk, std::size_t l) {
    if (2 * abs(lambda[kk][l]) <= d[l + 1]) return;
    Int q = round_div(lambda[kk][l], d[l + 1]);
    for (std::size_t j = 0; j < n; ++j) H[kk][j] -= q * H[l][j];
    lambda[kk][l] -= q * d[l + 1];
    for (std::size_t i = 0; i < l; ++i) lambda[kk][i] -= q * lambda[l][i];
  };

  while (k < n) {
    if (k > k_max) {
      k_max = k;
      for (std::size_t j = 0; j <= k; ++j) {
        Int u = gram_of(k, j);
        for (std::size_t i = 0; i < j; ++i)
          u = (d[i + 1] * u - lambda[k][i] * lambda[j][i]) / d[i];
        if (j < k)
          lambda[k][j] = u;
        else {
          d[k + 1] = u;
          if (d[k + 1] <= 0)
            throw std::invalid_argument("lll: gram not positive definite");
        }
      }
    }
    while (true) {
      red(k, k - 1);
      // swap iff d[k+1]*d[k-1] < delta*d[k]^2 - lambda^2
      Rat lhs(d[k + 1] * d[k - 1]);
      Rat rhs = delta * Rat(d[k] * d[k]) - Rat(lambda[k][k - 1] * lambda[k][k - 1]);
      if (lhs >= rhs) break;
      // SWAP(k)
      std::swap(H[k], H[k - 1]);
      for (std::size_t j = 0; j + 1 < k; ++j) std::swap(lambda[k][j], lambda[k - 1][j]);
      Int lam = lambda[k][k - 1];
      Int B = (d[k - 1] * d[k + 1] + lam * lam) / d[k];
      for (std::size_t i = k + 1; i <= k_max; ++i) {
        Int t = lambda[i][k];
        lambda[i][k] = (d[k + 1] * lambda[i][k - 1] - lam * t) / d[k];
        lambda[i][k - 1] = (B * t + lam * lambda[i][k]) / d[k + 1];
      }
      d[k] = B;
      if (k > 1) --k;
    }
    for (std::size_t l = k >= 2 ? k - 1 : 0; l-- > 0;) red(k, l);
    ++k;
  }
  return {H};
}

ShortVectors enumerate_short_vectors(const std::vector<std::vector<Int>>& gram,
                                     const GramLLL& reduction, const Rat& bound,
                                     long node_budget, std::size_t max_keep) {
  std::size_t n = gram.size();
  const auto& H = reduction.transform;
  // reduced Gram Gr = H G H^T
  std::vector<std::vector<Rat>> Gr(n, std::vector<Rat>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) Gr[i][j] = Rat(dot_gram(gram, H[i], H[j]));

  // rational LDL^T: Q(x) = sum_i q[i][i] (x_i + sum_{j>i} q[i][j] x_j)^2
  std::vector<std::vector<Rat>> q = Gr;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (q[j][j] == 0) throw std::invalid_argument("enumeration: singular form");
      Rat f = q[j][i] / q[j][j];
      for (std::size_t k = i; k < n; ++k) q[i][k] -= f * q[j][k];
    }
    if (q[i][i] <= 0) throw std::invalid_argument("enumeration: form not positive definite");
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) q[i][j] /= q[i][i];

  ShortVectors out;
  std::vector<Int> x(n, Int(0));
  std::vector<Rat> partial(n + 1, Rat(0));  // remaining budget below level i
  std::vector<Rat> offset(n, Rat(0));       // U_i = sum_{j>i} q[i][j] x_j
  long nodes = 0;

  auto record = [&](const std::vector<Int>& coords, const Rat& value) {
    // map back to original coordinates and canonicalize sign
    std::vector<Int> v(n, Int(0));
    for (std::size_t i = 0; i < n; ++i) {
      if (coords[i] == 0) continue;
      for (std::size_t j = 0; j < n; ++j) v[j] += coords[i] * H[i][j];
    }
    bool all_zero = true;
    for (const Int& c : v)
      if (c != 0) {
        all_zero = false;
        if (c < 0)
          for (Int& w : v) w = -w;
        break;
      }
    if (all_zero) return;
    out.vectors.emplace_back(value, std::move(v));
    std::sort(out.vectors.begin(), out.vectors.end());
    out.vectors.erase(std::unique(out.vectors.begin(), out.vectors.end()),
                      out.vectors.end());
    if (out.vectors.size() > max_keep) out.vectors.resize(max_keep);
  };

  // depth-first over levels n-1 .. 0
  std::function<void(std::size_t, const Rat&)> dfs = [&](std::size_t level,
                                                         const Rat& budget) {
    if (out.budget_exhausted) return;
    if (++nodes > node_budget) {
      out.budget_exhausted = true;
      return;
    }
    std::size_t i = level - 1;
    Rat U(0);
    for (std::size_t j = i + 1; j < n; ++j)
      if (x[j] != 0) U += q[i][j] * Rat(x[j]);
    Rat span2 = budget / q[i][i];
    Rat s_up = sqrt_upper(span2, 30);
    // integer range for x_i: |x_i + U| <= sqrt(span2)
    Rat lo_r = -s_up - U, hi_r = s_up - U;
    Int lo = lo_r.get_num() / lo_r.get_den();
    while (Rat(lo) > lo_r) lo -= 1;
    while (Rat(lo + 1) <= lo_r) lo += 1;  // lo = floor(lo_r)
    Int hi = hi_r.get_num() / hi_r.get_den();
    while (Rat(hi) > hi_r) hi -= 1;
    while (Rat(hi + 1) <= hi_r) hi += 1;
    for (Int xi = lo; xi <= hi; xi += 1) {
      Rat inner = Rat(xi) + U;
      Rat used = q[i][i] * inner * inner;
      if (used > budget) continue;  // exact re-check against sqrt rounding
      x[i] = xi;
      if (i == 0) {
        bool nonzero = false;
        for (const Int& c : x)
          if (c != 0) nonzero = true;
        if (nonzero) {
          Rat value = bound - budget + used;
          record(x, value);
        }
      } else {
        dfs(i, budget - used);
      }
      if (out.budget_exhausted) break;
    }
    x[i] = 0;
  };

  dfs(n, bound);
  std::sort(out.vectors.begin(), out.vectors.end());
  return out;
}

}  // namespace icheb
