#include "icheb/multiindex.hpp"

#include <algorithm>

namespace icheb {

Ordering order_compare(const MultiIndex& a, const MultiIndex& b) {
  if (a.dim() != b.dim())
    throw std::invalid_argument("order_compare: dimension mismatch");
  unsigned da = a.degree(), db = b.degree();
  if (da != db) return da < db ? Ordering::Less : Ordering::Greater;
  for (std::size_t i = 0; i < a.k.size(); ++i) {
    if (a.k[i] == b.k[i]) continue;
    // first nonzero entry of a-b negative => a precedes b
    return a.k[i] < b.k[i] ? Ordering::Less : Ordering::Greater;
  }
  return Ordering::Equal;
}

namespace {

void enumerate(unsigned d, unsigned pos, unsigned remaining, MultiIndex& cur,
               std::vector<MultiIndex>& out) {
  if (pos == d) {
    out.push_back(cur);
    return;
  }
  for (unsigned e = 0; e <= remaining; ++e) {
    cur.k[pos] = e;
    enumerate(d, pos + 1, remaining - e, cur, out);
  }
  cur.k[pos] = 0;
}

}  // namespace

std::vector<MultiIndex> monomials_upto(unsigned d, unsigned n) {
  if (d < 1) throw std::invalid_argument("monomials_upto: d must be >= 1");
  std::vector<MultiIndex> out;
  MultiIndex cur(std::vector<unsigned>(d, 0));
  for (unsigned deg = 0; deg <= n; ++deg) {
    // within a degree block the recursive enumeration already emits entries
    // smallest-first in the pinned order (larger leading entries later)
    std::vector<MultiIndex> block;
    enumerate(d, 0, deg, cur, block);
    std::vector<MultiIndex> exact;
    for (auto& m : block)
      if (m.degree() == deg) exact.push_back(m);
    std::sort(exact.begin(), exact.end(), GradedLexLess{});
    out.insert(out.end(), exact.begin(), exact.end());
  }
  return out;
}

DegreeDims DegreeDims::make(unsigned d, unsigned n) {
  DegreeDims r;
  r.d = d;
  r.n = n;
  r.h = binomial(d + n, n);
  r.l = Int(d) * binomial(d + n, d + 1);
  return r;
}

}  // namespace icheb
