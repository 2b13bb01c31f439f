#include "icheb/bernstein.hpp"

#include <algorithm>

namespace icheb {

namespace {

std::vector<std::size_t> strides_of(const std::vector<unsigned>& degs) {
  std::vector<std::size_t> s(degs.size());
  std::size_t acc = 1;
  for (std::size_t j = degs.size(); j-- > 0;) {
    s[j] = acc;
    acc *= degs[j] + 1;
  }
  return s;
}

void minmax(BernsteinPatch& p) {
  p.lo = p.coeff[0];
  p.hi = p.coeff[0];
  for (const Rat& c : p.coeff) {
    if (c < p.lo) p.lo = c;
    if (c > p.hi) p.hi = c;
  }
}

}  // namespace

Rat BernsteinPatch::corner_value(const std::vector<unsigned>& corner) const {
  auto s = strides_of(degs);
  std::size_t idx = 0;
  for (std::size_t j = 0; j < degs.size(); ++j) idx += corner[j] * s[j];
  return coeff[idx];
}

RatPoint BernsteinPatch::corner_point(const std::vector<unsigned>& corner) const {
  std::vector<Rat> x;
  for (std::size_t j = 0; j < degs.size(); ++j)
    x.push_back(corner[j] == 0 ? domain[j].first : domain[j].second);
  return RatPoint::real(std::move(x));
}

BernsteinPatch bernstein_from_power(const QPoly& p, const Box& box) {
  unsigned d = p.dim();
  if (box.dim() != d) throw std::invalid_argument("bernstein: box dimension mismatch");

  // transport to [0,1]^d: u_j -> a_j + w_j u_j
  std::vector<QPoly> affine;
  for (unsigned j = 0; j < d; ++j) {
    QPoly m(d);
    m.add_term(MultiIndex(std::vector<unsigned>(d, 0)), box.bounds[j].first);
    std::vector<unsigned> e(d, 0);
    e[j] = 1;
    Rat w = box.bounds[j].second - box.bounds[j].first;
    if (w != 0) m.add_term(MultiIndex(std::move(e)), w);
    affine.push_back(std::move(m));
  }
  QPoly q = p.compose(affine);

  BernsteinPatch patch;
  patch.domain = box.bounds;
  patch.degs.resize(d);
  for (unsigned j = 0; j < d; ++j)
    patch.degs[j] = static_cast<unsigned>(std::max(q.degree_in(j), 0L));

  auto s = strides_of(patch.degs);
  std::size_t total = 1;
  for (unsigned j = 0; j < d; ++j) total *= patch.degs[j] + 1;
  patch.coeff.assign(total, Rat(0));
  for (const auto& [k, c] : q.terms()) {
    std::size_t idx = 0;
    for (unsigned j = 0; j < d; ++j) idx += k.k[j] * s[j];
    patch.coeff[idx] = c;
  }

  // power -> Bernstein along each axis: b_i = sum_{k<=i} C(i,k)/C(n,k) c_k
  for (unsigned axis = 0; axis < d; ++axis) {
    unsigned n = patch.degs[axis];
    if (n == 0) continue;
    std::vector<Rat> factor(n + 1);
    std::size_t lines = total / (n + 1);
    std::vector<Rat> line(n + 1), out(n + 1);
    for (std::size_t l = 0; l < lines; ++l) {
      // decompose l into the index with axis removed
      std::size_t base = 0, rem = l;
      for (std::size_t j = d; j-- > 0;) {
        if (j == axis) continue;
        std::size_t extent = patch.degs[j] + 1;
        std::size_t ij = rem % extent;
        rem /= extent;
        base += ij * s[j];
      }
      for (unsigned i = 0; i <= n; ++i) line[i] = patch.coeff[base + i * s[axis]];
      for (unsigned i = 0; i <= n; ++i) {
        Rat acc(0);
        for (unsigned k = 0; k <= i; ++k) {
          if (line[k] == 0) continue;
          acc += line[k] * Rat(binomial(i, k), binomial(n, k));
        }
        out[i] = acc;
      }
      for (unsigned i = 0; i <= n; ++i) patch.coeff[base + i * s[axis]] = out[i];
    }
  }
  minmax(patch);
  return patch;
}

std::pair<BernsteinPatch, BernsteinPatch> bernstein_split(const BernsteinPatch& p,
                                                          unsigned axis) {
  unsigned d = static_cast<unsigned>(p.degs.size());
  if (axis >= d) throw std::invalid_argument("bernstein_split: bad axis");
  unsigned n = p.degs[axis];
  auto s = strides_of(p.degs);
  std::size_t total = p.coeff.size();

  BernsteinPatch left = p, right = p;
  Rat mid = (p.domain[axis].first + p.domain[axis].second) / 2;
  left.domain[axis].second = mid;
  right.domain[axis].first = mid;
  if (n == 0) {
    minmax(left);
    minmax(right);
    return {left, right};
  }

  std::size_t lines = total / (n + 1);
  std::vector<Rat> a(n + 1), lo(n + 1), hi(n + 1);
  for (std::size_t l = 0; l < lines; ++l) {
    std::size_t base = 0, rem = l;
    for (std::size_t j = d; j-- > 0;) {
      if (j == axis) continue;
      std::size_t extent = p.degs[j] + 1;
      std::size_t ij = rem % extent;
      rem /= extent;
      base += ij * s[j];
    }
    for (unsigned i = 0; i <= n; ++i) a[i] = p.coeff[base + i * s[axis]];
    lo[0] = a[0];
    hi[n] = a[n];
    for (unsigned r = 1; r <= n; ++r) {
      for (unsigned i = 0; i + r <= n; ++i) a[i] = (a[i] + a[i + 1]) / 2;
      lo[r] = a[0];
      hi[n - r] = a[n - r];
    }
    for (unsigned i = 0; i <= n; ++i) {
      left.coeff[base + i * s[axis]] = lo[i];
      right.coeff[base + i * s[axis]] = hi[i];
    }
  }
  minmax(left);
  minmax(right);
  return {left, right};
}

unsigned bernstein_widest_axis(const BernsteinPatch& p) {
  unsigned d = static_cast<unsigned>(p.degs.size());
  if (d == 1) return 0;
  auto s = strides_of(p.degs);
  unsigned best = 0;
  Rat best_var(-1);
  for (unsigned axis = 0; axis < d; ++axis) {
    if (p.degs[axis] == 0) continue;
    Rat var(0);
    for (std::size_t idx = 0; idx < p.coeff.size(); ++idx) {
      std::size_t i_axis = (idx / s[axis]) % (p.degs[axis] + 1);
      if (i_axis == p.degs[axis]) continue;
      Rat diff = p.coeff[idx + s[axis]] - p.coeff[idx];
      if (diff < 0) diff = -diff;
      if (diff > var) var = diff;
    }
    if (var > best_var) {
      best_var = var;
      best = axis;
    }
  }
  return best;
}

}  // namespace icheb
