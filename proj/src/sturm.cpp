#include "icheb/sturm.hpp"

#include <algorithm>

namespace icheb {

long zdeg(const ZVec& p) {
  for (std::size_t i = p.size(); i-- > 0;)
    if (p[i] != 0) return static_cast<long>(i);
  return -1;
}

ZVec ztrim(ZVec p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
  return p;
}

ZVec zderivative(const ZVec& p) {
  ZVec d;
  for (std::size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * Int(static_cast<long>(i)));
  return ztrim(std::move(d));
}

Int zcontent(const ZVec& p) {
  Int g = 0;
  for (const Int& c : p) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  return g;
}

ZVec zprimitive(const ZVec& p) {
  Int g = zcontent(p);
  if (g == 0 || g == 1) return ztrim(p);
  ZVec out;
  out.reserve(p.size());
  for (const Int& c : p) out.push_back(c / g);
  return ztrim(std::move(out));
}

Rat zeval(const ZVec& p, const Rat& x) {
  Rat acc(0);
  for (std::size_t i = p.size(); i-- > 0;) acc = acc * x + Rat(p[i]);
  return acc;
}

int zsign_at(const ZVec& p, const Rat& x) {
  Rat v = zeval(p, x);
  return v > 0 ? 1 : (v < 0 ? -1 : 0);
}

namespace {

// pseudo-remainder R with lc(B)^(degA-degB+1) * A = Q*B + R
ZVec zprem(ZVec A, const ZVec& B) {
  long da = zdeg(A), db = zdeg(B);
  if (db < 0) throw std::invalid_argument("zprem: division by zero polynomial");
  if (da < db) return ztrim(std::move(A));
  Int lb = B[db];
  long e = da - db + 1;
  ZVec R = ztrim(std::move(A));
  while (true) {
    long dr = zdeg(R);
    if (dr < db) break;
    Int lr = R[dr];
    ZVec next(static_cast<std::size_t>(dr) + 1, Int(0));
    for (long i = 0; i <= dr; ++i) next[i] = R[i] * lb;
    for (long i = 0; i <= db; ++i)
      next[static_cast<std::size_t>(dr - db + i)] -= lr * B[i];
    R = ztrim(std::move(next));
    --e;
  }
  if (e > 0) {
    Int scale = pow_int(lb, static_cast<unsigned long>(e));
    for (Int& c : R) c *= scale;
  }
  return R;
}

}  // namespace

bool zis_squarefree(const ZVec& p) {
  ZVec a = zprimitive(p), b = zprimitive(zderivative(p));
  if (zdeg(a) <= 1) return true;
  // integer gcd chain via pseudo-remainders
  while (zdeg(b) >= 0) {
    ZVec r = zprimitive(zprem(a, b));
    a = std::move(b);
    b = std::move(r);
  }
  return zdeg(a) == 0;
}

Rat cauchy_root_bound(const ZVec& p) {
  long d = zdeg(p);
  if (d < 0) throw std::invalid_argument("root bound of zero polynomial");
  Rat lead(abs(p[d]));
  Rat m(0);
  for (long i = 0; i < d; ++i) {
    Rat a(abs(p[i]));
    if (a > m) m = a;
  }
  return Rat(1) + m / lead;
}

SturmChain sturm_chain(const ZVec& p) {
  SturmChain chain;
  ZVec p0 = zprimitive(p);
  if (zdeg(p0) < 0) throw std::invalid_argument("sturm chain of zero polynomial");
  chain.seq.push_back(p0);
  ZVec p1 = zprimitive(zderivative(p0));
  if (zdeg(p1) < 0) return chain;
  chain.seq.push_back(p1);
  while (true) {
    const ZVec& a = chain.seq[chain.seq.size() - 2];
    const ZVec& b = chain.seq.back();
    long da = zdeg(a), db = zdeg(b);
    ZVec r = zprem(a, b);
    if (zdeg(r) < 0) break;
    // the true remainder is r / lc(b)^(da-db+1); flip so the stored entry has
    // the sign of -remainder
    Int m = b[db];
    bool mult_negative = m < 0 && ((da - db + 1) % 2 != 0);
    for (Int& c : r) c = -c;
    if (mult_negative)
      for (Int& c : r) c = -c;
    chain.seq.push_back(zprimitive(r));
  }
  return chain;
}

int sign_variations_at(const SturmChain& chain, const Rat& x) {
  int var = 0, prev = 0;
  for (const ZVec& p : chain.seq) {
    int s = zsign_at(p, x);
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++var;
    prev = s;
  }
  return var;
}

int count_roots(const SturmChain& chain, const Rat& a, const Rat& b) {
  if (!(a < b)) throw std::invalid_argument("count_roots: need a < b");
  return sign_variations_at(chain, a) - sign_variations_at(chain, b);
}

long real_root_count(const ZVec& p) {
  SturmChain chain = sturm_chain(p);
  Rat m = cauchy_root_bound(p);
  return count_roots(chain, -m, m) + (zsign_at(p, -m) == 0 ? 1 : 0);
}

std::vector<RootInterval> isolate_real_roots(const ZVec& p_in) {
  ZVec p = zprimitive(p_in);
  long d = zdeg(p);
  if (d < 0) throw std::invalid_argument("isolate_real_roots: zero polynomial");
  std::vector<RootInterval> out;
  if (d == 0) return out;
  if (d == 1) {
    Rat root(-p[0], p[1]);
    root.canonicalize();
    out.push_back({root, root, true});
    return out;
  }
  SturmChain chain = sturm_chain(p);
  Rat m = cauchy_root_bound(p);
  struct Item {
    Rat lo, hi;
    int count;
  };
  std::vector<Item> stack;
  {
    int total = count_roots(chain, -m, m);
    if (zsign_at(p, -m) == 0) ++total;  // defensive; cannot happen with strict bound
    if (total == 0) return out;
    stack.push_back({-m, m, total});
  }
  while (!stack.empty()) {
    Item it = stack.back();
    stack.pop_back();
    if (it.count == 0) continue;
    if (it.count == 1 && zsign_at(p, it.lo) * zsign_at(p, it.hi) < 0) {
      out.push_back({it.lo, it.hi, false});
      continue;
    }
    Rat mid = (it.lo + it.hi) / 2;
    if (zsign_at(p, mid) == 0) {
      out.push_back({mid, mid, true});
      // split strictly around the rational root
      Rat eps = (it.hi - it.lo);
      Rat lo2 = mid, hi2 = mid;
      // find nudge keeping subintervals root-counting clean
      do {
        eps /= 2;
        lo2 = mid - eps;
        hi2 = mid + eps;
      } while (zsign_at(p, lo2) == 0 || zsign_at(p, hi2) == 0);
      int left = count_roots(chain, it.lo, lo2);
      int right = count_roots(chain, hi2, it.hi);
      if (left > 0) stack.push_back({it.lo, lo2, left});
      if (right > 0) stack.push_back({hi2, it.hi, right});
      continue;
    }
    int left = count_roots(chain, it.lo, mid);
    int right = it.count - left;
    if (left > 0) stack.push_back({it.lo, mid, left});
    if (right > 0) stack.push_back({mid, it.hi, right});
  }
  std::sort(out.begin(), out.end(),
            [](const RootInterval& a, const RootInterval& b) { return a.lo < b.lo; });
  return out;
}

void refine_root(const ZVec& p, RootInterval& iv, const Rat& width) {
  if (iv.exact) return;
  int slo = zsign_at(p, iv.lo);
  while (iv.hi - iv.lo > width) {
    Rat mid = (iv.lo + iv.hi) / 2;
    int sm = zsign_at(p, mid);
    if (sm == 0) {
      iv.lo = iv.hi = mid;
      iv.exact = true;
      return;
    }
    if (sm == slo)
      iv.lo = mid;
    else
      iv.hi = mid;
  }
}

}  // namespace icheb
