#include "icheb/resultant.hpp"

#include <algorithm>

namespace icheb {

namespace {

// Ring abstraction shared by the Int and Z[x] instantiations.
struct IntOps {
  using V = Int;
  V zero() const { return Int(0); }
  V one() const { return Int(1); }
  bool is_zero(const V& a) const { return a == 0; }
  V neg(const V& a) const { return -a; }
  V mul(const V& a, const V& b) const { return a * b; }
  V sub(const V& a, const V& b) const { return a - b; }
  V exact_div(const V& a, const V& b) const {
    Int q, r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    if (r != 0) throw std::runtime_error("resultant: inexact integer division");
    return q;
  }
  V power(const V& a, unsigned long e) const { return pow_int(a, e); }
};

struct PolyOps {
  unsigned dim;
  using V = IntPoly;
  V zero() const { return IntPoly::zero(dim); }
  V one() const { return IntPoly::constant(dim, 1); }
  bool is_zero(const V& a) const { return a.is_zero(); }
  V neg(const V& a) const { return -a; }
  V mul(const V& a, const V& b) const { return a * b; }
  V sub(const V& a, const V& b) const { return a - b; }
  V exact_div(const V& a, const V& b) const {
    auto q = a.exact_divide(b);
    if (!q) throw std::runtime_error("resultant: inexact polynomial division");
    return *q;
  }
  V power(const V& a, unsigned long e) const { return a.pow(e); }
};

template <class Ops>
using Vec = std::vector<typename Ops::V>;

template <class Ops>
long vdeg(const Vec<Ops>& p, const Ops& ops) {
  for (std::size_t i = p.size(); i-- > 0;)
    if (!ops.is_zero(p[i])) return static_cast<long>(i);
  return -1;
}

template <class Ops>
Vec<Ops> vtrim(Vec<Ops> p, const Ops& ops) {
  while (!p.empty() && ops.is_zero(p.back())) p.pop_back();
  return p;
}

// pseudo-remainder: lc(B)^(degA-degB+1) * A = Q*B + R
template <class Ops>
Vec<Ops> vprem(Vec<Ops> A, const Vec<Ops>& B, const Ops& ops) {
  long da = vdeg<Ops>(A, ops), db = vdeg<Ops>(B, ops);
  if (db < 0) throw std::invalid_argument("vprem: zero divisor");
  if (da < db) return vtrim<Ops>(std::move(A), ops);
  const auto& lb = B[db];
  long e = da - db + 1;
  Vec<Ops> R = vtrim<Ops>(std::move(A), ops);
  while (true) {
    long dr = vdeg<Ops>(R, ops);
    if (dr < db) break;
    auto lr = R[dr];
    Vec<Ops> next(static_cast<std::size_t>(dr) + 1, ops.zero());
    for (long i = 0; i <= dr; ++i) next[i] = ops.mul(R[i], lb);
    for (long i = 0; i <= db; ++i) {
      auto& slot = next[static_cast<std::size_t>(dr - db + i)];
      slot = ops.sub(slot, ops.mul(lr, B[i]));
    }
    R = vtrim<Ops>(std::move(next), ops);
    --e;
  }
  if (e > 0) {
    auto scale = ops.power(lb, static_cast<unsigned long>(e));
    for (auto& c : R) c = ops.mul(c, scale);
  }
  return R;
}

/// Resultant through the subresultant PRS (Cohen, Alg. 3.3.7 without the
/// content extraction step). Cross-checked against the Sylvester determinant.
template <class Ops>
typename Ops::V subres_resultant(Vec<Ops> A, Vec<Ops> B, const Ops& ops) {
  A = vtrim<Ops>(std::move(A), ops);
  B = vtrim<Ops>(std::move(B), ops);
  long da = vdeg<Ops>(A, ops), db = vdeg<Ops>(B, ops);
  if (da < 0 && db < 0) return ops.zero();
  if (da < 0) return db == 0 ? ops.one() : ops.zero();
  if (db < 0) return da == 0 ? ops.one() : ops.zero();

  bool negate = false;
  if (da < db) {
    std::swap(A, B);
    std::swap(da, db);
    if ((da & 1) && (db & 1)) negate = !negate;
  }
  if (db == 0) {
    auto r = ops.power(B[0], static_cast<unsigned long>(da));
    return negate ? ops.neg(r) : r;
  }

  typename Ops::V g = ops.one(), h = ops.one();
  while (true) {
    da = vdeg<Ops>(A, ops);
    db = vdeg<Ops>(B, ops);
    long delta = da - db;
    if ((da & 1) && (db & 1)) negate = !negate;
    Vec<Ops> R = vprem<Ops>(A, B, ops);
    A = std::move(B);
    // B = R / (g * h^delta)
    auto divisor = ops.mul(g, ops.power(h, static_cast<unsigned long>(delta)));
    Vec<Ops> Bn;
    Bn.reserve(R.size());
    for (auto& c : R) Bn.push_back(ops.exact_div(c, divisor));
    B = vtrim<Ops>(std::move(Bn), ops);
    g = A[vdeg<Ops>(A, ops)];
    if (delta >= 1) {
      auto gd = ops.power(g, static_cast<unsigned long>(delta));
      h = delta == 1 ? gd : ops.exact_div(gd, ops.power(h, static_cast<unsigned long>(delta - 1)));
    }
    long dbn = vdeg<Ops>(B, ops);
    if (dbn <= 0) {
      if (dbn < 0) return ops.zero();
      long dA = vdeg<Ops>(A, ops);
      // final step: res = lc(B)^{deg A} / h^{deg A - 1}
      auto num = ops.power(B[0], static_cast<unsigned long>(dA));
      auto res = dA >= 1
                     ? ops.exact_div(num, ops.power(h, static_cast<unsigned long>(dA - 1)))
                     : num;
      return negate ? ops.neg(res) : res;
    }
  }
}

/// Bareiss fraction-free determinant (exact divisions), sign-exact.
template <class Ops>
typename Ops::V bareiss_det(std::vector<Vec<Ops>> M, const Ops& ops) {
  std::size_t n = M.size();
  if (n == 0) return ops.one();
  bool negate = false;
  typename Ops::V prev = ops.one();
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (ops.is_zero(M[k][k])) {
      std::size_t r = k + 1;
      while (r < n && ops.is_zero(M[r][k])) ++r;
      if (r == n) return ops.zero();
      std::swap(M[k], M[r]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        auto t = ops.sub(ops.mul(M[k][k], M[i][j]), ops.mul(M[i][k], M[k][j]));
        M[i][j] = ops.exact_div(t, prev);
      }
      M[i][k] = ops.zero();
    }
    prev = M[k][k];
  }
  return negate ? ops.neg(M[n - 1][n - 1]) : M[n - 1][n - 1];
}

template <class Ops>
typename Ops::V sylvester_resultant(const Vec<Ops>& A, const Vec<Ops>& B,
                                    const Ops& ops) {
  Vec<Ops> a = vtrim<Ops>(A, ops), b = vtrim<Ops>(B, ops);
  long da = vdeg<Ops>(a, ops), db = vdeg<Ops>(b, ops);
  if (da < 0 && db < 0) return ops.zero();
  if (da < 0) return db == 0 ? ops.one() : ops.zero();
  if (db < 0) return da == 0 ? ops.one() : ops.zero();
  if (da == 0 && db == 0) return ops.one();
  std::size_t n = static_cast<std::size_t>(da + db);
  std::vector<Vec<Ops>> M(n, Vec<Ops>(n, ops.zero()));
  for (long r = 0; r < db; ++r)
    for (long i = 0; i <= da; ++i) M[r][r + da - i] = a[i];
  for (long r = 0; r < da; ++r)
    for (long i = 0; i <= db; ++i) M[db + r][r + db - i] = b[i];
  return bareiss_det<Ops>(std::move(M), ops);
}

std::vector<IntPoly> bivariate_as_univariate_in_y(const IntPoly& P) {
  if (P.dim() != 2) throw std::invalid_argument("expected a bivariate polynomial");
  long dy = P.degree_in(1);
  std::vector<IntPoly> out(static_cast<std::size_t>(std::max(dy, 0L)) + 1,
                           IntPoly::zero(1));
  for (const auto& [k, c] : P.terms())
    out[k.k[1]].add_term(MultiIndex({k.k[0]}), c);
  return out;
}

std::vector<IntPoly> lift_constants(const ZVec& f) {
  std::vector<IntPoly> out;
  out.reserve(f.size());
  for (const Int& c : f) out.push_back(IntPoly::constant(1, c));
  return out;
}

}  // namespace

Int resultant_int(const ZVec& A, const ZVec& B) {
  return subres_resultant<IntOps>(A, B, IntOps{});
}

Int sylvester_resultant_int(const ZVec& A, const ZVec& B) {
  return sylvester_resultant<IntOps>(A, B, IntOps{});
}

IntPoly resultant_wrt_second(const ZVec& f, const IntPoly& P) {
  PolyOps ops{1};
  return subres_resultant<PolyOps>(lift_constants(f), bivariate_as_univariate_in_y(P),
                                   ops);
}

IntPoly sylvester_resultant_wrt_second(const ZVec& f, const IntPoly& P) {
  PolyOps ops{1};
  return sylvester_resultant<PolyOps>(lift_constants(f),
                                      bivariate_as_univariate_in_y(P), ops);
}

}  // namespace icheb
