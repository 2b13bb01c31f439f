#include "icheb/certify.hpp"

#include <algorithm>
#include <functional>

#include "icheb/resultant.hpp"

namespace icheb {

ConjugateSet make_conjugate_set(const ZVec& coeffs, bool declared_irreducible) {
  ZVec p = ztrim(coeffs);
  long d = zdeg(p);
  if (d < 1) throw std::invalid_argument("minimal polynomial must be nonconstant");
  ConjugateSet s;
  Int c = zcontent(p);
  if (c != 1) {
    // primitivity is machine-checked; reject rather than silently rescale
    throw std::invalid_argument("minimal polynomial is not primitive (content " +
                                c.get_str() + ")");
  }
  if (!zis_squarefree(p))
    throw std::invalid_argument(
        "minimal polynomial has repeated factors, so it cannot be irreducible");
  s.min_poly = p;
  s.leading = p[static_cast<std::size_t>(d)];
  s.degree_m = static_cast<unsigned>(d);
  s.declared_irreducible = declared_irreducible;
  s.real_roots = isolate_real_roots(p);
  s.all_roots_real = s.real_roots.size() == s.degree_m;
  return s;
}

namespace {

bool roots_in_interval(ConjugateSet& s, const Rat& a, const Rat& b) {
  if (!s.all_roots_real) return false;
  for (auto& iv : s.real_roots) {
    refine_root(s.min_poly, iv, (b - a) / 1024);
    if (iv.lo < a || iv.hi > b) return false;
  }
  return true;
}

}  // namespace

bool verify_membership(AlgebraicLattice& L, const Region& E) {
  if (L.dim() != E.dim())
    throw std::invalid_argument("lattice/region dimension mismatch");
  bool all = true;
  for (unsigned j = 0; j < L.dim(); ++j) {
    Projection proj = project(E, j + 1);
    for (ConjugateSet& s : L.coords[j]) {
      bool ok = false;
      if (const Box* b = proj.region.get<Box>()) {
        ok = proj.exact && roots_in_interval(s, b->bounds[0].first, b->bounds[0].second);
      } else if (const Polydisk* p = proj.region.get<Polydisk>()) {
        // real roots only: |root| <= r suffices for those; complex conjugates
        // are not machine-checked here
        if (s.all_roots_real) ok = roots_in_interval(s, -p->radii[0], p->radii[0]);
      } else if (const Lemniscate* lem = proj.region.get<Lemniscate>()) {
        if (auto disk = univariate_disk_form(*lem);
            disk && disk->center.is_real() && s.all_roots_real)
          ok = roots_in_interval(s, disk->center.re - disk->radius,
                                 disk->center.re + disk->radius);
      }
      s.membership = ok ? ConjugateSet::Membership::Verified
                        : ConjugateSet::Membership::Declared;
      if (!ok) all = false;
    }
  }
  return all;
}

namespace {

// N for a single (S1 [, S2]) combination; n >= deg P.
Int combination_certificate(const IntPoly& P, const std::vector<const ConjugateSet*>& sets,
                            unsigned long n) {
  unsigned d = P.dim();
  if (d == 1) {
    if (P.is_zero()) return Int(0);
    const ConjugateSet& s = *sets[0];
    long degp = std::max(P.degree(), 0L);
    ZVec pvec(static_cast<std::size_t>(degp) + 1, Int(0));
    for (const auto& [k, cc] : P.terms()) pvec[k.k[0]] = cc;
    Int res = resultant_int(s.min_poly, pvec);
    // N = a^(n - deg P) * Res(f, P)
    return pow_int(s.leading, n - static_cast<unsigned long>(degp)) * res;
  }
  // d == 2
  const ConjugateSet& s1 = *sets[0];
  const ConjugateSet& s2 = *sets[1];
  if (P.is_zero()) return Int(0);
  long ny = std::max(P.degree_in(1), 0L);
  IntPoly ptilde = resultant_wrt_second(s2.min_poly, P);
  if (ptilde.is_zero()) return Int(0);
  long dx = std::max(ptilde.degree(), 0L);
  ZVec pt;
  {
    std::vector<Int> v(static_cast<std::size_t>(dx) + 1, Int(0));
    for (const auto& [k, cc] : ptilde.terms()) v[k.k[0]] = cc;
    pt = v;
  }
  Int res = resultant_int(s1.min_poly, pt);
  unsigned long m1 = s1.degree_m, m2 = s2.degree_m;
  if (static_cast<unsigned long>(dx) > m2 * n)
    throw std::runtime_error("n_certificate: degree bookkeeping violated");
  Int a1 = pow_int(s1.leading, m2 * n - static_cast<unsigned long>(dx));
  Int a2 = pow_int(s2.leading, m1 * (n - static_cast<unsigned long>(ny)));
  return a1 * a2 * res;
}

void for_each_combination(const AlgebraicLattice& L,
                          const std::function<void(const std::vector<const ConjugateSet*>&,
                                                   const std::vector<std::size_t>&)>& fn) {
  unsigned d = L.dim();
  std::vector<std::size_t> idx(d, 0);
  while (true) {
    std::vector<const ConjugateSet*> sets;
    for (unsigned j = 0; j < d; ++j) sets.push_back(&L.coords[j][idx[j]]);
    fn(sets, idx);
    unsigned j = 0;
    while (j < d) {
      if (++idx[j] < L.coords[j].size()) break;
      idx[j] = 0;
      ++j;
    }
    if (j == d) break;
  }
}

}  // namespace

Int n_certificate(const IntPoly& P, const AlgebraicLattice& L, long n_override) {
  unsigned d = L.dim();
  if (d < 1 || d > 2)
    throw std::invalid_argument("n_certificate supports d in {1, 2} only");
  if (P.dim() != d) throw std::invalid_argument("n_certificate: dimension mismatch");
  for (const auto& coord : L.coords)
    if (coord.empty()) throw std::invalid_argument("empty conjugate-set coordinate");
  long degp = P.degree();
  long n = n_override >= 0 ? n_override : std::max(degp, 0L);
  if (n < degp) throw std::invalid_argument("n_certificate: n below deg P");
  if (degp > 64) throw std::invalid_argument("n_certificate: degree beyond resultant budget");

  Int total(1);
  for_each_combination(L, [&](const std::vector<const ConjugateSet*>& sets,
                              const std::vector<std::size_t>&) {
    total *= combination_certificate(P, sets, static_cast<unsigned long>(n));
  });
  return total;
}

Certificate finite_lower_bound(const AlgebraicLattice& L, unsigned n) {
  unsigned d = L.dim();
  Certificate cert;
  cert.kind = "n-integer";
  cert.degree_n = n;
  if (d < 1 || d > 2) {
    cert.applicable = false;
    cert.inapplicable_reason = "d > 2 not supported";
    return cert;
  }
  if (n < 1) {
    cert.applicable = false;
    cert.inapplicable_reason = "n must be >= 1";
    return cert;
  }

  Certificate best;
  best.applicable = false;
  best.kind = "n-integer";
  best.degree_n = n;
  best.inapplicable_reason = "no combination satisfied the preconditions";

  for_each_combination(L, [&](const std::vector<const ConjugateSet*>& sets,
                              const std::vector<std::size_t>&) {
    unsigned long m1 = sets[0]->degree_m;
    if (d == 1) {
      if (m1 <= n) {
        if (!best.applicable && best.inapplicable_reason.find("violated") == std::string::npos)
          best.inapplicable_reason = "violated: m > n (m = " + std::to_string(m1) +
                                     ", n = " + std::to_string(n) + ")";
        return;
      }
    } else {
      unsigned long m2 = sets[1]->degree_m;
      if (m1 <= m2 * n) {
        if (!best.applicable)
          best.inapplicable_reason = "violated: m1 > m2*n (m1 = " + std::to_string(m1) +
                                     ", m2*n = " + std::to_string(m2 * n) + ")";
        return;
      }
      if (m2 <= n) {
        if (!best.applicable)
          best.inapplicable_reason =
              "violated: m2 > n (m2 = " + std::to_string(m2) +
              ", n = " + std::to_string(n) + "); required so C_n cannot contain "
              "the second minimal polynomial as a factor";
        return;
      }
    }
    // bound: ||C_n|| >= (1/T)^(1/prod m), T = prod |a_j|^(n prod_{k!=j} m_k)
    Int T(1);
    unsigned long prod_m = 1;
    for (unsigned j = 0; j < d; ++j) prod_m *= sets[j]->degree_m;
    for (unsigned j = 0; j < d; ++j) {
      unsigned long e = n;
      for (unsigned k = 0; k < d; ++k)
        if (k != j) e *= sets[k]->degree_m;
      T *= pow_int(abs(sets[j]->leading), e);
    }
    Rat target(Int(1), T);
    target.canonicalize();
    Rat bound = nth_root_lower(target, prod_m);
    Certificate c;
    c.kind = "n-integer";
    c.degree_n = n;
    c.lower_bound = bound;
    c.display = "||C_n|| >= (1/" + T.get_str() + ")^(1/" + std::to_string(prod_m) + ")";
    for (unsigned j = 0; j < d; ++j) {
      c.hypotheses.push_back(
          {"irreducible minimal polynomial, coordinate " + std::to_string(j + 1),
           false});
      c.hypotheses.push_back(
          {"primitive minimal polynomial, coordinate " + std::to_string(j + 1), true});
      c.hypotheses.push_back(
          {"all conjugates inside projection, coordinate " + std::to_string(j + 1),
           sets[j]->membership == ConjugateSet::Membership::Verified});
    }
    c.hypotheses.push_back({"cardinality precondition", true});
    if (!best.applicable || (c.lower_bound && best.lower_bound &&
                             *c.lower_bound > *best.lower_bound))
      best = c;
  });
  return best;
}

AsymptoticBound asymptotic_lower_bound(
    const std::vector<std::vector<ConjugateSet>>& families) {
  if (families.empty()) throw std::invalid_argument("empty family list");
  AsymptoticBound out;
  out.estimate = mpf_class(1, kHpBits);
  out.certified_lower = Rat(1);
  for (const auto& family : families) {
    if (family.empty()) throw std::invalid_argument("empty family for a coordinate");
    mpf_class coord_best(0, kHpBits);
    Rat coord_best_rat(0);
    for (const ConjugateSet& s : family) {
      Rat base(Int(1), abs(s.leading));
      base.canonicalize();
      Rat lo = nth_root_lower(base, s.degree_m);
      mpf_class est = hp_exp(mpf_class(-hp_log(to_hp(Rat(abs(s.leading)))) /
                                       mpf_class(s.degree_m, kHpBits)));
      if (est > coord_best) coord_best = est;
      if (lo > coord_best_rat) coord_best_rat = lo;
    }
    out.estimate *= coord_best;
    out.certified_lower *= coord_best_rat;
  }
  out.note =
      "surrogate limsup over the supplied families only; not a standalone "
      "certificate (the asymptotic bound requires families with m_j -> infinity)";
  return out;
}

namespace {

IntPoly zvec_to_intpoly(const ZVec& v, unsigned dim, unsigned var) {
  IntPoly p(dim);
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] == 0) continue;
    std::vector<unsigned> k(dim, 0);
    k[var] = static_cast<unsigned>(i);
    p.add_term(MultiIndex(k), v[i]);
  }
  return p;
}

// interval evaluation of P over a product of rational intervals
struct RatInterval {
  Rat lo, hi;
};
RatInterval iv_mul(const RatInterval& a, const RatInterval& b) {
  Rat c1 = a.lo * b.lo, c2 = a.lo * b.hi, c3 = a.hi * b.lo, c4 = a.hi * b.hi;
  return {std::min(std::min(c1, c2), std::min(c3, c4)),
          std::max(std::max(c1, c2), std::max(c3, c4))};
}
RatInterval iv_pow(const RatInterval& a, unsigned e) {
  RatInterval r{Rat(1), Rat(1)};
  for (unsigned i = 0; i < e; ++i) r = iv_mul(r, a);
  return r;
}
RatInterval eval_interval(const IntPoly& P, const std::vector<RatInterval>& box) {
  RatInterval acc{Rat(0), Rat(0)};
  for (const auto& [k, c] : P.terms()) {
    RatInterval t{Rat(c), Rat(c)};
    for (unsigned j = 0; j < P.dim(); ++j)
      if (k.k[j]) t = iv_mul(t, iv_pow(box[j], k.k[j]));
    acc.lo += t.lo;
    acc.hi += t.hi;
  }
  return acc;
}

}  // namespace

VanishingReport vanishing_check(const IntPoly& P, const AlgebraicLattice& L,
                                unsigned refine_budget) {
  unsigned d = L.dim();
  if (d < 1 || d > 2) throw std::invalid_argument("vanishing_check supports d <= 2");
  if (P.dim() != d) throw std::invalid_argument("vanishing_check: dimension mismatch");

  VanishingReport report;
  report.certificate_product = n_certificate(P, L);

  // per-combination certificate factors (N_c = 0 iff some point of that
  // sub-lattice vanishes)
  std::map<std::vector<std::size_t>, Int> combo_factor;
  if (!P.is_zero()) {
    unsigned long n = static_cast<unsigned long>(std::max(P.degree(), 0L));
    for_each_combination(L, [&](const std::vector<const ConjugateSet*>& sets,
                                const std::vector<std::size_t>& idx) {
      combo_factor[idx] = combination_certificate(P, sets, n);
    });
  }

  // divisibility shortcuts per coordinate set
  std::vector<std::vector<bool>> divides(d);
  for (unsigned j = 0; j < d; ++j)
    for (const ConjugateSet& s : L.coords[j]) {
      IntPoly f = zvec_to_intpoly(s.min_poly, d, j);
      divides[j].push_back(P.exact_divide(f).has_value());
    }

  // enumerate real lattice points
  std::vector<std::vector<std::pair<std::size_t, RootInterval>>> axes(d);
  for (unsigned j = 0; j < d; ++j)
    for (std::size_t si = 0; si < L.coords[j].size(); ++si)
      for (const RootInterval& iv : L.coords[j][si].real_roots)
        axes[j].emplace_back(si, iv);

  std::vector<std::size_t> idx(d, 0);
  bool any = true;
  for (unsigned j = 0; j < d; ++j)
    if (axes[j].empty()) any = false;
  report.vanishes_everywhere = true;
  while (any) {
    PointVerdict v;
    v.status = PointVerdict::Status::Undetermined;
    bool shortcut = false;
    std::vector<std::size_t> combo;
    for (unsigned j = 0; j < d; ++j) {
      v.set_index.push_back(axes[j][idx[j]].first);
      combo.push_back(axes[j][idx[j]].first);
      v.coordinates.push_back(axes[j][idx[j]].second);
      if (divides[j][axes[j][idx[j]].first]) shortcut = true;
    }
    Int factor = P.is_zero() ? Int(0) : combo_factor[combo];
    if (!P.is_zero() && factor != 0 && !shortcut) {
      // no point of this sub-lattice vanishes
      v.status = PointVerdict::Status::NonZero;
      v.exact = true;
      report.vanishes_everywhere = false;
      report.points.push_back(std::move(v));
      unsigned jn = 0;
      while (jn < d) {
        if (++idx[jn] < axes[jn].size()) break;
        idx[jn] = 0;
        ++jn;
      }
      if (jn == d) break;
      continue;
    }
    if (shortcut) {
      v.status = PointVerdict::Status::Vanishes;
      v.exact = true;
    } else {
      // exact path when every coordinate is rational
      bool all_rational = true;
      for (unsigned j = 0; j < d; ++j)
        if (!v.coordinates[j].exact) all_rational = false;
      if (all_rational) {
        std::vector<QComplex> z;
        for (unsigned j = 0; j < d; ++j) z.emplace_back(v.coordinates[j].lo);
        v.status = P.eval(z).is_zero() ? PointVerdict::Status::Vanishes
                                       : PointVerdict::Status::NonZero;
        v.exact = true;
      } else if (d == 2 && (v.coordinates[0].exact || v.coordinates[1].exact)) {
        // substitute the rational coordinate exactly, then divisibility decides
        unsigned rat_j = v.coordinates[0].exact ? 0 : 1;
        unsigned alg_j = 1 - rat_j;
        const Rat& r = v.coordinates[rat_j].lo;
        // clear denominators: q^(deg) * P(r, y) has integer coefficients
        QPoly sub(1);
        long dr = P.degree_in(rat_j);
        Int qden = pow_int(r.get_den(), static_cast<unsigned long>(std::max(dr, 0L)));
        for (const auto& [k, c] : P.terms()) {
          Rat coeff = Rat(c) * pow_rat(r, k.k[rat_j]) * Rat(qden);
          if (coeff != 0) sub.add_term(MultiIndex({k.k[alg_j]}), coeff);
        }
        IntPoly g = to_intpoly(sub);
        const ConjugateSet& s = L.coords[alg_j][v.set_index[alg_j]];
        if (g.is_zero()) {
          v.status = PointVerdict::Status::Vanishes;
        } else {
          IntPoly f = zvec_to_intpoly(s.min_poly, 1, 0);
          v.status = g.exact_divide(f).has_value() ? PointVerdict::Status::Vanishes
                                                   : PointVerdict::Status::NonZero;
        }
        v.exact = true;
      } else {
        // interval refinement
        std::vector<RootInterval> ivs = v.coordinates;
        std::vector<ZVec> polys;
        for (unsigned j = 0; j < d; ++j)
          polys.push_back(L.coords[j][v.set_index[j]].min_poly);
        bool decided = false;
        for (unsigned round = 0; round < refine_budget && !decided; ++round) {
          std::vector<RatInterval> box;
          for (unsigned j = 0; j < d; ++j) box.push_back({ivs[j].lo, ivs[j].hi});
          RatInterval val = eval_interval(P, box);
          if (val.lo > 0 || val.hi < 0) {
            v.status = PointVerdict::Status::NonZero;
            decided = true;
            break;
          }
          for (unsigned j = 0; j < d; ++j)
            refine_root(polys[j], ivs[j], (ivs[j].hi - ivs[j].lo) / 4);
        }
        if (!decided) {
          // persistent bracketing of 0 plus a zero combination factor
          v.status = factor == 0 ? PointVerdict::Status::Vanishes
                                 : PointVerdict::Status::Undetermined;
          v.exact = false;
        }
      }
    }
    if (v.status != PointVerdict::Status::Vanishes) report.vanishes_everywhere = false;
    report.points.push_back(std::move(v));
    unsigned j = 0;
    while (j < d) {
      if (++idx[j] < axes[j].size()) break;
      idx[j] = 0;
      ++j;
    }
    if (j == d) break;
  }
  for (unsigned j = 0; j < d; ++j)
    for (std::size_t si = 0; si < L.coords[j].size(); ++si)
      if (!L.coords[j][si].all_roots_real)
        report.note += "coordinate " + std::to_string(j + 1) + " set " +
                       std::to_string(si + 1) +
                       " has non-real conjugates (not enumerated); ";
  return report;
}

Certificate hilbert_fekete_bound(const Rat& tC, unsigned d) {
  if (tC < 0) throw std::invalid_argument("hilbert_fekete_bound: negative input");
  if (d < 1) throw std::invalid_argument("hilbert_fekete_bound: d must be >= 1");
  Certificate cert;
  cert.kind = "hilbert-fekete";
  Rat bound = tC == 0 ? Rat(0) : root_power_upper(tC, d);
  cert.upper_bound = bound;
  cert.display = "t_Z(E) <= t_C(E)^(" + std::to_string(d) + "/" +
                 std::to_string(d + 1) + ")";
  cert.hypotheses.push_back({"E invariant under coordinatewise conjugation", false});
  return cert;
}

mpf_class hilbert_fekete_estimate(const mpf_class& tC, unsigned d) {
  if (tC < 0) throw std::invalid_argument("hilbert_fekete_estimate: negative input");
  if (d < 1) throw std::invalid_argument("hilbert_fekete_estimate: d must be >= 1");
  if (tC == 0) return mpf_class(0, kHpBits);
  mpf_class e = hp_log(tC) * mpf_class(d, kHpBits) / mpf_class(d + 1, kHpBits);
  return hp_exp(e);
}

ProjectionBound projection_bound(const Region& E,
                                 const std::vector<std::optional<Rat>>& coord_uppers) {
  ProjectionBound out;
  unsigned d = E.dim();
  bool all_large = true;
  for (unsigned j = 1; j <= d; ++j) {
    Projection proj = project(E, j);
    bool large = false;
    if (const Box* b = proj.region.get<Box>())
      large = proj.exact && b->bounds[0].second - b->bounds[0].first >= 4;
    else if (const Polydisk* p = proj.region.get<Polydisk>())
      large = proj.exact && p->radii[0] >= 1;
    else if (const Lemniscate* lem = proj.region.get<Lemniscate>()) {
      if (auto disk = univariate_disk_form(*lem)) large = proj.exact && disk->radius >= 1;
    }
    if (!large) all_large = false;
  }
  if (all_large) {
    out.upper = 1;
    out.exact_one = true;
    out.provenance = "every projection has t_C >= 1, so C_n = 1 and t_Z(E) = 1";
    return out;
  }
  out.upper = 1;
  out.provenance = "t_Z <= 1 (constant polynomial)";
  for (std::size_t j = 0; j < coord_uppers.size() && j < d; ++j) {
    if (!coord_uppers[j]) continue;
    if (*coord_uppers[j] < out.upper) {
      out.upper = *coord_uppers[j];
      out.provenance = "projection onto coordinate " + std::to_string(j + 1);
    }
  }
  return out;
}

std::optional<ClosedForm> closed_form(const Region& E, unsigned n, const Rat& tol) {
  auto sr = closed_form_search(E, n, tol);
  if (!sr) return std::nullopt;
  ClosedForm out;
  out.result = *sr;
  out.certificate.kind = "closed-form";
  out.certificate.degree_n = n;
  if (const Polydisk* p = E.get<Polydisk>()) {
    Rat rm = p->radii[0];
    for (const Rat& r : p->radii) rm = std::min(rm, r);
    out.tz_exact_base = rm >= 1 ? Rat(1) : rm;
    out.root_exponent = 1;
    out.certificate.display = rm >= 1 ? "t_Z(D_r) = 1" : "t_Z(D_r) = r_m";
    out.certificate.upper_bound = out.tz_exact_base;
    out.certificate.hypotheses.push_back({"extremal monomial (leading-coefficient bound)", true});
  } else if (const Lemniscate* L = E.get<Lemniscate>()) {
    Rat rm = L->radii[0];
    for (const Rat& r : L->radii) rm = std::min(rm, r);
    out.tz_exact_base = rm;
    out.root_exponent = L->map.degree_l;
    out.certificate.display = "t_Z(L_r(q)) = r_m^(1/l)";
    out.certificate.upper_bound = nth_root_upper(rm, L->map.degree_l);
    out.certificate.hypotheses.push_back({"simple polynomial mapping", true});
  }
  return out;
}

}  // namespace icheb
