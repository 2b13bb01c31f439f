#include "icheb/intsearch.hpp"

#include <algorithm>
#include <map>

#include "icheb/lattice.hpp"

namespace icheb {

std::string strategy_name(Strategy s) {
  switch (s) {
    case Strategy::Exhaustive: return "exhaustive";
    case Strategy::Lattice: return "lattice";
    case Strategy::Minkowski: return "minkowski";
    case Strategy::ClosedForm: return "closed-form";
  }
  return "?";
}

namespace {

constexpr unsigned long kExhaustiveMaxH = 12;
const long kExhaustiveMaxVolume = 10000000;

/// Lexicographic compare of (|coef|, sign) sequences in graded-lex monomial
/// order; the smaller key is the canonical representative among equal norms.
int key_compare(const IntPoly& a, const IntPoly& b,
                const std::vector<MultiIndex>& monos) {
  for (const auto& k : monos) {
    Int ca = a.coeff(k), cb = b.coeff(k);
    Int ma = abs(ca), mb = abs(cb);
    if (ma != mb) return ma < mb ? -1 : 1;
    bool na = ca < 0, nb = cb < 0;
    if (na != nb) return na ? 1 : -1;
  }
  return 0;
}

/// Canonical sign: first nonzero coefficient (graded-lex order) positive.
IntPoly canonical_sign(IntPoly p, const std::vector<MultiIndex>& monos) {
  for (const auto& k : monos) {
    Int c = p.coeff(k);
    if (c == 0) continue;
    if (c < 0) return -p;
    break;
  }
  return p;
}

IntPoly content_reduced(const IntPoly& p) {
  Int c = p.content();
  if (c <= 1) return p;
  IntPoly out(p.dim());
  for (const auto& [k, v] : p.terms()) out.add_term(k, v / c);
  return out;
}

std::vector<RatPoint> unisolvent_candidates(const Region& E, unsigned n) {
  unsigned d = E.dim();
  if (const Polydisk* p = E.get<Polydisk>()) {
    std::vector<std::vector<QComplex>> axes;
    for (const Rat& r : p->radii)
      axes.push_back(rational_circle_points(QComplex(), r, std::max(n + 1, 4u)));
    std::vector<RatPoint> out;
    std::vector<std::size_t> idx(axes.size(), 0);
    while (true) {
      RatPoint pt;
      for (std::size_t j = 0; j < axes.size(); ++j) pt.coords.push_back(axes[j][idx[j]]);
      out.push_back(std::move(pt));
      std::size_t j = 0;
      while (j < axes.size()) {
        if (++idx[j] < axes[j].size()) break;
        idx[j] = 0;
        ++j;
      }
      if (j == axes.size()) break;
    }
    return out;
  }
  if (const Lemniscate* L = E.get<Lemniscate>()) {
    if (auto disk = univariate_disk_form(*L)) {
      std::vector<RatPoint> out;
      for (const QComplex& z :
           rational_circle_points(disk->center, disk->radius, std::max(2 * (n + 1), 8u)))
        out.push_back(RatPoint({z}));
      return out;
    }
  }
  unsigned density = d == 1 ? n + 1 : n + 2;
  if (E.get<Lemniscate>()) density = std::max(4 * (n + 1), 16u);  // filtered grids are sparse
  return sample_grid(E, std::max(density, 2u), 0);
}

/// h unisolvent points of E chosen by exact greedy elimination.
std::vector<RatPoint> unisolvent_points(const Region& E, unsigned n) {
  unsigned d = E.dim();
  DegreeDims dims = DegreeDims::make(d, n);
  std::size_t h = dims.h.get_ui();
  auto basis = monomials_upto(d, n);
  std::vector<RatPoint> grid = unisolvent_candidates(E, n);
  if (grid.size() < h) throw std::invalid_argument("singular point set: grid too small");

  std::vector<std::vector<QComplex>> rows;
  rows.reserve(grid.size());
  for (const auto& z : grid) {
    std::vector<QComplex> row;
    row.reserve(h);
    for (const auto& k : basis) {
      QComplex v(Rat(1));
      for (unsigned j = 0; j < d; ++j)
        for (unsigned e = 0; e < k.k[j]; ++e) v = v * z.coords[j];
      row.push_back(std::move(v));
    }
    rows.push_back(std::move(row));
  }
  std::vector<bool> used(grid.size(), false);
  std::vector<std::size_t> chosen;
  for (std::size_t t = 0; t < h; ++t) {
    std::size_t best = grid.size();
    Rat best_v(0);
    for (std::size_t i = 0; i < grid.size(); ++i) {
      if (used[i]) continue;
      Rat v = rows[i][t].abs2();
      if (best == grid.size() ? v > 0 : v > best_v) {
        best = i;
        best_v = v;
      }
    }
    if (best == grid.size())
      throw std::invalid_argument("singular point set: no unisolvent configuration");
    used[best] = true;
    chosen.push_back(best);
    for (std::size_t i = 0; i < grid.size(); ++i) {
      if (used[i] || rows[i][t].is_zero()) continue;
      QComplex f = qc_div(rows[i][t], rows[best][t]);
      for (std::size_t j = t; j < h; ++j) rows[i][j] -= f * rows[best][j];
    }
  }
  std::vector<RatPoint> out;
  for (std::size_t i : chosen) out.push_back(grid[i]);
  return out;
}

std::vector<std::vector<QComplex>> exact_inverse(
    std::vector<std::vector<QComplex>> M) {
  std::size_t h = M.size();
  std::vector<std::vector<QComplex>> I(h, std::vector<QComplex>(h));
  for (std::size_t i = 0; i < h; ++i) I[i][i] = QComplex(Rat(1));
  for (std::size_t c = 0; c < h; ++c) {
    std::size_t piv = c;
    Rat best = M[c][c].abs2();
    for (std::size_t r = c + 1; r < h; ++r) {
      Rat v = M[r][c].abs2();
      if (v > best) {
        best = v;
        piv = r;
      }
    }
    if (best == 0) throw std::invalid_argument("singular point set");
    if (piv != c) {
      std::swap(M[piv], M[c]);
      std::swap(I[piv], I[c]);
    }
    QComplex pivot = M[c][c];
    for (std::size_t j = 0; j < h; ++j) {
      M[c][j] = qc_div(M[c][j], pivot);
      I[c][j] = qc_div(I[c][j], pivot);
    }
    for (std::size_t r = 0; r < h; ++r) {
      if (r == c || M[r][c].is_zero()) continue;
      QComplex f = M[r][c];
      for (std::size_t j = 0; j < h; ++j) {
        M[r][j] -= f * M[c][j];
        I[r][j] -= f * I[c][j];
      }
    }
  }
  return I;
}

std::vector<std::vector<QComplex>> vandermonde_exact(
    const std::vector<RatPoint>& pts, const std::vector<MultiIndex>& basis) {
  std::vector<std::vector<QComplex>> M;
  M.reserve(pts.size());
  for (const auto& z : pts) {
    std::vector<QComplex> row;
    for (const auto& k : basis) {
      QComplex v(Rat(1));
      for (unsigned j = 0; j < z.dim(); ++j)
        for (unsigned e = 0; e < k.k[j]; ++e) v = v * z.coords[j];
      row.push_back(std::move(v));
    }
    M.push_back(std::move(row));
  }
  return M;
}

struct Best {
  bool set = false;
  IntPoly poly{1};
  NormEnclosure norm;
  std::string source;
};

void offer(Best& best, const IntPoly& p, const NormEnclosure& e,
           const std::vector<MultiIndex>& monos, const std::string& source) {
  if (!best.set) {
    best = {true, p, e, source};
    return;
  }
  // a certified upper bound always beats an uncertified one
  if (e.upper_certified != best.norm.upper_certified) {
    if (e.upper_certified) best = {true, p, e, source};
    return;
  }
  if (e.upper < best.norm.upper ||
      (e.upper == best.norm.upper && e.lower == best.norm.lower &&
       key_compare(p, best.poly, monos) < 0)) {
    best = {true, p, e, source};
  }
}

}  // namespace

std::vector<Int> coefficient_box(const Region& E, unsigned n, const Rat& B) {
  if (B < 0) throw std::invalid_argument("coefficient_box: negative norm bound");
  unsigned d = E.dim();
  auto basis = monomials_upto(d, n);
  std::vector<RatPoint> pts = unisolvent_points(E, n);
  auto inv = exact_inverse(vandermonde_exact(pts, basis));
  std::size_t h = basis.size();
  std::vector<Int> out(h);
  const Polydisk* disk = E.get<Polydisk>();
  for (std::size_t k = 0; k < h; ++k) {
    // rho_k = sum_i |inv[k][i]|, certified upward
    Rat rho(0);
    for (std::size_t i = 0; i < h; ++i) {
      const QComplex& a = inv[k][i];
      rho += a.is_real() ? (a.re < 0 ? Rat(-a.re) : a.re) : sqrt_upper(a.abs2());
    }
    Rat bound = B * rho;
    if (disk) {
      // Cauchy bound on the polydisk: |a_k| <= B / r^k
      Rat w(1);
      for (unsigned j = 0; j < d; ++j)
        if (basis[k].k[j]) w *= pow_rat(disk->radii[j], basis[k].k[j]);
      Rat cauchy = B / w;
      if (cauchy < bound) bound = cauchy;
    }
    out[k] = bound.get_num() / bound.get_den();  // floor for nonnegative bound
  }
  return out;
}

SearchResult exhaustive_search(const Region& E, unsigned n, const Rat& tol,
                               const SearchOptions& opts) {
  unsigned d = E.dim();
  DegreeDims dims = DegreeDims::make(d, n);
  if (dims.h > Int(kExhaustiveMaxH))
    throw GuardExceeded("exhaustive_search: h_n = " + dims.h.get_str() + " > 12");
  auto basis = monomials_upto(d, n);
  std::size_t h = basis.size();

  // seed candidates: the constant 1, closed forms, injected extras
  Best best;
  {
    NormEnclosure one = supnorm_region(IntPoly::constant(d, 1), E, tol, opts.supnorm);
    offer(best, IntPoly::constant(d, 1), one, basis, "constant");
  }
  if (auto cf = closed_form_search(E, n, tol, opts.supnorm))
    offer(best, cf->poly, cf->norm, basis, "closed-form");
  for (const IntPoly& cand : opts.extra_candidates) {
    if (cand.is_zero() || cand.dim() != d || cand.degree() > static_cast<long>(n))
      continue;
    IntPoly c = canonical_sign(content_reduced(cand), basis);
    offer(best, c, supnorm_region(c, E, tol, opts.supnorm), basis, "injected");
  }

  Rat B = best.norm.upper;
  std::vector<Int> box;
  std::vector<RatPoint> pts;
  try {
    box = coefficient_box(E, n, B);
    pts = unisolvent_points(E, n);
  } catch (const std::invalid_argument& e) {
    // no unisolvent rational configuration reachable: exhaustive infeasible
    throw GuardExceeded(std::string("exhaustive_search: ") + e.what());
  }
  Int volume(1);
  for (const Int& m : box) volume *= 2 * m + 1;
  if (volume > kExhaustiveMaxVolume)
    throw GuardExceeded("exhaustive_search: coefficient box volume " +
                        volume.get_str() + " > 1e7");
  auto phi = vandermonde_exact(pts, basis);  // phi[i][k]
  std::vector<RatPoint> probes = sample_grid(E, std::max(opts.probe_density, 4u), 0);

  // odometer over the box with incremental point values
  std::vector<long> a(h), m(h);
  bool nonempty = true;
  for (std::size_t k = 0; k < h; ++k) {
    if (!box[k].fits_slong_p()) throw GuardExceeded("coefficient bound overflow");
    m[k] = box[k].get_si();
    a[k] = -m[k];
  }
  std::vector<QComplex> values(h);
  for (std::size_t i = 0; i < h; ++i) {
    QComplex acc;
    for (std::size_t k = 0; k < h; ++k)
      if (a[k] != 0) acc += phi[i][k] * QComplex(Rat(a[k]));
    values[i] = acc;
  }

  long examined = 0;
  while (nonempty) {
    ++examined;
    // canonical-sign filter: first nonzero coefficient positive
    int first_sign = 0;
    for (std::size_t k = 0; k < h; ++k)
      if (a[k] != 0) {
        first_sign = a[k] > 0 ? 1 : -1;
        break;
      }
    if (first_sign == 1) {
      Rat bu2 = best.norm.upper * best.norm.upper;
      bool pruned = false;
      for (std::size_t i = 0; i < h; ++i)
        if (values[i].abs2() > bu2) {
          pruned = true;
          break;
        }
      if (!pruned) {
        IntPoly cand(d);
        for (std::size_t k = 0; k < h; ++k)
          if (a[k] != 0) cand.add_term(basis[k], Int(a[k]));
        // cheap probe rejection before the certified enclosure
        bool survives = true;
        for (const RatPoint& z : probes)
          if (cand.eval(z.coords).abs2() > bu2) {
            survives = false;
            break;
          }
        if (survives)
          offer(best, cand, supnorm_region(cand, E, tol, opts.supnorm), basis,
                "enumeration");
      }
    }
    // increment
    std::size_t p = 0;
    while (p < h) {
      if (a[p] < m[p]) {
        a[p] += 1;
        for (std::size_t i = 0; i < h; ++i) values[i] += phi[i][p];
        break;
      }
      // reset digit p to -m[p]
      if (m[p] != 0) {
        QComplex delta(Rat(-2 * m[p]));
        for (std::size_t i = 0; i < h; ++i) values[i] += phi[i][p] * delta;
      }
      a[p] = -m[p];
      ++p;
    }
    if (p == h) nonempty = false;
  }

  SearchResult out;
  out.poly = best.poly;
  out.norm = best.norm;
  out.degree = n;
  out.strategy = Strategy::Exhaustive;
  out.certified_optimal = true;
  out.note = "box volume " + volume.get_str() + ", examined " +
             std::to_string(examined) + ", winner via " + best.source;
  return out;
}

namespace {

std::vector<RatPoint> lattice_samples(const Region& E, unsigned n, unsigned samples) {
  unsigned d = E.dim();
  if (const Box* b = E.get<Box>()) {
    unsigned per_axis = samples ? samples : std::max(4 * (n + 1), 24u);
    if (d > 1) per_axis = samples ? samples : std::max(2 * (n + 1), 12u);
    std::vector<std::vector<QComplex>> axes;
    for (const auto& [lo, hi] : b->bounds) {
      std::vector<QComplex> axis;
      for (unsigned i = 0; i < per_axis; ++i) {
        Rat t(static_cast<unsigned long>(i), static_cast<unsigned long>(per_axis - 1));
        t.canonicalize();
        axis.emplace_back(lo + (hi - lo) * t);
      }
      axes.push_back(std::move(axis));
    }
    std::vector<RatPoint> out;
    std::vector<std::size_t> idx(axes.size(), 0);
    while (true) {
      RatPoint pt;
      for (std::size_t j = 0; j < axes.size(); ++j) pt.coords.push_back(axes[j][idx[j]]);
      out.push_back(std::move(pt));
      std::size_t j = 0;
      while (j < axes.size()) {
        if (++idx[j] < axes[j].size()) break;
        idx[j] = 0;
        ++j;
      }
      if (j == axes.size()) break;
    }
    return out;
  }
  if (const Polydisk* p = E.get<Polydisk>()) {
    unsigned per_axis = samples ? samples : std::max(2 * (n + 1), 12u);
    std::vector<std::vector<QComplex>> axes;
    for (const Rat& r : p->radii)
      axes.push_back(rational_circle_points(QComplex(), r, per_axis));
    std::vector<RatPoint> out;
    std::vector<std::size_t> idx(axes.size(), 0);
    while (true) {
      RatPoint pt;
      for (std::size_t j = 0; j < axes.size(); ++j) pt.coords.push_back(axes[j][idx[j]]);
      out.push_back(std::move(pt));
      std::size_t j = 0;
      while (j < axes.size()) {
        if (++idx[j] < axes[j].size()) break;
        idx[j] = 0;
        ++j;
      }
      if (j == axes.size()) break;
    }
    return out;
  }
  if (const GraphSegment* g = E.get<GraphSegment>()) {
    unsigned count = samples ? samples : std::max(4 * (n + 1), 24u);
    std::vector<RatPoint> out;
    for (unsigned i = 0; i < count; ++i) {
      Rat t(static_cast<unsigned long>(i), static_cast<unsigned long>(count - 1));
      t.canonicalize();
      Rat x = g->base.first + (g->base.second - g->base.first) * t;
      out.push_back(RatPoint::real({x, Rat(g->line_c0) + Rat(g->line_c1) * x}));
    }
    return out;
  }
  if (const Lemniscate* L = E.get<Lemniscate>()) {
    if (auto disk = univariate_disk_form(*L)) {
      unsigned count = samples ? samples : std::max(4 * (n + 1), 24u);
      std::vector<RatPoint> out;
      for (const QComplex& z : rational_circle_points(disk->center, disk->radius, count))
        out.push_back(RatPoint({z}));
      return out;
    }
    return sample_grid(E, samples ? samples : 12, 0);
  }
  return sample_grid(E, samples ? samples : 8, 0);
}

/// Integer Gram of the sample quadratic form, scaled by 10^24 and ridged.
std::vector<std::vector<Int>> sample_gram(const std::vector<RatPoint>& pts,
                                          const std::vector<MultiIndex>& basis) {
  auto M = vandermonde_exact(pts, basis);
  std::size_t h = basis.size();
  Int scale = pow_int(10, 24);
  std::vector<std::vector<Int>> G(h, std::vector<Int>(h, Int(0)));
  for (std::size_t k = 0; k < h; ++k)
    for (std::size_t l = k; l < h; ++l) {
      Rat acc(0);
      for (std::size_t i = 0; i < pts.size(); ++i) {
        const QComplex& x = M[i][k];
        const QComplex& y = M[i][l];
        acc += x.re * y.re + x.im * y.im;  // Re(x * conj(y))
      }
      Rat scaled = acc * Rat(scale);
      Int rounded = scaled.get_num() / scaled.get_den();
      G[k][l] = rounded;
      G[l][k] = rounded;
    }
  // entrywise truncation can perturb eigenvalues by up to h; ridge past that
  Int ridge(static_cast<unsigned long>(h) + 1);
  for (std::size_t k = 0; k < h; ++k) G[k][k] += ridge;
  return G;
}

struct CandidatePool {
  std::vector<IntPoly> polys;
  std::vector<std::string> sources;

  void add(IntPoly p, const std::vector<MultiIndex>& monos, const std::string& src) {
    if (p.is_zero()) return;
    p = canonical_sign(content_reduced(std::move(p)), monos);
    for (const IntPoly& q : polys)
      if (q == p) return;
    polys.push_back(std::move(p));
    sources.push_back(src);
  }
};

SearchResult search_with_gram(const Region& E, unsigned n, const Rat& tol,
                              const SearchOptions& opts,
                              const std::vector<RatPoint>& samples,
                              Strategy strategy) {
  unsigned d = E.dim();
  auto basis = monomials_upto(d, n);
  std::size_t h = basis.size();

  auto G = sample_gram(samples, basis);
  GramLLL red = lll_reduce_gram(G, opts.lll_delta);

  // enumeration bound: the L2-shortest vector rarely coincides with the
  // sup-norm minimizer, so cast the net several times wider than the
  // smallest reduced-vector value
  Rat bound;
  bool bound_set = false;
  for (std::size_t i = 0; i < h; ++i) {
    Rat v = gram_value(G, red.transform[i]);
    if (!bound_set || v < bound) {
      bound = v;
      bound_set = true;
    }
  }
  bound *= 6;
  ShortVectors sv =
      enumerate_short_vectors(G, red, bound, opts.enum_budget, opts.max_candidates);

  CandidatePool pool;
  for (const auto& [val, vec] : sv.vectors) {
    IntPoly p(d);
    for (std::size_t k = 0; k < h; ++k)
      if (vec[k] != 0) p.add_term(basis[k], vec[k]);
    pool.add(std::move(p), basis, "enumeration");
  }
  for (std::size_t i = 0; i < h; ++i) {
    IntPoly p(d);
    for (std::size_t k = 0; k < h; ++k)
      if (red.transform[i][k] != 0) p.add_term(basis[k], red.transform[i][k]);
    pool.add(std::move(p), basis, "reduced-basis");
  }
  pool.add(IntPoly::constant(d, 1), basis, "constant");
  std::optional<SearchResult> cf = closed_form_search(E, n, tol, opts.supnorm);
  for (const IntPoly& cand : opts.extra_candidates) {
    if (cand.dim() == d && !cand.is_zero() && cand.degree() <= static_cast<long>(n))
      pool.add(cand, basis, "injected");
  }

  // composition witnesses for lemniscate candidates: p == g o q certifies the
  // norm через the polydisk of the radii
  auto witness_for = [&](const IntPoly& p) -> std::optional<IntPoly> {
    const Lemniscate* L = E.get<Lemniscate>();
    if (!L || L->map.monic_relaxed) return std::nullopt;
    unsigned l = L->map.degree_l;
    if (l == 0 || n % l != 0) return std::nullopt;
    for (unsigned j = 0; j < L->dim(); ++j)
      for (unsigned k = 1; k * l <= n; ++k) {
        if (L->map.components[j].pow(k) == p) {
          std::vector<unsigned> e(L->dim(), 0);
          e[j] = k;
          return IntPoly::monomial(L->dim(), MultiIndex(e), 1);
        }
      }
    return std::nullopt;
  };

  // cheap exact probe lower bounds rank the pool
  std::vector<RatPoint> probes = sample_grid(E, std::max(opts.probe_density, 4u), 0);
  std::vector<std::pair<Rat, std::size_t>> ranked;
  for (std::size_t i = 0; i < pool.polys.size(); ++i) {
    Rat worst(0);
    for (const RatPoint& z : probes) {
      Rat a2 = pool.polys[i].eval(z.coords).abs2();
      if (a2 > worst) worst = a2;
    }
    ranked.emplace_back(worst, i);
  }
  std::sort(ranked.begin(), ranked.end(), [](const auto& a, const auto& b) {
    if (a.first != b.first) return a.first < b.first;
    return a.second < b.second;
  });

  Best best;
  if (cf) offer(best, cf->poly, cf->norm, basis, "closed-form");
  std::size_t certified = 0;
  for (const auto& [probe2, idx] : ranked) {
    if (best.set) {
      Rat bu2 = best.norm.upper * best.norm.upper;
      if (probe2 > bu2) break;  // probe value already exceeds the best norm
    }
    if (certified >= 48) break;
    ++certified;
    std::optional<IntPoly> g = witness_for(pool.polys[idx]);
    NormEnclosure e =
        supnorm_region(pool.polys[idx], E, tol, opts.supnorm, g ? &*g : nullptr);
    offer(best, pool.polys[idx], e, basis, pool.sources[idx]);
  }
  if (!best.set) throw std::runtime_error("lattice search produced no candidates");

  SearchResult out;
  out.poly = best.poly;
  out.norm = best.norm;
  out.degree = n;
  out.strategy = strategy;
  out.certified_optimal = false;
  out.note = "candidates " + std::to_string(pool.polys.size()) + ", certified " +
             std::to_string(certified) + ", winner via " + best.source +
             (sv.budget_exhausted ? ", enumeration budget exhausted" : "");
  return out;
}

}  // namespace

SearchResult lattice_search(const Region& E, unsigned n, const Rat& tol,
                            const SearchOptions& opts) {
  if (n < 1) throw std::invalid_argument("lattice_search: n must be >= 1");
  std::vector<RatPoint> samples = lattice_samples(E, n, opts.samples);
  DegreeDims dims = DegreeDims::make(E.dim(), n);
  if (Int(static_cast<unsigned long>(samples.size())) < dims.h)
    throw std::invalid_argument("lattice_search: rank-deficient sample set");
  return search_with_gram(E, n, tol, opts, samples, Strategy::Lattice);
}

SearchResult minkowski_construct(const FeketeSet& F, const Region& E, const Rat& tol,
                                 const SearchOptions& opts) {
  if (F.singular) throw std::invalid_argument("minkowski_construct: degenerate Fekete set");
  SearchResult out = search_with_gram(E, F.n, tol, opts, F.points, Strategy::Minkowski);

  // a-posteriori check against h_n |V|^{1/h_n}
  mpf_class hf(F.h, kHpBits);
  mpf_class target = hf * hp_exp(mpf_class(F.log_abs_V / hf));
  Rat target_up = snap_to_rational(target, 34);
  target_up += Rat(Int(1), pow_int(10, 30));
  Rat allowed = target_up * (Rat(1) + tol);
  if (out.norm.upper <= allowed) {
    out.bound_realized = true;
    out.note += "; Minkowski bound realized (target " + decimal_string(target, 20) + ")";
  } else {
    out.note += "; bound not realized (target " + decimal_string(target, 20) + ")";
  }
  return out;
}

std::optional<SearchResult> closed_form_search(const Region& E, unsigned n,
                                               const Rat& tol,
                                               const SupnormOptions& sopts) {
  if (const Polydisk* p = E.get<Polydisk>()) {
    unsigned m = 0;
    for (unsigned j = 1; j < p->radii.size(); ++j)
      if (p->radii[j] < p->radii[m]) m = j;
    SearchResult out;
    out.degree = n;
    out.strategy = Strategy::ClosedForm;
    out.certified_optimal = true;  // extremal by the leading-coefficient bound
    if (p->radii[m] >= 1) {
      out.poly = IntPoly::constant(p->dim(), 1);
      out.note = "r_m >= 1: C_n = 1";
    } else {
      std::vector<unsigned> k(p->dim(), 0);
      k[m] = n;
      out.poly = n == 0 ? IntPoly::constant(p->dim(), 1)
                        : IntPoly::monomial(p->dim(), MultiIndex(k), 1);
      out.note = "polydisk extremal monomial z_" + std::to_string(m + 1) + "^" +
                 std::to_string(n);
    }
    out.norm = supnorm_region(out.poly, E, tol, sopts);
    return out;
  }
  if (const Lemniscate* L = E.get<Lemniscate>()) {
    if (L->map.monic_relaxed || L->dim() < 2) return std::nullopt;
    unsigned l = L->map.degree_l;
    unsigned m = 0;
    for (unsigned j = 1; j < L->radii.size(); ++j)
      if (L->radii[j] < L->radii[m]) m = j;
    if (L->radii[m] >= 1 || n % l != 0) return std::nullopt;
    unsigned k = n / l;
    SearchResult out;
    out.degree = n;
    out.strategy = Strategy::ClosedForm;
    out.certified_optimal = true;  // extremal via the polydisk pullback
    out.poly = L->map.components[m].pow(k);
    std::vector<unsigned> e(L->dim(), 0);
    e[m] = k;
    IntPoly witness = k == 0 ? IntPoly::constant(L->dim(), 1)
                             : IntPoly::monomial(L->dim(), MultiIndex(e), 1);
    out.norm = supnorm_region(out.poly, E, tol, {}, &witness);
    out.note = "lemniscate extremal q_" + std::to_string(m + 1) + "^" +
               std::to_string(k);
    return out;
  }
  return std::nullopt;
}

TzSequence tz_sequence(const Region& E, unsigned n_max, const std::string& strategy,
                       const Rat& tol, const SearchOptions& opts) {
  if (n_max < 1) throw std::invalid_argument("tz_sequence: n_max must be >= 1");
  TzSequence seq;
  std::vector<IntPoly> winners;  // winners[i] for degree i+1
  for (unsigned n = 1; n <= n_max; ++n) {
    SearchOptions local = opts;
    // inject products of lower-degree winners and explicit powers
    for (unsigned i = 1; 2 * i <= n; ++i) {
      unsigned j = n - i;
      if (i >= 1 && j >= 1 && i <= winners.size() && j <= winners.size())
        local.extra_candidates.push_back(winners[i - 1] * winners[j - 1]);
    }
    for (unsigned dd = 1; dd < n; ++dd)
      if (n % dd == 0 && dd <= winners.size())
        local.extra_candidates.push_back(winners[dd - 1].pow(n / dd));

    SearchResult r;
    if (strategy == "exhaustive") {
      r = exhaustive_search(E, n, tol, local);
    } else if (strategy == "lattice") {
      r = lattice_search(E, n, tol, local);
    } else if (strategy == "closed-form") {
      auto cf = closed_form_search(E, n, tol, local.supnorm);
      if (!cf) throw std::invalid_argument("no closed form for this region/degree");
      r = *cf;
    } else if (strategy == "auto") {
      if (auto cf = closed_form_search(E, n, tol, local.supnorm)) {
        r = *cf;
      } else {
        try {
          r = exhaustive_search(E, n, tol, local);
        } catch (const GuardExceeded&) {
          r = lattice_search(E, n, tol, local);
        }
      }
    } else {
      throw std::invalid_argument("unknown strategy: " + strategy);
    }
    winners.push_back(r.poly);
    Rat root = nth_root_upper(r.norm.upper, n);
    bool certified = r.norm.upper_certified;
    seq.per_degree.push_back(std::move(r));
    seq.root_upper.push_back(root);
    // only certified uppers feed the running t_Z estimate
    if (certified && (seq.running_upper_at == 0 || root < seq.running_upper)) {
      seq.running_upper = root;
      seq.running_upper_at = n;
    }
  }
  return seq;
}

}  // namespace icheb
