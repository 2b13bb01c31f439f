#include "icheb/fekete.hpp"

#include <algorithm>

namespace icheb {

namespace {

std::vector<HpComplex> monomial_row(const RatPoint& z,
                                    const std::vector<MultiIndex>& basis,
                                    mp_bitcnt_t prec) {
  unsigned d = z.dim();
  std::vector<std::vector<HpComplex>> pw(d);
  unsigned maxdeg = 0;
  for (const auto& k : basis)
    for (unsigned j = 0; j < d; ++j) maxdeg = std::max(maxdeg, k.k[j]);
  for (unsigned j = 0; j < d; ++j) {
    pw[j].reserve(maxdeg + 1);
    HpComplex one(prec);
    one.re = 1;
    pw[j].push_back(one);
    HpComplex zj(z.coords[j], prec);
    for (unsigned e = 1; e <= maxdeg; ++e) pw[j].push_back(pw[j].back() * zj);
  }
  std::vector<HpComplex> row;
  row.reserve(basis.size());
  for (const auto& k : basis) {
    HpComplex v(prec);
    v.re = 1;
    for (unsigned j = 0; j < d; ++j)
      if (k.k[j]) v = v * pw[j][k.k[j]];
    row.push_back(std::move(v));
  }
  return row;
}

// log|det| by Gaussian elimination with full row pivoting on |.|^2.
VandermondeLog logdet(std::vector<std::vector<HpComplex>> M, mp_bitcnt_t prec) {
  VandermondeLog out;
  out.log_abs = mpf_class(0, prec);
  std::size_t h = M.size();
  for (std::size_t c = 0; c < h; ++c) {
    std::size_t piv = c;
    mpf_class best = M[c][c].norm2();
    for (std::size_t r = c + 1; r < h; ++r) {
      mpf_class v = M[r][c].norm2();
      if (v > best) {
        best = v;
        piv = r;
      }
    }
    if (best == 0) {
      out.singular = true;
      return out;
    }
    if (piv != c) std::swap(M[piv], M[c]);
    out.log_abs += hp_log(best) / 2;
    for (std::size_t r = c + 1; r < h; ++r) {
      if (M[r][c].is_zero()) continue;
      HpComplex f = hp_div(M[r][c], M[c][c]);
      for (std::size_t j = c; j < h; ++j) M[r][j] -= f * M[c][j];
    }
  }
  return out;
}

}  // namespace

VandermondeLog vandermonde_logabs(const std::vector<RatPoint>& points, unsigned d,
                                  unsigned n, mp_bitcnt_t prec) {
  DegreeDims dims = DegreeDims::make(d, n);
  if (Int(static_cast<unsigned long>(points.size())) != dims.h)
    throw std::invalid_argument("vandermonde_logabs: need h_n points");
  auto basis = monomials_upto(d, n);
  std::vector<std::vector<HpComplex>> M;
  M.reserve(points.size());
  for (const auto& z : points) {
    if (z.dim() != d) throw std::invalid_argument("vandermonde point dimension");
    M.push_back(monomial_row(z, basis, prec));
  }
  return logdet(std::move(M), prec);
}

QComplex vandermonde_det_exact(const std::vector<RatPoint>& points, unsigned d,
                               unsigned n) {
  DegreeDims dims = DegreeDims::make(d, n);
  if (Int(static_cast<unsigned long>(points.size())) != dims.h)
    throw std::invalid_argument("vandermonde_det_exact: need h_n points");
  if (dims.h > 12) throw std::invalid_argument("exact determinant limited to h <= 12");
  auto basis = monomials_upto(d, n);
  std::size_t h = points.size();
  std::vector<std::vector<QComplex>> M(h);
  for (std::size_t i = 0; i < h; ++i) {
    for (const auto& k : basis) {
      QComplex v(Rat(1));
      for (unsigned j = 0; j < d; ++j)
        for (unsigned e = 0; e < k.k[j]; ++e) v = v * points[i].coords[j];
      M[i].push_back(v);
    }
  }
  QComplex det(Rat(1));
  bool negate = false;
  for (std::size_t c = 0; c < h; ++c) {
    std::size_t piv = c;
    while (piv < h && M[piv][c].is_zero()) ++piv;
    if (piv == h) return QComplex();
    if (piv != c) {
      std::swap(M[piv], M[c]);
      negate = !negate;
    }
    det = det * M[c][c];
    for (std::size_t r = c + 1; r < h; ++r) {
      if (M[r][c].is_zero()) continue;
      QComplex f = qc_div(M[r][c], M[c][c]);
      for (std::size_t j = c; j < h; ++j) M[r][j] -= f * M[c][j];
    }
  }
  if (negate) det = QComplex(Rat(-1)) * det;
  return det;
}

namespace {

unsigned auto_density(const Region& E, unsigned n) {
  DegreeDims dims = DegreeDims::make(E.dim(), n);
  unsigned long h = dims.h.get_ui();
  if (E.get<Polydisk>() || E.get<Lemniscate>())
    return static_cast<unsigned>(std::max<unsigned long>(8 * h, 128));
  if (E.dim() == 1 || E.get<GraphSegment>())
    return static_cast<unsigned>(std::max<unsigned long>(6 * h, 96));
  // tensor grids: per-axis density
  return std::max(2 * n + 8, 12u);
}

struct InverseResult {
  bool singular = false;
  std::vector<std::vector<HpComplex>> inv;
};

InverseResult invert(std::vector<std::vector<HpComplex>> M, mp_bitcnt_t prec) {
  InverseResult out;
  std::size_t h = M.size();
  std::vector<std::vector<HpComplex>> I(h, std::vector<HpComplex>(h, HpComplex(prec)));
  for (std::size_t i = 0; i < h; ++i) I[i][i].re = 1;
  for (std::size_t c = 0; c < h; ++c) {
    std::size_t piv = c;
    mpf_class best = M[c][c].norm2();
    for (std::size_t r = c + 1; r < h; ++r) {
      mpf_class v = M[r][c].norm2();
      if (v > best) {
        best = v;
        piv = r;
      }
    }
    if (best == 0) {
      out.singular = true;
      return out;
    }
    if (piv != c) {
      std::swap(M[piv], M[c]);
      std::swap(I[piv], I[c]);
    }
    HpComplex pivot = M[c][c];
    for (std::size_t j = 0; j < h; ++j) {
      M[c][j] = hp_div(M[c][j], pivot);
      I[c][j] = hp_div(I[c][j], pivot);
    }
    for (std::size_t r = 0; r < h; ++r) {
      if (r == c || M[r][c].is_zero()) continue;
      HpComplex f = M[r][c];
      for (std::size_t j = 0; j < h; ++j) {
        M[r][j] -= f * M[c][j];
        I[r][j] -= f * I[c][j];
      }
    }
  }
  out.inv = std::move(I);
  return out;
}

void fill_diameters(FeketeSet& F, mp_bitcnt_t prec) {
  if (F.singular) {
    F.diam_raw = mpf_class(0, prec);
    F.diam_estimate = mpf_class(0, prec);
    return;
  }
  mpf_class l(F.l, prec), h(F.h, prec);
  F.diam_raw = hp_exp(mpf_class(F.log_abs_V / l));
  mpf_class normalized = F.log_abs_V - h * hp_log(h) / 2;
  F.diam_estimate = hp_exp(mpf_class(normalized / l));
}

}  // namespace

FeketeSet fekete_search(const Region& E, unsigned n, const FeketeOptions& opts) {
  if (n < 1) throw std::invalid_argument("fekete_search: n must be >= 1");
  unsigned d = E.dim();
  DegreeDims dims = DegreeDims::make(d, n);
  if (!dims.h.fits_ulong_p())
    throw std::invalid_argument("fekete_search: h_n too large");
  std::size_t h = dims.h.get_ui();
  mp_bitcnt_t prec = opts.prec;

  unsigned density = opts.grid_density ? opts.grid_density : auto_density(E, n);
  std::vector<RatPoint> grid = sample_grid(E, density, opts.seed);
  if (grid.size() < h)
    throw std::invalid_argument("fekete_search: grid smaller than h_n");

  FeketeSet F;
  F.d = d;
  F.n = n;
  F.h = dims.h;
  F.l = dims.l;

  auto basis = monomials_upto(d, n);
  std::vector<std::vector<HpComplex>> rows;
  rows.reserve(grid.size());
  for (const auto& z : grid) rows.push_back(monomial_row(z, basis, prec));

  // Greedy pivoted selection: at step t pick the candidate whose residual
  // column-t entry is largest, then eliminate it from the rest.
  std::vector<std::vector<HpComplex>> residual = rows;
  std::vector<bool> used(grid.size(), false);
  std::vector<std::size_t> chosen;
  for (std::size_t t = 0; t < h; ++t) {
    std::size_t best = grid.size();
    mpf_class best_v(0, prec);
    for (std::size_t i = 0; i < grid.size(); ++i) {
      if (used[i]) continue;
      mpf_class v = residual[i][t].norm2();
      if (best == grid.size() || v > best_v) {
        best = i;
        best_v = v;
      }
    }
    if (best == grid.size() || best_v == 0) {
      F.singular = true;
      F.points.clear();
      for (std::size_t i = 0; i < h; ++i) F.points.push_back(grid[i]);
      F.log_abs_V = mpf_class(0, prec);
      fill_diameters(F, prec);
      return F;
    }
    used[best] = true;
    chosen.push_back(best);
    for (std::size_t i = 0; i < grid.size(); ++i) {
      if (used[i] || residual[i][t].is_zero()) continue;
      HpComplex f = hp_div(residual[i][t], residual[best][t]);
      for (std::size_t j = t; j < h; ++j) residual[i][j] -= f * residual[best][j];
    }
  }

  std::vector<RatPoint> pts;
  for (std::size_t i : chosen) pts.push_back(grid[i]);
  VandermondeLog vl = vandermonde_logabs(pts, d, n, prec);
  if (vl.singular) {
    F.singular = true;
    F.points = pts;
    F.log_abs_V = mpf_class(0, prec);
    fill_diameters(F, prec);
    return F;
  }
  mpf_class logV = vl.log_abs;

  // Single-point exchange: replacing zeta_j by z scales |V| by |l_j(z)|.
  mpf_class threshold(1, prec);
  threshold += mpf_class(1e-20, prec);
  unsigned iters = 0;
  bool converged = false;
  while (iters < opts.max_exchange_iters) {
    std::vector<std::vector<HpComplex>> V;
    V.reserve(h);
    for (const auto& z : pts) V.push_back(monomial_row(z, basis, prec));
    InverseResult inv = invert(std::move(V), prec);
    if (inv.singular) break;
    std::size_t best_j = h, best_i = grid.size();
    mpf_class best_gain(0, prec);
    for (std::size_t i = 0; i < grid.size(); ++i) {
      // l_j(z) = sum_k inv[k][j] * phi_k(z)
      for (std::size_t j = 0; j < h; ++j) {
        HpComplex acc(prec);
        for (std::size_t k = 0; k < h; ++k) acc += inv.inv[k][j] * rows[i][k];
        mpf_class g = acc.norm2();
        if (g > best_gain) {
          best_gain = g;
          best_j = j;
          best_i = i;
        }
      }
    }
    if (best_j == h || best_gain <= threshold) {
      converged = true;
      break;
    }
    pts[best_j] = grid[best_i];
    logV += hp_log(best_gain) / 2;
    ++iters;
  }

  F.points = std::move(pts);
  VandermondeLog final_vl = vandermonde_logabs(F.points, d, n, prec);
  F.singular = final_vl.singular;
  F.log_abs_V = final_vl.singular ? mpf_class(0, prec) : final_vl.log_abs;
  F.exchange_iterations = iters;
  F.exchange_converged = converged;
  fill_diameters(F, prec);
  return F;
}

std::vector<FeketeSet> tdiam_estimate(const Region& E, unsigned n_max,
                                      const FeketeOptions& opts) {
  if (n_max < 1) throw std::invalid_argument("tdiam_estimate: n_max must be >= 1");
  std::vector<FeketeSet> out;
  for (unsigned n = 1; n <= n_max; ++n) {
    try {
      out.push_back(fekete_search(E, n, opts));
    } catch (const std::invalid_argument&) {
      // undersized grids (e.g. finite point sets with < h_n points) degenerate
      FeketeSet F;
      F.d = E.dim();
      F.n = n;
      DegreeDims dims = DegreeDims::make(F.d, n);
      F.h = dims.h;
      F.l = dims.l;
      F.singular = true;
      F.log_abs_V = mpf_class(0, opts.prec);
      F.diam_raw = mpf_class(0, opts.prec);
      F.diam_estimate = mpf_class(0, opts.prec);
      out.push_back(std::move(F));
    }
  }
  return out;
}

mpf_class lagrange_sup_check(const FeketeSet& F, const Region& E,
                             unsigned sample_density, mp_bitcnt_t prec) {
  if (F.singular) throw std::invalid_argument("lagrange_sup_check: singular set");
  auto basis = monomials_upto(F.d, F.n);
  std::vector<std::vector<HpComplex>> V;
  for (const auto& z : F.points) V.push_back(monomial_row(z, basis, prec));
  InverseResult inv = invert(std::move(V), prec);
  if (inv.singular)
    throw std::invalid_argument("lagrange_sup_check: singular denominator");
  std::size_t h = F.points.size();
  mpf_class best(0, prec);
  for (const RatPoint& z : sample_grid(E, sample_density, 0)) {
    auto row = monomial_row(z, basis, prec);
    for (std::size_t j = 0; j < h; ++j) {
      HpComplex acc(prec);
      for (std::size_t k = 0; k < h; ++k) acc += inv.inv[k][j] * row[k];
      mpf_class g = acc.norm2();
      if (g > best) best = g;
    }
  }
  mpf_class out(0, prec);
  mpf_sqrt(out.get_mpf_t(), best.get_mpf_t());
  return out;
}

}  // namespace icheb
