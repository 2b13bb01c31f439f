#include "icheb/supnorm.hpp"

#include <algorithm>
#include <memory>

#include "icheb/bernstein.hpp"

namespace icheb {

namespace {

struct QueueEntry {
  Rat priority;
  std::size_t seq = 0;
  std::unique_ptr<BernsteinPatch> patch;
};
struct QueueCmp {
  // std::push_heap keeps the largest priority first (ties: earliest seq)
  bool operator()(const QueueEntry& a, const QueueEntry& b) const {
    if (a.priority != b.priority) return a.priority < b.priority;
    return a.seq > b.seq;
  }
};

struct MaxState {
  Rat best{-1};
  RatPoint witness;

  void offer(const Rat& value, const RatPoint& point) {
    Rat a = value < 0 ? Rat(-value) : value;
    if (a > best) {
      best = a;
      witness = point;
    }
  }
};

void offer_corners(const BernsteinPatch& patch, MaxState& st) {
  unsigned d = static_cast<unsigned>(patch.degs.size());
  std::vector<unsigned> corner(d, 0);
  while (true) {
    st.offer(patch.corner_value(corner), patch.corner_point(corner));
    unsigned j = 0;
    while (j < d) {
      if (corner[j] == 0 && patch.degs[j] > 0) {
        corner[j] = patch.degs[j];
        break;
      }
      corner[j] = 0;
      ++j;
    }
    if (j == d) break;
  }
}

}  // namespace

NormEnclosure supnorm_box(const QPoly& p, const Box& box, const Rat& tol,
                          const SupnormOptions& opts) {
  if (p.dim() != box.dim())
    throw std::invalid_argument("supnorm_box: dimension mismatch");
  if (!(tol > 0)) throw std::invalid_argument("supnorm_box: tol must be positive");

  NormEnclosure out;
  out.method = "bernstein";

  if (p.is_zero()) {
    std::vector<Rat> corner;
    for (const auto& [a, b] : box.bounds) corner.push_back(a);
    out.witness = RatPoint::real(std::move(corner));
    return out;
  }

  MaxState st;
  std::vector<QueueEntry> heap;
  std::size_t seq = 0;
  {
    auto root = std::make_unique<BernsteinPatch>(bernstein_from_power(p, box));
    offer_corners(*root, st);
    Rat pr = root->absmax();
    heap.push_back({pr, seq++, std::move(root)});
  }

  long pops = 0;
  Rat upper = heap.front().priority;
  while (!heap.empty()) {
    upper = heap.front().priority;
    if (upper <= st.best + tol) break;
    if (++pops > opts.max_patches) {
      out.converged = false;
      break;
    }
    std::pop_heap(heap.begin(), heap.end(), QueueCmp{});
    std::unique_ptr<BernsteinPatch> owned = std::move(heap.back().patch);
    heap.pop_back();
    const BernsteinPatch& patch = *owned;

    // sharpen the lower bound at the abscissa of the largest coefficient
    {
      std::size_t arg = 0;
      Rat best_c(-1);
      for (std::size_t i = 0; i < patch.coeff.size(); ++i) {
        Rat a = patch.coeff[i] < 0 ? Rat(-patch.coeff[i]) : patch.coeff[i];
        if (a > best_c) {
          best_c = a;
          arg = i;
        }
      }
      std::vector<Rat> x(patch.degs.size());
      std::size_t rem = arg;
      for (std::size_t j = patch.degs.size(); j-- > 0;) {
        std::size_t extent = patch.degs[j] + 1;
        std::size_t ij = rem % extent;
        rem /= extent;
        const auto& [a, b] = patch.domain[j];
        x[j] = patch.degs[j] == 0
                   ? a
                   : a + (b - a) * Rat(static_cast<unsigned long>(ij),
                                       static_cast<unsigned long>(patch.degs[j]));
        x[j].canonicalize();
      }
      RatPoint pt = RatPoint::real(x);
      st.offer(p.eval_real(x), pt);
    }

    auto [l, r] = bernstein_split(patch, bernstein_widest_axis(patch));
    offer_corners(l, st);
    offer_corners(r, st);
    for (auto* child : {&l, &r}) {
      if (child->absmax() <= st.best) continue;  // cannot beat the attained value
      Rat pr = child->absmax();
      heap.push_back({pr, seq++, std::make_unique<BernsteinPatch>(std::move(*child))});
      std::push_heap(heap.begin(), heap.end(), QueueCmp{});
    }
    if (heap.empty()) upper = st.best;
  }
  if (!heap.empty()) upper = std::max(heap.front().priority, st.best);

  out.lower = st.best < 0 ? Rat(0) : st.best;
  out.witness_value = out.lower;
  out.upper = std::max(upper, out.lower);
  out.witness = st.witness;
  return out;
}

NormEnclosure supnorm_box(const IntPoly& p, const Box& box, const Rat& tol,
                          const SupnormOptions& opts) {
  return supnorm_box(to_qpoly(p), box, tol, opts);
}

NormEnclosure supnorm_polydisk(const IntPoly& p, const std::vector<Rat>& radii,
                               const Rat& tol, const SupnormOptions& opts) {
  if (p.dim() != radii.size())
    throw std::invalid_argument("supnorm_polydisk: dimension mismatch");
  if (!(tol > 0)) throw std::invalid_argument("supnorm_polydisk: tol must be positive");
  for (const Rat& r : radii)
    if (!(r > 0)) throw std::invalid_argument("supnorm_polydisk: radii must be positive");

  NormEnclosure out;
  out.method = "torus-grid";
  if (p.is_zero()) {
    out.witness = RatPoint(std::vector<QComplex>(radii.size()));
    return out;
  }

  auto monomial_weight = [&](const MultiIndex& k) {
    Rat w(1);
    for (std::size_t j = 0; j < radii.size(); ++j)
      if (k.k[j]) w *= pow_rat(radii[j], k.k[j]);
    return w;
  };

  // certified upper: coefficient sum; certified lower: leading-term bound
  Rat upper(0);
  for (const auto& [k, c] : p.terms()) upper += Rat(abs(c)) * monomial_weight(k);
  auto [lead_k, lead_c] = p.leading_term();
  Rat lead_lower = Rat(abs(lead_c)) * monomial_weight(lead_k);

  Polydisk disk{radii};
  Region region{disk};
  Rat best_abs2(-1);
  RatPoint best_point;
  unsigned density = opts.torus_grid_start;
  Rat grid_lower(0);
  while (true) {
    for (const RatPoint& z : sample_grid(region, density)) {
      Rat a2 = p.eval(z.coords).abs2();
      if (a2 > best_abs2) {
        best_abs2 = a2;
        best_point = z;
      }
    }
    grid_lower = sqrt_lower(best_abs2);
    if (upper - std::max(grid_lower, lead_lower) <= tol) break;
    if (density >= opts.torus_grid_max) {
      out.converged = false;
      break;
    }
    density *= 2;
  }

  out.lower = std::max(grid_lower, lead_lower);
  out.upper = std::max(upper, out.lower);
  out.witness = best_point;
  out.witness_value = grid_lower;
  return out;
}

namespace {

NormEnclosure supnorm_disk(const IntPoly& p, const DiskForm& disk, const Rat& tol,
                           const SupnormOptions& opts) {
  // recenter: coefficients of p(c + w) bound the norm on |w| <= rho
  QPoly shifted(1);
  shifted.add_term(MultiIndex({0}), disk.center.re);
  shifted.add_term(MultiIndex({1}), Rat(1));
  QPoly q = to_qpoly(p).compose({shifted});
  Rat upper(0), rho = disk.radius;
  for (const auto& [k, c] : q.terms()) {
    Rat a = c < 0 ? Rat(-c) : c;
    upper += a * pow_rat(rho, k.k[0]);
  }

  Rat best_abs2(-1);
  RatPoint best_point;
  unsigned density = opts.torus_grid_start;
  Rat lower(0);
  bool converged = true;
  while (true) {
    for (unsigned t = 0; t < density; ++t) {
      Rat cc, ss;
      unit_circle_point(t, density, cc, ss);
      RatPoint z({disk.center + QComplex(rho * cc, rho * ss)});
      Rat a2 = p.eval(z.coords).abs2();
      if (a2 > best_abs2) {
        best_abs2 = a2;
        best_point = z;
      }
    }
    lower = sqrt_lower(best_abs2);
    if (upper - lower <= tol) break;
    if (density >= opts.torus_grid_max) {
      converged = false;
      break;
    }
    density *= 2;
  }

  NormEnclosure out;
  out.method = "torus-grid";
  out.lower = lower;
  out.upper = std::max(upper, lower);
  out.witness = best_point;
  out.witness_value = lower;
  out.converged = converged;
  return out;
}

}  // namespace

NormEnclosure supnorm_region(const IntPoly& p, const Region& E, const Rat& tol,
                             const SupnormOptions& opts, const IntPoly* witness_g) {
  if (p.dim() != E.dim())
    throw std::invalid_argument("supnorm_region: dimension mismatch");

  if (p.degree() <= 0) {  // constants are exact on every region
    NormEnclosure out;
    out.method = "exact-point";
    Rat c = p.is_zero() ? Rat(0) : Rat(p.leading_term().second);
    if (c < 0) c = -c;
    out.lower = c;
    out.upper = c;
    std::vector<RatPoint> pts = sample_grid(E, 2);
    if (!pts.empty()) out.witness = pts.front();
    out.witness_value = c;
    return out;
  }

  if (const Box* b = E.get<Box>()) return supnorm_box(p, *b, tol, opts);
  if (const Polydisk* d = E.get<Polydisk>())
    return supnorm_polydisk(p, d->radii, tol, opts);
  if (const GraphSegment* g = E.get<GraphSegment>()) {
    IntPoly x = IntPoly::variable(1, 1);
    IntPoly ell = IntPoly::constant(1, g->line_c0) + x * g->line_c1;
    IntPoly restricted = p.compose({x, ell});
    NormEnclosure out =
        supnorm_box(restricted, Box{{g->base}}, tol, opts);
    out.method = "composition";
    // lift the witness back onto the graph
    if (out.witness.dim() == 1) {
      Rat xw = out.witness.coords[0].re;
      out.witness = RatPoint::real({xw, Rat(g->line_c0) + Rat(g->line_c1) * xw});
    }
    return out;
  }
  if (const PointSet* s = E.get<PointSet>()) {
    NormEnclosure out;
    out.method = "exact-point";
    Rat best_abs2(-1);
    for (const RatPoint& z : s->points) {
      Rat a2 = p.eval(z.coords).abs2();
      if (a2 > best_abs2) {
        best_abs2 = a2;
        out.witness = z;
      }
    }
    out.lower = sqrt_lower(best_abs2);
    out.upper = sqrt_upper(best_abs2);
    out.witness_value = out.lower;
    return out;
  }

  const Lemniscate* L = E.get<Lemniscate>();
  if (witness_g) {
    if (witness_g->dim() != L->map.dim())
      throw std::invalid_argument("supnorm_region: witness dimension mismatch");
    if (witness_g->compose(L->map.components) == p) {
      NormEnclosure out = supnorm_polydisk(*witness_g, L->radii, tol, opts);
      out.method = "composition";
      out.witness = RatPoint();  // the attaining point lives in q^{-1}(torus)
      out.witness_value = 0;
      return out;
    }
  }
  if (auto disk = univariate_disk_form(*L); disk && disk->center.is_real())
    return supnorm_disk(p, *disk, tol, opts);

  // no composition witness: certified grid lower bound; upper from the
  // coordinate hull, reported but flagged not certified
  NormEnclosure out;
  out.method = "torus-grid";
  out.upper_certified = false;
  Rat best_abs2(-1);
  for (const RatPoint& z : sample_grid(E, opts.lemniscate_grid)) {
    Rat a2 = p.eval(z.coords).abs2();
    if (a2 > best_abs2) {
      best_abs2 = a2;
      out.witness = z;
    }
  }
  if (best_abs2 >= 0) out.lower = sqrt_lower(best_abs2);
  out.witness_value = out.lower;
  Rat R = lemniscate_coordinate_bound(*L);
  Rat hull(0);
  for (const auto& [k, c] : p.terms())
    hull += Rat(abs(c)) * pow_rat(R, k.degree());
  out.upper = std::max(hull, out.lower);
  out.converged = false;
  return out;
}

}  // namespace icheb
