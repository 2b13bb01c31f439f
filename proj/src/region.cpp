#include "icheb/region.hpp"

#include <algorithm>

namespace icheb {

namespace {

void validate_box(const Box& b) {
  if (b.bounds.empty()) throw std::invalid_argument("box needs at least one interval");
  for (const auto& [a, bb] : b.bounds)
    if (!(a <= bb)) throw std::invalid_argument("box interval has a > b");
}

void validate_polydisk(const Polydisk& p) {
  if (p.radii.empty()) throw std::invalid_argument("polydisk needs radii");
  for (const Rat& r : p.radii)
    if (!(r > 0)) throw std::invalid_argument("polydisk radius must be positive");
}

void validate_lemniscate(Lemniscate& l) {
  if (l.radii.size() != l.map.dim())
    throw std::invalid_argument("lemniscate radii/map dimension mismatch");
  for (const Rat& r : l.radii)
    if (!(r > 0)) throw std::invalid_argument("lemniscate radius must be positive");
  SimpleMapCheck chk = is_simple_map(l.map.components);
  if (!chk.ok)
    throw std::invalid_argument("lemniscate map is not simple: " + chk.failure);
  l.map.degree_l = chk.degree_l;
  l.map.monic_relaxed = chk.monic_relaxed;
}

void validate_graph(const GraphSegment& g) {
  if (!(g.base.first <= g.base.second))
    throw std::invalid_argument("graph segment base interval has a > b");
}

}  // namespace

Region::Region(Box b) : v_(std::move(b)) { validate_box(*get<Box>()); }
Region::Region(Polydisk p) : v_(std::move(p)) { validate_polydisk(*get<Polydisk>()); }
Region::Region(Lemniscate l) : v_(std::move(l)) {
  validate_lemniscate(std::get<Lemniscate>(v_));
}
Region::Region(GraphSegment g) : v_(std::move(g)) { validate_graph(*get<GraphSegment>()); }
Region::Region(PointSet s) : v_(std::move(s)) {
  const auto& ps = *get<PointSet>();
  if (ps.points.empty()) throw std::invalid_argument("empty point set");
  unsigned d = ps.points[0].dim();
  for (const auto& p : ps.points)
    if (p.dim() != d) throw std::invalid_argument("point set dimension mismatch");
}

unsigned Region::dim() const {
  return std::visit(
      [](const auto& r) -> unsigned {
        using T = std::decay_t<decltype(r)>;
        if constexpr (std::is_same_v<T, Box>) return r.dim();
        if constexpr (std::is_same_v<T, Polydisk>) return r.dim();
        if constexpr (std::is_same_v<T, Lemniscate>) return r.dim();
        if constexpr (std::is_same_v<T, GraphSegment>) return 2;
        if constexpr (std::is_same_v<T, PointSet>) return r.points[0].dim();
      },
      v_);
}

std::string Region::kind() const {
  return std::visit(
      [](const auto& r) -> std::string {
        using T = std::decay_t<decltype(r)>;
        if constexpr (std::is_same_v<T, Box>) return "box";
        if constexpr (std::is_same_v<T, Polydisk>) return "polydisk";
        if constexpr (std::is_same_v<T, Lemniscate>) return "lemniscate";
        if constexpr (std::is_same_v<T, GraphSegment>) return "graph";
        if constexpr (std::is_same_v<T, PointSet>) return "points";
      },
      v_);
}

SimpleMapCheck is_simple_map(const std::vector<IntPoly>& q,
                             bool allow_univariate_relaxed) {
  SimpleMapCheck out;
  if (q.empty()) throw std::invalid_argument("is_simple_map: empty map");
  unsigned d = q[0].dim();
  if (q.size() != d) {
    out.failure = "map arity differs from ambient dimension";
    return out;
  }
  long l = -1;
  for (std::size_t j = 0; j < q.size(); ++j) {
    if (q[j].dim() != d) {
      out.failure = "component " + std::to_string(j + 1) + " has wrong dimension";
      return out;
    }
    long dj = q[j].degree();
    if (dj < 1) {
      out.failure = "component " + std::to_string(j + 1) + " is constant";
      return out;
    }
    if (l < 0) l = dj;
    if (dj != l) {
      out.failure = "component " + std::to_string(j + 1) + " has degree " +
                    std::to_string(dj) + " != " + std::to_string(l);
      return out;
    }
  }
  for (std::size_t j = 0; j < q.size(); ++j) {
    IntPoly top = q[j].homogeneous_part(static_cast<unsigned>(l));
    std::vector<unsigned> k(d, 0);
    k[j] = static_cast<unsigned>(l);
    IntPoly pure = IntPoly::monomial(d, MultiIndex(k), 1);
    if (top == pure) continue;
    if (d == 1 && allow_univariate_relaxed && top.term_count() == 1 &&
        top.leading_term().first.k[0] == static_cast<unsigned>(l)) {
      out.monic_relaxed = true;
      continue;
    }
    out.failure = "homogeneous top part of component " + std::to_string(j + 1) +
                  " is not z_" + std::to_string(j + 1) + "^" + std::to_string(l);
    return out;
  }
  out.ok = true;
  out.degree_l = static_cast<unsigned>(l);
  return out;
}

Rat lemniscate_coordinate_bound(const Lemniscate& L) {
  // For a simple map, z_j^l = q_j(z) - t_j(z) with deg t_j <= l-1, so the
  // largest coordinate M satisfies M^l <= r_j + S_j max(1,M)^{l-1}, giving
  // M <= max(1, r_max + S_max).
  Rat bound(1);
  for (std::size_t j = 0; j < L.map.components.size(); ++j) {
    Rat s(0);
    for (const auto& [k, c] : L.map.components[j].terms()) {
      if (k.degree() == L.map.degree_l && k.k[j] == L.map.degree_l) continue;
      s += Rat(abs(c));
    }
    Rat candidate = L.radii[j] + s;
    if (candidate > bound) bound = candidate;
  }
  return bound;
}

std::optional<DiskForm> univariate_disk_form(const Lemniscate& L) {
  if (L.map.dim() != 1 || L.map.degree_l != 1) return std::nullopt;
  auto coeffs = L.map.components[0].univariate_coeffs();
  Rat c1(coeffs.size() > 1 ? coeffs[1] : Int(0));
  Rat c0(coeffs.size() > 0 ? coeffs[0] : Int(0));
  if (c1 == 0) return std::nullopt;
  DiskForm d;
  d.center = QComplex(-c0 / c1);
  Rat abs_c1 = c1 < 0 ? Rat(-c1) : c1;
  d.radius = L.radii[0] / abs_c1;
  return d;
}

Projection project(const Region& E, unsigned j) {
  if (j < 1 || j > E.dim()) throw std::invalid_argument("projection index out of range");
  unsigned i = j - 1;
  if (const Box* b = E.get<Box>())
    return {Region(Box{{b->bounds[i]}}), true};
  if (const Polydisk* p = E.get<Polydisk>())
    return {Region(Polydisk{{p->radii[i]}}), true};
  if (const PointSet* s = E.get<PointSet>()) {
    PointSet out;
    for (const auto& pt : s->points) out.points.push_back(RatPoint({pt.coords[i]}));
    return {Region(std::move(out)), true};
  }
  if (const GraphSegment* g = E.get<GraphSegment>()) {
    if (j == 1) return {Region(Box{{g->base}}), true};
    Rat ya = Rat(g->line_c0) + Rat(g->line_c1) * g->base.first;
    Rat yb = Rat(g->line_c0) + Rat(g->line_c1) * g->base.second;
    if (ya > yb) std::swap(ya, yb);
    return {Region(Box{{{ya, yb}}}), true};
  }
  const Lemniscate* L = E.get<Lemniscate>();
  if (auto disk = univariate_disk_form(*L); disk && disk->center.is_real()) {
    // exact disk: represent as the (relaxed) univariate lemniscate itself
    return {Region(*L), true};
  }
  Rat R = lemniscate_coordinate_bound(*L);
  return {Region(Polydisk{{R}}), false};
}

namespace {

// Chebyshev-Lobatto nodes of [a,b]: endpoints exact, interior snapped.
std::vector<Rat> lobatto_nodes(const Rat& a, const Rat& b, unsigned density) {
  std::vector<Rat> out;
  if (a == b || density == 1) return {a};
  Rat mid = (a + b) / 2, half = (b - a) / 2;
  for (unsigned i = 0; i < density; ++i) {
    if (i == 0) {
      out.push_back(a);
    } else if (i + 1 == density) {
      out.push_back(b);
    } else {
      Rat frac(static_cast<unsigned long>(i), static_cast<unsigned long>(density - 1));
      frac.canonicalize();
      out.push_back(mid - half * cos_pi_rational(frac));
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

void tensor_points(const std::vector<std::vector<QComplex>>& axes,
                   std::vector<RatPoint>& out) {
  std::vector<std::size_t> idx(axes.size(), 0);
  while (true) {
    RatPoint p;
    for (std::size_t j = 0; j < axes.size(); ++j) p.coords.push_back(axes[j][idx[j]]);
    out.push_back(std::move(p));
    std::size_t j = 0;
    while (j < axes.size()) {
      if (++idx[j] < axes[j].size()) break;
      idx[j] = 0;
      ++j;
    }
    if (j == axes.size()) break;
  }
}

std::vector<QComplex> circle_points(const QComplex& center, const Rat& radius,
                                    unsigned density) {
  std::vector<QComplex> out;
  for (unsigned t = 0; t < density; ++t) {
    Rat c, s;
    unit_circle_point(t, density, c, s);
    out.push_back(center + QComplex(radius * c, radius * s));
  }
  return out;
}

}  // namespace

std::vector<QComplex> rational_circle_points(const QComplex& center,
                                             const Rat& radius, unsigned count) {
  // t in [-1, 1] -> ((1-t^2)/(1+t^2), 2t/(1+t^2)) covers the right half;
  // antipodes cover the left. Exactly on the circle for every rational t.
  unsigned m = std::max(2u, (count + 3) / 4);
  std::vector<QComplex> out;
  for (unsigned k = 0; k <= 2 * m; ++k) {
    Rat t(2 * static_cast<long>(k) - 2 * static_cast<long>(m),
          2 * static_cast<long>(m));
    t.canonicalize();
    Rat t2 = t * t, den = t2 + 1;
    QComplex u((Rat(1) - t2) / den, (t + t) / den);
    out.push_back(center + QComplex(radius * u.re, radius * u.im));
    out.push_back(center + QComplex(-radius * u.re, -radius * u.im));
  }
  std::sort(out.begin(), out.end(), [](const QComplex& a, const QComplex& b) {
    if (a.re != b.re) return a.re < b.re;
    return a.im < b.im;
  });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<RatPoint> sample_grid(const Region& E, unsigned density, unsigned seed) {
  (void)seed;  // grids are deterministic; seed reserved for future perturbation
  if (density < 2) throw std::invalid_argument("sample_grid: density must be >= 2");

  if (const Box* b = E.get<Box>()) {
    std::vector<std::vector<QComplex>> axes;
    for (const auto& [a, bb] : b->bounds) {
      std::vector<QComplex> axis;
      for (const Rat& x : lobatto_nodes(a, bb, density)) axis.emplace_back(x);
      axes.push_back(std::move(axis));
    }
    std::vector<RatPoint> out;
    tensor_points(axes, out);
    return out;
  }
  if (const Polydisk* p = E.get<Polydisk>()) {
    std::vector<std::vector<QComplex>> axes;
    for (const Rat& r : p->radii) axes.push_back(circle_points(QComplex(), r, density));
    std::vector<RatPoint> out;
    tensor_points(axes, out);
    return out;
  }
  if (const GraphSegment* g = E.get<GraphSegment>()) {
    std::vector<RatPoint> out;
    for (const Rat& x : lobatto_nodes(g->base.first, g->base.second, density)) {
      Rat y = Rat(g->line_c0) + Rat(g->line_c1) * x;
      out.push_back(RatPoint::real({x, y}));
    }
    return out;
  }
  if (const PointSet* s = E.get<PointSet>()) return s->points;

  const Lemniscate* L = E.get<Lemniscate>();
  if (auto disk = univariate_disk_form(*L)) {
    std::vector<RatPoint> out;
    for (const QComplex& z : circle_points(disk->center, disk->radius, density))
      out.push_back(RatPoint({z}));
    return out;
  }
  // membership-filtered real box grid over [-R,R]^d
  Rat R = lemniscate_coordinate_bound(*L);
  unsigned d = L->dim();
  std::vector<std::vector<QComplex>> axes;
  for (unsigned j = 0; j < d; ++j) {
    std::vector<QComplex> axis;
    for (unsigned i = 0; i < density; ++i) {
      Rat t(2 * static_cast<long>(i) - static_cast<long>(density - 1),
            static_cast<long>(density - 1));
      t.canonicalize();
      axis.emplace_back(R * t);
    }
    axes.push_back(std::move(axis));
  }
  std::vector<RatPoint> grid;
  tensor_points(axes, grid);
  std::vector<RatPoint> out;
  for (const auto& z : grid)
    if (region_contains(E, z)) out.push_back(z);
  return out;
}

bool region_contains(const Region& E, const RatPoint& z) {
  if (z.dim() != E.dim()) return false;
  if (const Box* b = E.get<Box>()) {
    if (!z.is_real()) return false;
    for (unsigned j = 0; j < b->dim(); ++j)
      if (z.coords[j].re < b->bounds[j].first || z.coords[j].re > b->bounds[j].second)
        return false;
    return true;
  }
  if (const Polydisk* p = E.get<Polydisk>()) {
    for (unsigned j = 0; j < p->dim(); ++j)
      if (z.coords[j].abs2() > p->radii[j] * p->radii[j]) return false;
    return true;
  }
  if (const GraphSegment* g = E.get<GraphSegment>()) {
    if (!z.is_real()) return false;
    const Rat& x = z.coords[0].re;
    if (x < g->base.first || x > g->base.second) return false;
    return z.coords[1].re == Rat(g->line_c0) + Rat(g->line_c1) * x;
  }
  if (const PointSet* s = E.get<PointSet>()) {
    for (const auto& p : s->points)
      if (p == z) return true;
    return false;
  }
  const Lemniscate* L = E.get<Lemniscate>();
  for (unsigned j = 0; j < L->dim(); ++j) {
    QComplex v = L->map.components[j].eval(z.coords);
    if (v.abs2() > L->radii[j] * L->radii[j]) return false;
  }
  return true;
}

}  // namespace icheb
