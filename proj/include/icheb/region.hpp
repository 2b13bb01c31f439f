#ifndef ICHEB_REGION_HPP
#define ICHEB_REGION_HPP

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "icheb/poly.hpp"

namespace icheb {

/// Exact evaluation point; real points have zero imaginary parts throughout.
struct RatPoint {
  std::vector<QComplex> coords;

  RatPoint() = default;
  explicit RatPoint(std::vector<QComplex> c) : coords(std::move(c)) {}
  static RatPoint real(std::vector<Rat> xs) {
    RatPoint p;
    for (Rat& x : xs) p.coords.emplace_back(std::move(x));
    return p;
  }
  unsigned dim() const { return static_cast<unsigned>(coords.size()); }
  bool is_real() const {
    for (const auto& c : coords)
      if (!c.is_real()) return false;
    return true;
  }
  std::vector<Rat> real_coords() const {
    std::vector<Rat> out;
    for (const auto& c : coords) out.push_back(c.re);
    return out;
  }
  bool operator==(const RatPoint& o) const { return coords == o.coords; }
};

/// Polynomial mapping q = (q_1,...,q_d) of common degree l. Simple mappings
/// have homogeneous top parts q̂_j = z_j^l; the univariate branch relaxes this
/// to a nonzero integer leading coefficient (used for circles/disks only).
struct PolyMap {
  std::vector<IntPoly> components;
  unsigned degree_l = 0;
  bool monic_relaxed = false;  // set for the admitted univariate branch

  unsigned dim() const { return static_cast<unsigned>(components.size()); }
};

struct SimpleMapCheck {
  bool ok = false;
  unsigned degree_l = 0;
  bool monic_relaxed = false;
  std::string failure;  // offending component description when !ok
};

/// True iff all components share total degree l with q̂_j = z_j^l. With
/// allow_univariate_relaxed, a single univariate nonconstant component with a
/// nonzero leading coefficient is admitted (flagged monic_relaxed).
SimpleMapCheck is_simple_map(const std::vector<IntPoly>& q,
                             bool allow_univariate_relaxed = true);

struct Box {
  std::vector<std::pair<Rat, Rat>> bounds;  // [a_j, b_j], a_j <= b_j
  unsigned dim() const { return static_cast<unsigned>(bounds.size()); }
};
struct Polydisk {
  std::vector<Rat> radii;  // r_j > 0
  unsigned dim() const { return static_cast<unsigned>(radii.size()); }
};
struct Lemniscate {
  PolyMap map;
  std::vector<Rat> radii;
  unsigned dim() const { return map.dim(); }
};
struct GraphSegment {
  std::pair<Rat, Rat> base;  // [a, b]
  Int line_c0, line_c1;      // ell(x) = c0 + c1*x, integer coefficients
};
struct PointSet {
  std::vector<RatPoint> points;
};

class Region {
 public:
  using Variant = std::variant<Box, Polydisk, Lemniscate, GraphSegment, PointSet>;

  Region(Box b);
  Region(Polydisk p);
  Region(Lemniscate l);
  Region(GraphSegment g);
  Region(PointSet s);

  unsigned dim() const;
  const Variant& value() const { return v_; }
  template <class T>
  const T* get() const {
    return std::get_if<T>(&v_);
  }
  std::string kind() const;

 private:
  Variant v_;
};

struct Projection {
  Region region;          // univariate region containing the projection
  bool exact = true;      // false => certified superset only (upper-bound use)
};

/// Projection onto coordinate j (1-based). Lemniscate projections are
/// certified bounding hulls flagged as supersets.
Projection project(const Region& E, unsigned j);

/// Deterministic point cloud inside E; all points are exact members.
/// Box: tensor Chebyshev-Lobatto nodes. Polydisk: exact rational points on the
/// distinguished boundary torus. Univariate linear lemniscate: exact points on
/// the boundary circle. Other lemniscates: membership-filtered real box grid.
std::vector<RatPoint> sample_grid(const Region& E, unsigned density,
                                  unsigned seed = 0);

/// Exact membership test (boundary-inclusive).
bool region_contains(const Region& E, const RatPoint& z);

/// Bound R with |z_j| <= R for every z in the lemniscate (simple maps).
Rat lemniscate_coordinate_bound(const Lemniscate& L);

/// Center/radius of the disk {|c1 z - c0| <= r}, for univariate linear maps.
struct DiskForm {
  QComplex center;
  Rat radius;
};
std::optional<DiskForm> univariate_disk_form(const Lemniscate& L);

/// >= count distinct points exactly on the circle, with small-denominator
/// coordinates (Pythagorean parametrization plus antipodes). Suited to exact
/// Gram-matrix work where 40-digit node coordinates would be wasteful.
std::vector<QComplex> rational_circle_points(const QComplex& center,
                                             const Rat& radius, unsigned count);

}  // namespace icheb

#endif
