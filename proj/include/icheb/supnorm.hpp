#ifndef ICHEB_SUPNORM_HPP
#define ICHEB_SUPNORM_HPP

#include "icheb/region.hpp"

namespace icheb {

/// Certified two-sided enclosure of ||p||_E. `witness` attains at least
/// `witness_value` exactly; `lower` may additionally rest on coefficient
/// bounds (polydisk leading-term bound), in which case lower >= witness_value.
/// `converged` is false when the subdivision/grid budget ran out; the bounds
/// stay valid and report the achieved width. `upper_certified` is false only
/// for lemniscate norms without a composition witness.
struct NormEnclosure {
  Rat lower{0}, upper{0};
  RatPoint witness;
  Rat witness_value{0};
  std::string method;  // bernstein | torus-grid | composition | exact-point
  bool upper_certified = true;
  bool converged = true;
  Rat width() const { return upper - lower; }
};

struct SupnormOptions {
  long max_patches = 100000;        // Bernstein subdivision budget
  unsigned torus_grid_start = 8;    // polydisk grid refinement schedule
  unsigned torus_grid_max = 128;
  unsigned lemniscate_grid = 16;    // fallback grid density
};

NormEnclosure supnorm_box(const QPoly& p, const Box& box, const Rat& tol,
                          const SupnormOptions& opts = {});
NormEnclosure supnorm_box(const IntPoly& p, const Box& box, const Rat& tol,
                          const SupnormOptions& opts = {});

NormEnclosure supnorm_polydisk(const IntPoly& p, const std::vector<Rat>& radii,
                               const Rat& tol, const SupnormOptions& opts = {});

/// Dispatch over region variants. For lemniscates, `witness_g` (when given and
/// p == g o q exactly) certifies the norm through the polydisk of the radii.
NormEnclosure supnorm_region(const IntPoly& p, const Region& E, const Rat& tol,
                             const SupnormOptions& opts = {},
                             const IntPoly* witness_g = nullptr);

}  // namespace icheb

#endif
