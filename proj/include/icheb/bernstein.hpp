#ifndef ICHEB_BERNSTEIN_HPP
#define ICHEB_BERNSTEIN_HPP

#include "icheb/poly.hpp"
#include "icheb/region.hpp"

namespace icheb {

/// Tensor-product Bernstein form of a polynomial restricted to a subbox.
/// Coefficients are exact rationals; the convex-hull property makes
/// [min coeff, max coeff] a certified range enclosure on the subbox.
struct BernsteinPatch {
  std::vector<unsigned> degs;               // per-axis Bernstein degree
  std::vector<std::pair<Rat, Rat>> domain;  // subbox in original coordinates
  std::vector<Rat> coeff;                   // row-major tensor, axis 0 slowest
  Rat lo, hi;                               // cached min/max coefficient

  std::size_t size() const { return coeff.size(); }
  Rat absmax() const {
    Rat a = lo < 0 ? Rat(-lo) : lo;
    Rat b = hi < 0 ? Rat(-hi) : hi;
    return a > b ? a : b;
  }
  /// Exact value of the polynomial at a domain corner (each entry 0 or deg).
  Rat corner_value(const std::vector<unsigned>& corner) const;
  RatPoint corner_point(const std::vector<unsigned>& corner) const;
};

/// Bernstein form of p on the box (exact affine transport to [0,1]^d followed
/// by the basis conversion).
BernsteinPatch bernstein_from_power(const QPoly& p, const Box& box);

/// de Casteljau bisection along one axis; children partition the domain.
std::pair<BernsteinPatch, BernsteinPatch> bernstein_split(const BernsteinPatch& p,
                                                          unsigned axis);

/// Axis with the largest coefficient variation (split heuristic).
unsigned bernstein_widest_axis(const BernsteinPatch& p);

}  // namespace icheb

#endif
