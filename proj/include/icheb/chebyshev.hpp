#ifndef ICHEB_CHEBYSHEV_HPP
#define ICHEB_CHEBYSHEV_HPP

#include "icheb/poly.hpp"

namespace icheb {

struct ChebyshevData {
  QPoly poly;  // monic scaled Chebyshev polynomial t_n on [a,b]
  Rat norm;    // 2*((b-a)/4)^n, exact
};

/// Monic polynomial of degree n with the smallest sup norm on [a,b], via the
/// three-term recurrence followed by the affine change of variable.
/// Throws std::invalid_argument for n < 1 or a >= b.
ChebyshevData chebyshev_classical(unsigned n, const Rat& a, const Rat& b);

}  // namespace icheb

#endif
