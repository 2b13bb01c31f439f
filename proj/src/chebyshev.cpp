#include "icheb/chebyshev.hpp"

namespace icheb {

ChebyshevData chebyshev_classical(unsigned n, const Rat& a, const Rat& b) {
  if (n < 1) throw std::invalid_argument("chebyshev_classical: n must be >= 1");
  if (!(a < b)) throw std::invalid_argument("chebyshev_classical: degenerate interval");

  // cos-Chebyshev recurrence over the integers: P_0 = 1, P_1 = x,
  // P_{k+1} = 2x P_k - P_{k-1}; the monic polynomial on [-1,1] is 2^{1-n} P_n.
  IntPoly x = IntPoly::variable(1, 1);
  IntPoly two_x = x * Int(2);
  IntPoly prev = IntPoly::constant(1, 1), cur = x;
  for (unsigned k = 1; k < n; ++k) {
    IntPoly next = two_x * cur - prev;
    prev = cur;
    cur = next;
  }

  // substitute x -> (2t - a - b)/(b - a) and scale by ((b-a)/2)^n
  Rat w = b - a;
  QPoly affine(1);
  affine.add_term(MultiIndex({0}), (-a - b) / w);
  affine.add_term(MultiIndex({1}), Rat(2) / w);
  QPoly composed = to_qpoly(cur).compose({affine});

  Rat scale = pow_rat(w / 2, static_cast<long>(n)) * pow_rat(Rat(2), 1 - static_cast<long>(n));
  ChebyshevData out;
  out.poly = composed * scale;
  out.norm = Rat(2) * pow_rat(w / 4, static_cast<long>(n));
  return out;
}

}  // namespace icheb
