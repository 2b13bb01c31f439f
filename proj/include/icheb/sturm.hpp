#ifndef ICHEB_STURM_HPP
#define ICHEB_STURM_HPP

#include <vector>

#include "icheb/numeric.hpp"

namespace icheb {

/// Dense univariate integer polynomial, low-to-high coefficients.
using ZVec = std::vector<Int>;

long zdeg(const ZVec& p);           // -1 for zero
ZVec ztrim(ZVec p);                 // drop high zero coefficients
ZVec zderivative(const ZVec& p);
Int zcontent(const ZVec& p);        // nonnegative gcd of coefficients, 0 for zero
ZVec zprimitive(const ZVec& p);     // p / content, sign preserved
Rat zeval(const ZVec& p, const Rat& x);
int zsign_at(const ZVec& p, const Rat& x);
bool zis_squarefree(const ZVec& p);

/// Cauchy bound: every real root lies in [-M, M].
Rat cauchy_root_bound(const ZVec& p);

struct SturmChain {
  std::vector<ZVec> seq;
};
/// Sturm sequence of a squarefree polynomial (content-reduced remainders).
SturmChain sturm_chain(const ZVec& p);

int sign_variations_at(const SturmChain& chain, const Rat& x);
/// Number of distinct real roots in (a, b]; requires p(a) != 0.
int count_roots(const SturmChain& chain, const Rat& a, const Rat& b);
long real_root_count(const ZVec& p);

struct RootInterval {
  Rat lo, hi;
  bool exact = false;  // lo == hi is a rational root
};

/// Isolating intervals for all real roots of a squarefree polynomial, sorted.
/// Rational roots are returned exact.
std::vector<RootInterval> isolate_real_roots(const ZVec& p);

/// Shrinks a (non-exact) isolating interval below the requested width by
/// sign-change bisection.
void refine_root(const ZVec& p, RootInterval& iv, const Rat& width);

}  // namespace icheb

#endif
