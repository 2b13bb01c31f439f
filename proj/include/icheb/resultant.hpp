#ifndef ICHEB_RESULTANT_HPP
#define ICHEB_RESULTANT_HPP

#include "icheb/poly.hpp"
#include "icheb/sturm.hpp"

namespace icheb {

/// Res(A, B) of univariate integer polynomials via the subresultant
/// polynomial-remainder sequence (coefficient growth stays minor-bounded).
Int resultant_int(const ZVec& A, const ZVec& B);

/// Independent oracle: Res(A, B) as the Bareiss determinant of the Sylvester
/// matrix. Used for cross-checks; O((deg A + deg B)^3).
Int sylvester_resultant_int(const ZVec& A, const ZVec& B);

/// Res_y(f(y), P(x, y)) for a bivariate integer polynomial P: the univariate
/// polynomial a_f^{deg_y P} * prod_{f(lambda)=0} P(x, lambda) in x, computed
/// by the subresultant PRS over Z[x].
IntPoly resultant_wrt_second(const ZVec& f, const IntPoly& P);

/// Same value from the Sylvester-Bareiss route (oracle).
IntPoly sylvester_resultant_wrt_second(const ZVec& f, const IntPoly& P);

}  // namespace icheb

#endif
