#ifndef ICHEB_LATTICE_HPP
#define ICHEB_LATTICE_HPP

#include <vector>

#include "icheb/numeric.hpp"

namespace icheb {

/// Rows of `transform` express the reduced basis in the original coordinates:
/// b_i = sum_j transform[i][j] e_j.
struct GramLLL {
  std::vector<std::vector<Int>> transform;
};

/// Integral LLL reduction of a positive-definite integer Gram matrix
/// (all-integer lambda/d bookkeeping; no floating point involved).
/// delta in (1/4, 1).
GramLLL lll_reduce_gram(const std::vector<std::vector<Int>>& gram, const Rat& delta);

struct ShortVectors {
  // (Q(v), v) pairs sorted by value then lexicographic v; v in original
  // coordinates, sign-canonicalized (first nonzero entry positive).
  std::vector<std::pair<Rat, std::vector<Int>>> vectors;
  bool budget_exhausted = false;
};

/// Fincke-Pohst enumeration of nonzero vectors with Q(v) <= bound, walking the
/// reduced basis; keeps at most max_keep smallest.
ShortVectors enumerate_short_vectors(const std::vector<std::vector<Int>>& gram,
                                     const GramLLL& reduction, const Rat& bound,
                                     long node_budget, std::size_t max_keep);

/// Q(v) = v^T G v.
Rat gram_value(const std::vector<std::vector<Int>>& gram, const std::vector<Int>& v);

}  // namespace icheb

#endif
