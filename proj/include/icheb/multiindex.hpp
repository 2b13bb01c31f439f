#ifndef ICHEB_MULTIINDEX_HPP
#define ICHEB_MULTIINDEX_HPP

#include <compare>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "icheb/numeric.hpp"

namespace icheb {

/// Exponent vector (k_1,...,k_d). Total order: smaller total degree first;
/// on equal degree k1 precedes k2 iff the first nonzero entry of k1-k2 is
/// negative.
struct MultiIndex {
  std::vector<unsigned> k;

  MultiIndex() = default;
  explicit MultiIndex(std::vector<unsigned> entries) : k(std::move(entries)) {}

  std::size_t dim() const { return k.size(); }
  unsigned degree() const {
    unsigned s = 0;
    for (unsigned e : k) s += e;
    return s;
  }
  bool operator==(const MultiIndex& o) const { return k == o.k; }

  /// Componentwise k <= o.k (divisibility of monomials).
  bool divides(const MultiIndex& o) const {
    if (dim() != o.dim()) return false;
    for (std::size_t i = 0; i < k.size(); ++i)
      if (k[i] > o.k[i]) return false;
    return true;
  }
  MultiIndex operator+(const MultiIndex& o) const {
    MultiIndex r = *this;
    for (std::size_t i = 0; i < k.size(); ++i) r.k[i] += o.k[i];
    return r;
  }
  MultiIndex operator-(const MultiIndex& o) const {
    MultiIndex r = *this;
    for (std::size_t i = 0; i < k.size(); ++i) r.k[i] -= o.k[i];
    return r;
  }
};

enum class Ordering { Less, Equal, Greater };

/// Throws std::invalid_argument on dimension mismatch.
Ordering order_compare(const MultiIndex& a, const MultiIndex& b);

struct GradedLexLess {
  bool operator()(const MultiIndex& a, const MultiIndex& b) const {
    return order_compare(a, b) == Ordering::Less;
  }
};

/// All k with |k| <= n in increasing graded-lex order; length C(d+n, n).
std::vector<MultiIndex> monomials_upto(unsigned d, unsigned n);

/// h_n = C(d+n, n), the dimension of the degree-<=n space, and
/// l_n = d*C(d+n, d+1), the total degree of the Vandermonde determinant.
struct DegreeDims {
  unsigned d, n;
  Int h, l;
  static DegreeDims make(unsigned d, unsigned n);
};

}  // namespace icheb

#endif
