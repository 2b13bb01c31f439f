#ifndef ICHEB_INTSEARCH_HPP
#define ICHEB_INTSEARCH_HPP

#include <optional>
#include <string>
#include <vector>

#include "icheb/fekete.hpp"
#include "icheb/supnorm.hpp"

namespace icheb {

enum class Strategy { Exhaustive, Lattice, Minkowski, ClosedForm };
std::string strategy_name(Strategy s);

struct SearchResult {
  IntPoly poly;
  NormEnclosure norm;
  unsigned degree = 0;
  Strategy strategy = Strategy::Lattice;
  // exhaustive enumeration or a theorem-backed closed form; lattice and
  // minkowski results are upper bounds only
  bool certified_optimal = false;
  bool bound_realized = false;  // minkowski: ||P|| <= h_n |V|^(1/h_n) verified
  std::string note;
};

/// Exhaustive-search refusal when the guard thresholds are exceeded; the
/// caller is expected to fall back to the lattice strategy.
struct GuardExceeded : std::runtime_error {
  explicit GuardExceeded(const std::string& what) : std::runtime_error(what) {}
};

struct SearchOptions {
  unsigned samples = 0;  // 0 = auto
  Rat lll_delta{99, 100};
  long enum_budget = 1000000;
  std::size_t max_candidates = 400;
  SupnormOptions supnorm;
  std::vector<IntPoly> extra_candidates;  // injected (powers of winners, ...)
  unsigned probe_density = 24;            // cheap pre-ranking grid
};

/// Per-monomial integer bounds: |a_k| <= B * rho_k with rho_k the row 1-norm
/// of the exact inverse Vandermonde at unisolvent points of E (for torus
/// regions additionally intersected with the Cauchy bound B / r^k). Monomials
/// in graded-lex order.
std::vector<Int> coefficient_box(const Region& E, unsigned n, const Rat& B);

/// Certified-optimal search at tiny degree (guards: h_n <= 12, box volume
/// <= 10^7); throws GuardExceeded beyond them.
SearchResult exhaustive_search(const Region& E, unsigned n, const Rat& tol,
                               const SearchOptions& opts = {});

/// LLL + bounded enumeration on the sample-Gram lattice; result never worse
/// than the injected closed-form/power candidates.
SearchResult lattice_search(const Region& E, unsigned n, const Rat& tol,
                            const SearchOptions& opts = {});

/// Linear-forms construction at Fekete points; certifies a posteriori that
/// ||P||_E <= h_n |V|^(1/h_n) (1+tol) when realized.
SearchResult minkowski_construct(const FeketeSet& F, const Region& E, const Rat& tol,
                                 const SearchOptions& opts = {});

/// Closed-form extremal candidate with exact norm (polydisk monomials,
/// lemniscate q_m^k); nullopt when no closed form is known.
std::optional<SearchResult> closed_form_search(const Region& E, unsigned n,
                                               const Rat& tol,
                                               const SupnormOptions& sopts = {});

struct TzSequence {
  std::vector<SearchResult> per_degree;  // index 0 <-> n = 1
  std::vector<Rat> root_upper;           // certified r with r^n >= norm upper
  Rat running_upper{1};                  // min over n of root_upper
  unsigned running_upper_at = 0;
};

/// Per-degree best upper bounds with the running t_Z upper estimate.
/// strategy: "auto" | "exhaustive" | "lattice" | "closed-form".
TzSequence tz_sequence(const Region& E, unsigned n_max, const std::string& strategy,
                       const Rat& tol, const SearchOptions& opts = {});

}  // namespace icheb

#endif
