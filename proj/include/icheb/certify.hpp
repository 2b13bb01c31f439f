#ifndef ICHEB_CERTIFY_HPP
#define ICHEB_CERTIFY_HPP

#include <optional>
#include <string>
#include <vector>

#include "icheb/intsearch.hpp"
#include "icheb/sturm.hpp"

namespace icheb {

/// One complete set of conjugate algebraic numbers: all roots of a primitive
/// integer polynomial declared irreducible over Q. Primitivity and real-root
/// isolation are machine-checked; irreducibility stays a declared attribute.
struct ConjugateSet {
  ZVec min_poly;  // low-to-high, primitive
  Int leading;
  unsigned degree_m = 0;
  bool declared_irreducible = true;
  std::vector<RootInterval> real_roots;
  bool all_roots_real = false;

  enum class Membership { Verified, Declared, Unknown };
  Membership membership = Membership::Unknown;
};

ConjugateSet make_conjugate_set(const ZVec& coeffs, bool declared_irreducible);

/// Per coordinate, one or more conjugate sets; the lattice is the product of
/// the per-coordinate unions.
struct AlgebraicLattice {
  std::vector<std::vector<ConjugateSet>> coords;
  unsigned dim() const { return static_cast<unsigned>(coords.size()); }
};

/// Machine-checks that every root of every set lies in the projection of E on
/// its coordinate (intervals with all-real-rooted polynomials; disks via
/// radius bounds for real roots). Sets the membership flags and returns
/// whether all coordinates were verified.
bool verify_membership(AlgebraicLattice& L, const Region& E);

struct Hypothesis {
  std::string name;
  bool machine_verified = false;
};

struct Certificate {
  std::string kind;  // n-integer | closed-form | projection | hilbert-fekete
  std::optional<Int> integer_value;  // N for n-integer certificates
  std::optional<Rat> lower_bound;    // certified lower bound on ||C_n||_E
  std::optional<Rat> upper_bound;    // certified upper bound on t_Z
  std::string display;               // human-readable value/provenance
  unsigned degree_n = 0;
  std::vector<Hypothesis> hypotheses;
  bool applicable = true;
  std::string inapplicable_reason;
};

/// Exact integer N = prod_j a_j^(n prod_{k != j} m_k) * prod_{lambda} P(lambda)
/// over the product of one conjugate set per coordinate (multi-set coordinates
/// multiply the per-combination values). n defaults to deg P. d <= 2.
Int n_certificate(const IntPoly& P, const AlgebraicLattice& L, long n_override = -1);

/// Leading-coefficient certificate ||C_n||_E >= prod_j |a_j|^(-n/m_j), valid
/// once the cardinality precondition guaranteeing N != 0 holds (d=1: m > n;
/// d=2: m1 > m2*n and m2 > n). Returns an inapplicable certificate naming the
/// violated inequality otherwise.
Certificate finite_lower_bound(const AlgebraicLattice& L, unsigned n);

struct AsymptoticBound {
  mpf_class estimate;        // prod_j max over family of |a_j|^(-1/m_j)
  Rat certified_lower;       // rounded-down rational
  std::string note;          // surrogate disclaimer
};
/// Finite surrogate of the limsup bound: requires >= 2 family members per
/// coordinate; flagged as depending on the supplied families.
AsymptoticBound asymptotic_lower_bound(
    const std::vector<std::vector<ConjugateSet>>& families);

struct PointVerdict {
  std::vector<std::size_t> set_index;      // per-coordinate conjugate set
  std::vector<RootInterval> coordinates;   // per-coordinate root location
  enum class Status { Vanishes, NonZero, Undetermined } status;
  bool exact = false;  // settled by exact substitution/divisibility
};

struct VanishingReport {
  std::vector<PointVerdict> points;  // real lattice points
  bool vanishes_everywhere = false;  // over all enumerated points
  Int certificate_product{0};        // the product of per-combination N values
  std::string note;
};

/// Per-point vanishing verdicts over the real lattice points (d <= 2);
/// rational points exactly, algebraic points by divisibility shortcuts and
/// refined interval evaluation.
VanishingReport vanishing_check(const IntPoly& P, const AlgebraicLattice& L,
                                unsigned refine_budget = 120);

/// t_Z(E) <= tC^(d/(d+1)); certified rational upper bound when tC is exact.
Certificate hilbert_fekete_bound(const Rat& tC, unsigned d);
/// Estimate-grade variant for floating tC estimates (no certified field).
mpf_class hilbert_fekete_estimate(const mpf_class& tC, unsigned d);

struct ProjectionBound {
  Rat upper{1};
  bool exact_one = false;  // C_n = 1 detected (every projection large)
  std::string provenance;
};
/// min over coordinates of the supplied univariate upper bounds; detects the
/// C_n = 1 case from certified-large projections (interval length >= 4 or
/// disk radius >= 1).
ProjectionBound projection_bound(const Region& E,
                                 const std::vector<std::optional<Rat>>& coord_uppers);

struct ClosedForm {
  SearchResult result;
  Certificate certificate;
  Rat tz_exact_base;      // t_Z(E) = base^(1/root_exponent)
  unsigned root_exponent = 1;
};
/// Closed-form extremals for polydisks and simple polylemniscates; nullopt
/// when no closed form is known for the region/degree.
std::optional<ClosedForm> closed_form(const Region& E, unsigned n, const Rat& tol);

}  // namespace icheb

#endif
