#ifndef ICHEB_FEKETE_HPP
#define ICHEB_FEKETE_HPP

#include "icheb/multiindex.hpp"
#include "icheb/region.hpp"

namespace icheb {

struct VandermondeLog {
  bool singular = false;
  mpf_class log_abs;  // meaningless when singular
};

/// log|det(z_i^{k^(j)})| with columns ordered by monomials_upto(d, n), via
/// pivoted triangular factorization at the given precision. A repeated or
/// unisolvence-breaking configuration reports singular (log|V| = -inf).
VandermondeLog vandermonde_logabs(const std::vector<RatPoint>& points, unsigned d,
                                  unsigned n, mp_bitcnt_t prec = kHpBits);

/// Exact determinant over the complex rationals; cross-check for h_n <= 12.
QComplex vandermonde_det_exact(const std::vector<RatPoint>& points, unsigned d,
                               unsigned n);

/// Candidate Fekete configuration with determinant and diameter data.
/// diam_raw is |V|^(1/l_n); diam_estimate is the Hadamard-normalized value
/// (|V| / h^(h/2))^(1/l_n), which shares the n->infinity limit and converges
/// much faster at accessible degrees (exact for disks at every n).
struct FeketeSet {
  unsigned d = 1, n = 1;
  Int h, l;
  std::vector<RatPoint> points;
  bool singular = false;
  mpf_class log_abs_V;
  mpf_class diam_raw;
  mpf_class diam_estimate;
  unsigned exchange_iterations = 0;
  bool exchange_converged = false;
};

struct FeketeOptions {
  unsigned grid_density = 0;  // 0 = choose from (region, n)
  unsigned max_exchange_iters = 200;
  unsigned seed = 0;
  mp_bitcnt_t prec = kHpBits;
};

/// Grid-restricted Fekete search: greedy pivoted selection from sample_grid
/// followed by single-point exchange passes; log|V| never decreases.
FeketeSet fekete_search(const Region& E, unsigned n, const FeketeOptions& opts = {});

/// Diameter estimates for n = 1..n_max.
std::vector<FeketeSet> tdiam_estimate(const Region& E, unsigned n_max,
                                      const FeketeOptions& opts = {});

/// max over sampled z in E and j of |l_j(z)| for the fundamental Lagrange
/// polynomials of F; values materially above 1 diagnose non-maximality.
/// Grid-restricted maximality bounds the basis by 1 on the search grid; a
/// strictly finer sample grid can exceed 1 by the grid-resolution defect.
mpf_class lagrange_sup_check(const FeketeSet& F, const Region& E,
                             unsigned sample_density, mp_bitcnt_t prec = kHpBits);

}  // namespace icheb

#endif
