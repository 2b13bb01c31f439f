#ifndef ICHEB_REPORT_HPP
#define ICHEB_REPORT_HPP

#include "icheb/json_io.hpp"

namespace icheb {

struct BoundRow {
  unsigned n = 0;
  std::optional<SearchResult> upper;
  std::optional<Certificate> lower;
};

/// Assembled upper/lower bounds on t_Z(n,E) and t_Z(E); every numeric entry
/// carries its provenance, and certified lower <= certified upper is a hard
/// assertion at assembly time.
struct BoundReport {
  Region region;
  std::vector<BoundRow> rows;
  Rat tz_running_upper{1};
  unsigned tz_running_upper_at = 0;  // degree; 0 when another source is tighter
  std::string tz_upper_source = "sequence";
  std::vector<FeketeSet> tdiam;
  std::optional<Certificate> hilbert_fekete;
  ProjectionBound projection;
  std::vector<std::string> flags;
};

struct BoundOptions {
  unsigned n_max = 4;
  unsigned tdiam_n_max = 6;
  std::string strategy = "auto";
  Rat tol{1, 1000000000};
  FeketeOptions fekete;
  SearchOptions search;
};

BoundReport assemble_bounds(const Region& E, const std::vector<AlgebraicLattice>& lattices,
                            const BoundOptions& opts);

Json bound_report_to_json(const BoundReport& r);

std::string sequence_to_csv(const TzSequence& seq);
std::string tdiam_to_csv(const std::vector<FeketeSet>& sets);

}  // namespace icheb

#endif
