#ifndef ICHEB_JSON_IO_HPP
#define ICHEB_JSON_IO_HPP

#include <json.hpp>

#include "icheb/certify.hpp"

namespace icheb {

using Json = nlohmann::ordered_json;

// Polynomial JSON: {"dim": d, "terms": [[k1,...,kd, "coeff"], ...]};
// coefficients as decimal strings to preserve arbitrary precision.
Json poly_to_json(const IntPoly& p);
IntPoly poly_from_json(const Json& j);

// Region JSON per the documented formats:
//   {"type":"box","bounds":[["0","1"],["0","1"]]}
//   {"type":"polydisk","radii":["1/2","1/3"]}
//   {"type":"lemniscate","map":[<poly>...],"radii":[...]}
//   {"type":"graph","base":["0","1"],"line":["1","-1"]}
//   {"type":"points","points":[[...], ...]}
Json region_to_json(const Region& E);
Region region_from_json(const Json& j);

Json point_to_json(const RatPoint& z);
RatPoint point_from_json(const Json& j, unsigned dim_hint = 0);

Json enclosure_to_json(const NormEnclosure& e);
Json search_result_to_json(const SearchResult& r);
Json certificate_to_json(const Certificate& c);

// Minimal-polynomial input: {"coeffs":["1","-5","5"], "coordinate": 1,
// "irreducible": true}; a lattice file is an array of these (several entries
// may share a coordinate).
AlgebraicLattice lattice_from_json(const Json& j, unsigned dim);
Json lattice_to_json(const AlgebraicLattice& L);

Json fekete_to_json(const FeketeSet& F);

std::string dump_deterministic(const Json& j);

}  // namespace icheb

#endif
