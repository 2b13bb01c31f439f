#include "icheb/json_io.hpp"

namespace icheb {

namespace {

Rat rat_from_json(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rat(static_cast<long>(j.get<long long>()));
  throw std::invalid_argument("expected a rational literal");
}

}  // namespace

Json poly_to_json(const IntPoly& p) {
  Json terms = Json::array();
  for (const auto& [k, c] : p.terms()) {
    Json t = Json::array();
    for (unsigned e : k.k) t.push_back(e);
    t.push_back(c.get_str());
    terms.push_back(std::move(t));
  }
  return Json{{"dim", p.dim()}, {"terms", std::move(terms)}};
}

IntPoly poly_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("dim") || !j.contains("terms"))
    throw std::invalid_argument("polynomial JSON needs dim and terms");
  unsigned d = j.at("dim").get<unsigned>();
  IntPoly p(d);
  for (const Json& t : j.at("terms")) {
    if (!t.is_array() || t.size() != d + 1)
      throw std::invalid_argument("polynomial term needs d exponents and a coefficient");
    std::vector<unsigned> k;
    for (unsigned i = 0; i < d; ++i) k.push_back(t.at(i).get<unsigned>());
    Int c(t.at(d).get<std::string>());
    p.add_term(MultiIndex(std::move(k)), c);
  }
  return p;
}

Json point_to_json(const RatPoint& z) {
  Json out = Json::array();
  for (const QComplex& c : z.coords) {
    if (c.is_real())
      out.push_back(rat_string(c.re));
    else
      out.push_back(Json::array({rat_string(c.re), rat_string(c.im)}));
  }
  return out;
}

RatPoint point_from_json(const Json& j, unsigned dim_hint) {
  (void)dim_hint;
  if (!j.is_array()) throw std::invalid_argument("point JSON must be an array");
  RatPoint p;
  for (const Json& c : j) {
    if (c.is_array()) {
      if (c.size() != 2) throw std::invalid_argument("complex coordinate needs [re, im]");
      p.coords.emplace_back(rat_from_json(c.at(0)), rat_from_json(c.at(1)));
    } else {
      p.coords.emplace_back(rat_from_json(c));
    }
  }
  return p;
}

Json region_to_json(const Region& E) {
  if (const Box* b = E.get<Box>()) {
    Json bounds = Json::array();
    for (const auto& [a, bb] : b->bounds)
      bounds.push_back(Json::array({rat_string(a), rat_string(bb)}));
    return Json{{"type", "box"}, {"bounds", std::move(bounds)}};
  }
  if (const Polydisk* p = E.get<Polydisk>()) {
    Json radii = Json::array();
    for (const Rat& r : p->radii) radii.push_back(rat_string(r));
    return Json{{"type", "polydisk"}, {"radii", std::move(radii)}};
  }
  if (const Lemniscate* l = E.get<Lemniscate>()) {
    Json map = Json::array();
    for (const IntPoly& q : l->map.components) map.push_back(poly_to_json(q));
    Json radii = Json::array();
    for (const Rat& r : l->radii) radii.push_back(rat_string(r));
    return Json{{"type", "lemniscate"}, {"map", std::move(map)}, {"radii", std::move(radii)}};
  }
  if (const GraphSegment* g = E.get<GraphSegment>()) {
    return Json{{"type", "graph"},
                {"base", Json::array({rat_string(g->base.first), rat_string(g->base.second)})},
                {"line", Json::array({g->line_c0.get_str(), g->line_c1.get_str()})}};
  }
  const PointSet* s = E.get<PointSet>();
  Json pts = Json::array();
  for (const RatPoint& z : s->points) pts.push_back(point_to_json(z));
  return Json{{"type", "points"}, {"points", std::move(pts)}};
}

Region region_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("type"))
    throw std::invalid_argument("region JSON needs a type");
  std::string type = j.at("type").get<std::string>();
  if (type == "box") {
    Box b;
    for (const Json& iv : j.at("bounds")) {
      if (!iv.is_array() || iv.size() != 2)
        throw std::invalid_argument("box interval needs two endpoints");
      b.bounds.emplace_back(rat_from_json(iv.at(0)), rat_from_json(iv.at(1)));
    }
    return Region(std::move(b));
  }
  if (type == "polydisk") {
    Polydisk p;
    for (const Json& r : j.at("radii")) p.radii.push_back(rat_from_json(r));
    return Region(std::move(p));
  }
  if (type == "lemniscate") {
    Lemniscate l;
    for (const Json& q : j.at("map")) l.map.components.push_back(poly_from_json(q));
    for (const Json& r : j.at("radii")) l.radii.push_back(rat_from_json(r));
    SimpleMapCheck chk = is_simple_map(l.map.components);
    if (!chk.ok) throw std::invalid_argument("lemniscate map not simple: " + chk.failure);
    l.map.degree_l = chk.degree_l;
    l.map.monic_relaxed = chk.monic_relaxed;
    return Region(std::move(l));
  }
  if (type == "graph") {
    GraphSegment g;
    g.base = {rat_from_json(j.at("base").at(0)), rat_from_json(j.at("base").at(1))};
    Rat c0 = rat_from_json(j.at("line").at(0));
    Rat c1 = rat_from_json(j.at("line").at(1));
    if (c0.get_den() != 1 || c1.get_den() != 1)
      throw std::invalid_argument("graph line needs integer coefficients");
    g.line_c0 = c0.get_num();
    g.line_c1 = c1.get_num();
    return Region(std::move(g));
  }
  if (type == "points") {
    PointSet s;
    for (const Json& p : j.at("points")) s.points.push_back(point_from_json(p));
    return Region(std::move(s));
  }
  throw std::invalid_argument("unknown region type: " + type);
}

Json enclosure_to_json(const NormEnclosure& e) {
  Json out{{"lower", rat_string(e.lower)},
           {"upper", rat_string(e.upper)},
           {"lower_decimal", decimal_string(e.lower, 30)},
           {"upper_decimal", decimal_string(e.upper, 30)},
           {"witness", point_to_json(e.witness)},
           {"method", e.method},
           {"upper_certified", e.upper_certified},
           {"converged", e.converged}};
  return out;
}

Json search_result_to_json(const SearchResult& r) {
  Json out{{"degree", r.degree},
           {"strategy", strategy_name(r.strategy)},
           {"certified", r.certified_optimal},
           {"coeffs", poly_to_json(r.poly)},
           {"display", poly_to_string(r.poly)},
           {"norm", enclosure_to_json(r.norm)},
           {"note", r.note}};
  if (r.strategy == Strategy::Minkowski) out["bound_realized"] = r.bound_realized;
  return out;
}

Json certificate_to_json(const Certificate& c) {
  Json hyp = Json::array();
  for (const Hypothesis& h : c.hypotheses)
    hyp.push_back(Json{{"name", h.name},
                       {"status", h.machine_verified ? "verified" : "declared"}});
  Json out{{"kind", c.kind}, {"degree", c.degree_n}, {"applicable", c.applicable}};
  if (!c.applicable) out["inapplicable_reason"] = c.inapplicable_reason;
  if (c.integer_value) out["N"] = c.integer_value->get_str();
  if (c.lower_bound) {
    out["lower_bound"] = rat_string(*c.lower_bound);
    out["lower_bound_decimal"] = decimal_string(*c.lower_bound, 30);
  }
  if (c.upper_bound) {
    out["upper_bound"] = rat_string(*c.upper_bound);
    out["upper_bound_decimal"] = decimal_string(*c.upper_bound, 30);
  }
  if (!c.display.empty()) out["display"] = c.display;
  out["hypotheses"] = std::move(hyp);
  return out;
}

AlgebraicLattice lattice_from_json(const Json& j, unsigned dim) {
  std::vector<Json> entries;
  if (j.is_array())
    for (const Json& e : j) entries.push_back(e);
  else
    entries.push_back(j);
  AlgebraicLattice L;
  L.coords.resize(dim);
  for (const Json& e : entries) {
    if (!e.is_object() || !e.contains("coeffs"))
      throw std::invalid_argument("minimal polynomial JSON needs coeffs");
    unsigned coord = e.value("coordinate", 1u);
    if (coord < 1 || coord > dim)
      throw std::invalid_argument("minimal polynomial coordinate out of range");
    ZVec coeffs;
    for (const Json& c : e.at("coeffs")) {
      Rat r = rat_from_json(c);
      if (r.get_den() != 1)
        throw std::invalid_argument("minimal polynomial coefficients must be integers");
      coeffs.push_back(r.get_num());
    }
    bool irred = e.value("irreducible", true);
    L.coords[coord - 1].push_back(make_conjugate_set(coeffs, irred));
  }
  for (unsigned jx = 0; jx < dim; ++jx)
    if (L.coords[jx].empty())
      throw std::invalid_argument("lattice missing coordinate " + std::to_string(jx + 1));
  return L;
}

Json lattice_to_json(const AlgebraicLattice& L) {
  Json out = Json::array();
  for (unsigned j = 0; j < L.dim(); ++j) {
    for (const ConjugateSet& s : L.coords[j]) {
      Json coeffs = Json::array();
      for (const Int& c : s.min_poly) coeffs.push_back(c.get_str());
      out.push_back(Json{{"coeffs", std::move(coeffs)},
                         {"coordinate", j + 1},
                         {"irreducible", s.declared_irreducible},
                         {"degree", s.degree_m},
                         {"leading", s.leading.get_str()},
                         {"membership",
                          s.membership == ConjugateSet::Membership::Verified
                              ? "verified"
                              : (s.membership == ConjugateSet::Membership::Declared
                                     ? "declared"
                                     : "unknown")}});
    }
  }
  return out;
}

Json fekete_to_json(const FeketeSet& F) {
  Json pts = Json::array();
  for (const RatPoint& z : F.points) pts.push_back(point_to_json(z));
  Json out{{"d", F.d},
           {"n", F.n},
           {"h", F.h.get_str()},
           {"l", F.l.get_str()},
           {"singular", F.singular},
           {"points", std::move(pts)}};
  if (!F.singular) {
    out["log_abs_V"] = decimal_string(F.log_abs_V, 30);
    out["diam_raw"] = decimal_string(F.diam_raw, 30);
    out["diam_estimate"] = decimal_string(F.diam_estimate, 30);
    out["estimate_note"] = "diam_estimate is Hadamard-normalized: (|V|/h^(h/2))^(1/l)";
  }
  out["exchange_iterations"] = F.exchange_iterations;
  out["exchange_converged"] = F.exchange_converged;
  return out;
}

std::string dump_deterministic(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace icheb
