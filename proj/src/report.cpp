#include "icheb/report.hpp"

#include <sstream>

namespace icheb {

BoundReport assemble_bounds(const Region& E, const std::vector<AlgebraicLattice>& lattices,
                            const BoundOptions& opts) {
  BoundReport rep{E, {}, Rat(1), 0, "sequence", {}, std::nullopt, {}, {}};

  // per-degree uppers
  TzSequence seq = tz_sequence(E, opts.n_max, opts.strategy, opts.tol, opts.search);
  for (unsigned n = 1; n <= opts.n_max; ++n) {
    BoundRow row;
    row.n = n;
    row.upper = seq.per_degree[n - 1];
    if (!row.upper->norm.upper_certified)
      rep.flags.push_back("degree " + std::to_string(n) + ": upper not certified");
    rep.rows.push_back(std::move(row));
  }
  rep.tz_running_upper = seq.running_upper;
  rep.tz_running_upper_at = seq.running_upper_at;

  // certified lowers from the supplied lattices
  for (const AlgebraicLattice& L0 : lattices) {
    AlgebraicLattice L = L0;
    verify_membership(L, E);
    for (BoundRow& row : rep.rows) {
      Certificate c = finite_lower_bound(L, row.n);
      if (!c.applicable) continue;
      bool membership_ok = true;
      for (const Hypothesis& h : c.hypotheses)
        if (h.name.find("inside projection") != std::string::npos && !h.machine_verified)
          membership_ok = false;
      if (!membership_ok) {
        rep.flags.push_back("degree " + std::to_string(row.n) +
                            ": lower bound skipped (membership not verified)");
        continue;
      }
      if (!row.lower || (c.lower_bound && row.lower->lower_bound &&
                         *c.lower_bound > *row.lower->lower_bound))
        row.lower = c;
    }
  }

  // consistency: certified lower <= certified upper
  for (const BoundRow& row : rep.rows) {
    if (!row.lower || !row.upper || !row.lower->lower_bound) continue;
    if (!row.upper->norm.upper_certified) continue;
    if (*row.lower->lower_bound > row.upper->norm.upper)
      throw std::logic_error("bound report inconsistency at degree " +
                             std::to_string(row.n));
  }

  // transfinite diameter estimates + Hilbert-Fekete
  if (!E.get<PointSet>()) {
    rep.tdiam = tdiam_estimate(E, opts.tdiam_n_max, opts.fekete);
    const FeketeSet* last = nullptr;
    for (const FeketeSet& f : rep.tdiam)
      if (!f.singular) last = &f;
    if (last) {
      Rat tc_est = snap_to_rational(last->diam_estimate, 30);
      if (tc_est < 0) tc_est = 0;
      Certificate hf = hilbert_fekete_bound(tc_est, E.dim());
      hf.display += " (t_C estimate from degree " + std::to_string(last->n) + ")";
      rep.hilbert_fekete = hf;
      rep.flags.push_back("hilbert-fekete bound rests on a t_C estimate, not a certificate");
    } else {
      rep.flags.push_back("tdiam: all configurations singular (pluripolar-like region)");
    }
  }

  // projection bound: per-coordinate univariate uppers (closed forms where
  // available, otherwise a univariate search on the projection)
  std::vector<std::optional<Rat>> coord_uppers(E.dim());
  for (unsigned j = 1; j <= E.dim(); ++j) {
    Projection proj = project(E, j);
    if (!proj.exact) continue;
    if (const Box* b = proj.region.get<Box>()) {
      Rat len = b->bounds[0].second - b->bounds[0].first;
      if (len >= 4) {
        coord_uppers[j - 1] = Rat(1);
      } else if (E.dim() > 1) {
        TzSequence cseq =
            tz_sequence(proj.region, opts.n_max, opts.strategy, opts.tol, opts.search);
        coord_uppers[j - 1] = cseq.running_upper;
      }
    } else if (const Polydisk* p = proj.region.get<Polydisk>()) {
      coord_uppers[j - 1] = p->radii[0] >= 1 ? Rat(1) : p->radii[0];
    }
  }
  rep.projection = projection_bound(E, coord_uppers);
  if (rep.projection.exact_one) {
    rep.tz_running_upper = Rat(1);
    rep.tz_running_upper_at = 0;
    rep.tz_upper_source = "projection (C_n = 1)";
  } else if (rep.projection.upper < rep.tz_running_upper) {
    rep.tz_running_upper = rep.projection.upper;
    rep.tz_running_upper_at = 0;
    rep.tz_upper_source = rep.projection.provenance;
  }
  return rep;
}

Json bound_report_to_json(const BoundReport& r) {
  Json rows = Json::array();
  for (const BoundRow& row : r.rows) {
    Json jr{{"n", row.n}};
    if (row.upper) {
      jr["upper"] = Json{{"value", rat_string(row.upper->norm.upper)},
                         {"decimal", decimal_string(row.upper->norm.upper, 30)},
                         {"provenance", strategy_name(row.upper->strategy)},
                         {"certified", row.upper->norm.upper_certified}};
    }
    if (row.lower && row.lower->lower_bound) {
      jr["lower"] = Json{{"value", rat_string(*row.lower->lower_bound)},
                         {"decimal", decimal_string(*row.lower->lower_bound, 30)},
                         {"provenance", row.lower->kind}};
    }
    rows.push_back(std::move(jr));
  }
  Json tdiam = Json::array();
  for (const FeketeSet& f : r.tdiam) {
    Json jf{{"n", f.n}, {"singular", f.singular}};
    if (!f.singular) {
      jf["diam_raw"] = decimal_string(f.diam_raw, 30);
      jf["diam_estimate"] = decimal_string(f.diam_estimate, 30);
    }
    tdiam.push_back(std::move(jf));
  }
  Json out{{"region", region_to_json(r.region)},
           {"rows", std::move(rows)},
           {"tz_upper", Json{{"value", rat_string(r.tz_running_upper)},
                             {"decimal", decimal_string(r.tz_running_upper, 30)},
                             {"at_degree", r.tz_running_upper_at},
                             {"source", r.tz_upper_source}}},
           {"tC_estimates", std::move(tdiam)}};
  if (r.hilbert_fekete) out["hilbert_fekete"] = certificate_to_json(*r.hilbert_fekete);
  out["projection"] = Json{{"upper", rat_string(r.projection.upper)},
                           {"exact_one", r.projection.exact_one},
                           {"provenance", r.projection.provenance}};
  Json flags = Json::array();
  for (const std::string& f : r.flags) flags.push_back(f);
  out["flags"] = std::move(flags);
  return out;
}

std::string sequence_to_csv(const TzSequence& seq) {
  std::ostringstream os;
  os << "n,norm_upper,norm_upper_pow_1_over_n\n";
  for (std::size_t i = 0; i < seq.per_degree.size(); ++i) {
    const SearchResult& r = seq.per_degree[i];
    os << r.degree << "," << rat_string(r.norm.upper) << ","
       << decimal_string(seq.root_upper[i], 30) << "\n";
  }
  return os.str();
}

std::string tdiam_to_csv(const std::vector<FeketeSet>& sets) {
  std::ostringstream os;
  os << "n,h_n,l_n,log_abs_V,diam_estimate,diam_raw\n";
  for (const FeketeSet& f : sets) {
    os << f.n << "," << f.h.get_str() << "," << f.l.get_str() << ",";
    if (f.singular)
      os << "-inf,0,0\n";
    else
      os << decimal_string(f.log_abs_V, 30) << "," << decimal_string(f.diam_estimate, 30)
         << "," << decimal_string(f.diam_raw, 30) << "\n";
  }
  return os.str();
}

}  // namespace icheb
