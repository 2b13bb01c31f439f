#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "icheb/report.hpp"
#include "icheb/svg.hpp"

namespace {

using namespace icheb;

Json read_json_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::invalid_argument("cannot open " + path);
  Json j;
  try {
    f >> j;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument("malformed JSON in " + path + ": " + e.what());
  }
  return j;
}

Region load_region(const std::string& path) { return region_from_json(read_json_file(path)); }

int run_search(const std::string& region_file, unsigned degree,
               const std::string& strategy, const std::string& tol_str,
               const std::string& out_file) {
  Region E = load_region(region_file);
  Rat tol = parse_rational(tol_str);
  SearchOptions opts;
  SearchResult r;
  if (strategy == "exhaustive") {
    r = exhaustive_search(E, degree, tol, opts);
  } else if (strategy == "lattice") {
    r = lattice_search(E, degree, tol, opts);
  } else if (strategy == "closed-form") {
    auto cf = closed_form(E, degree, tol);
    if (!cf) throw std::invalid_argument("no closed form for this region/degree");
    r = cf->result;
  } else if (strategy == "auto") {
    if (auto cf = closed_form_search(E, degree, tol)) {
      r = *cf;
    } else {
      try {
        r = exhaustive_search(E, degree, tol, opts);
      } catch (const GuardExceeded&) {
        r = lattice_search(E, degree, tol, opts);
      }
    }
  } else {
    throw std::invalid_argument("unknown strategy: " + strategy);
  }
  Json out = search_result_to_json(r);
  write_file(out_file, dump_deterministic(out));
  std::cout << "degree " << degree << ": " << poly_to_string(r.poly) << ", norm upper "
            << decimal_string(r.norm.upper, 12) << "\n";
  return 0;
}

int run_sequence(const std::string& region_file, unsigned nmax,
                 const std::string& strategy, const std::string& tol_str,
                 const std::string& out_file, const std::string& plot_file) {
  Region E = load_region(region_file);
  TzSequence seq = tz_sequence(E, nmax, strategy, parse_rational(tol_str));
  write_file(out_file, sequence_to_csv(seq));
  if (!plot_file.empty()) {
    std::vector<std::pair<double, double>> series;
    for (std::size_t i = 0; i < seq.per_degree.size(); ++i)
      series.emplace_back(static_cast<double>(i + 1),
                          mpf_class(to_hp(seq.root_upper[i])).get_d());
    write_file(plot_file, emit_plot_svg(series, "n", "norm^(1/n)"));
  }
  std::cout << "running t_Z upper " << decimal_string(seq.running_upper, 12)
            << " at degree " << seq.running_upper_at << "\n";
  return 0;
}

int run_fekete(const std::string& region_file, unsigned degree, unsigned iters,
               unsigned seed, const std::string& out_file) {
  Region E = load_region(region_file);
  FeketeOptions opts;
  opts.max_exchange_iters = iters;
  opts.seed = seed;
  FeketeSet F = fekete_search(E, degree, opts);
  write_file(out_file, dump_deterministic(fekete_to_json(F)));
  std::cout << "n " << degree << ": "
            << (F.singular ? std::string("singular")
                           : "diam_estimate " + decimal_string(F.diam_estimate, 12))
            << "\n";
  return 0;
}

int run_tdiam(const std::string& region_file, unsigned nmax, const std::string& out_file) {
  Region E = load_region(region_file);
  auto sets = tdiam_estimate(E, nmax);
  write_file(out_file, tdiam_to_csv(sets));
  const FeketeSet& last = sets.back();
  std::cout << "n " << last.n << ": "
            << (last.singular ? std::string("singular")
                              : "diam_estimate " + decimal_string(last.diam_estimate, 12))
            << "\n";
  return 0;
}

int run_bounds(const std::string& region_file, const std::vector<std::string>& lattice_files,
               unsigned nmax, unsigned tdiam_nmax, const std::string& strategy,
               const std::string& tol_str, const std::string& out_file) {
  Region E = load_region(region_file);
  std::vector<AlgebraicLattice> lattices;
  for (const std::string& path : lattice_files)
    lattices.push_back(lattice_from_json(read_json_file(path), E.dim()));
  BoundOptions opts;
  opts.n_max = nmax;
  opts.tdiam_n_max = tdiam_nmax;
  opts.strategy = strategy;
  opts.tol = parse_rational(tol_str);
  BoundReport rep = assemble_bounds(E, lattices, opts);
  write_file(out_file, dump_deterministic(bound_report_to_json(rep)));
  std::cout << "t_Z upper " << decimal_string(rep.tz_running_upper, 12) << "\n";
  return 0;
}

int run_certify(const std::string& poly_file, const std::string& lattice_file,
                const std::string& region_file, unsigned n_opt,
                const std::string& out_file) {
  IntPoly P = poly_from_json(read_json_file(poly_file));
  AlgebraicLattice L = lattice_from_json(read_json_file(lattice_file), P.dim());
  if (!region_file.empty()) {
    Region E = load_region(region_file);
    verify_membership(L, E);
  }
  unsigned n = n_opt ? n_opt : static_cast<unsigned>(std::max(P.degree(), 0L));
  Int N = n_certificate(P, L, n);
  VanishingReport vr = vanishing_check(P, L);
  Certificate fb = finite_lower_bound(L, n);

  Json verdicts = Json::array();
  for (const PointVerdict& v : vr.points) {
    Json coords = Json::array();
    for (const RootInterval& iv : v.coordinates) {
      if (iv.exact)
        coords.push_back(rat_string(iv.lo));
      else
        coords.push_back(Json::array({rat_string(iv.lo), rat_string(iv.hi)}));
    }
    verdicts.push_back(
        Json{{"point", std::move(coords)},
             {"status", v.status == PointVerdict::Status::Vanishes
                            ? "vanishes"
                            : (v.status == PointVerdict::Status::NonZero ? "nonzero"
                                                                         : "undetermined")},
             {"exact", v.exact}});
  }
  Json out{{"poly", poly_to_json(P)},
           {"degree", n},
           {"N", N.get_str()},
           {"vanishing", Json{{"points", std::move(verdicts)},
                              {"vanishes_everywhere", vr.vanishes_everywhere},
                              {"note", vr.note}}},
           {"finite_lower_bound", certificate_to_json(fb)},
           {"lattice", lattice_to_json(L)}};
  write_file(out_file, dump_deterministic(out));
  std::cout << "N = " << N.get_str() << "\n";
  return 0;
}

int run_verify(const std::string& poly_file, const std::string& region_file,
               const std::string& claims_file, const std::string& out_file) {
  IntPoly P = poly_from_json(read_json_file(poly_file));
  Region E = load_region(region_file);
  Json claims = read_json_file(claims_file);
  Rat tol = claims.contains("tolerance")
                ? parse_rational(claims.at("tolerance").get<std::string>())
                : Rat(1, 1000000000);

  Json results = Json::array();
  bool all_pass = true;
  auto add = [&](const std::string& name, bool pass, const std::string& detail) {
    results.push_back(Json{{"claim", name}, {"pass", pass}, {"detail", detail}});
    if (!pass) all_pass = false;
  };

  std::optional<NormEnclosure> enc;
  auto norm = [&]() -> const NormEnclosure& {
    if (!enc) enc = supnorm_region(P, E, tol);
    return *enc;
  };

  if (claims.contains("norm_upper")) {
    Rat claimed = parse_rational(claims.at("norm_upper").get<std::string>());
    bool pass = norm().upper <= claimed + tol;
    add("norm_upper", pass,
        "certified upper " + decimal_string(norm().upper, 20) + " vs claimed " +
            decimal_string(claimed, 20));
  }
  if (claims.contains("norm_lower")) {
    Rat claimed = parse_rational(claims.at("norm_lower").get<std::string>());
    bool pass = norm().lower >= claimed - tol;
    add("norm_lower", pass,
        "certified lower " + decimal_string(norm().lower, 20) + " vs claimed " +
            decimal_string(claimed, 20));
  }
  if (claims.contains("divisible_by")) {
    for (const Json& jf : claims.at("divisible_by")) {
      IntPoly f = poly_from_json(jf);
      bool pass = P.exact_divide(f).has_value();
      add("divisible_by " + poly_to_string(f), pass,
          pass ? "exact quotient found" : "division leaves a remainder");
    }
  }
  if (claims.contains("not_divisible_by")) {
    for (const Json& jf : claims.at("not_divisible_by")) {
      IntPoly f = poly_from_json(jf);
      bool pass = !P.exact_divide(f).has_value();
      add("not_divisible_by " + poly_to_string(f), pass,
          pass ? "division leaves a remainder" : "polynomial divides");
    }
  }
  if (claims.contains("compose")) {
    const Json& c = claims.at("compose");
    std::vector<IntPoly> maps;
    for (const Json& jm : c.at("with")) maps.push_back(poly_from_json(jm));
    IntPoly expected = poly_from_json(c.at("equals"));
    IntPoly got = P.compose(maps);
    bool pass = got == expected;
    add("compose", pass, pass ? "restriction matches" : "got " + poly_to_string(got));
  }

  Json out{{"poly", poly_to_json(P)},
           {"region", region_to_json(E)},
           {"all_pass", all_pass},
           {"results", std::move(results)}};
  if (!out_file.empty()) write_file(out_file, dump_deterministic(out));
  std::cout << (all_pass ? "all claims pass" : "CLAIM FAILURES") << "\n";
  return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"integer Chebyshev bounds, searches and certificates"};
  app.require_subcommand(1);

  std::string region_file, poly_file, lattice_file, claims_file, out_file, plot_file;
  std::vector<std::string> lattice_files;
  std::string strategy = "auto", tol = "1e-9";
  unsigned degree = 1, nmax = 4, tdiam_nmax = 6, iters = 200, seed = 0, cert_n = 0;

  CLI::App* search = app.add_subcommand("search", "best integer polynomial at one degree");
  search->add_option("--region", region_file)->required();
  search->add_option("--degree", degree)->required();
  search->add_option("--strategy", strategy)
      ->check(CLI::IsMember({"auto", "exhaustive", "lattice", "closed-form"}));
  search->add_option("--tol", tol);
  search->add_option("--out", out_file)->required();

  CLI::App* sequence = app.add_subcommand("sequence", "t_Z(n,E) upper bounds, n = 1..nmax");
  sequence->add_option("--region", region_file)->required();
  sequence->add_option("--nmax", nmax)->required();
  sequence->add_option("--strategy", strategy)
      ->check(CLI::IsMember({"auto", "exhaustive", "lattice", "closed-form"}));
  sequence->add_option("--tol", tol);
  sequence->add_option("--out", out_file)->required();
  sequence->add_option("--plot", plot_file);

  CLI::App* fekete = app.add_subcommand("fekete", "grid-restricted Fekete configuration");
  fekete->add_option("--region", region_file)->required();
  fekete->add_option("--degree", degree)->required();
  fekete->add_option("--iters", iters);
  fekete->add_option("--seed", seed);
  fekete->add_option("--out", out_file)->required();

  CLI::App* tdiam = app.add_subcommand("tdiam", "transfinite diameter estimates");
  tdiam->add_option("--region", region_file)->required();
  tdiam->add_option("--nmax", nmax)->required();
  tdiam->add_option("--out", out_file)->required();

  CLI::App* bounds = app.add_subcommand("bounds", "assembled bound report");
  bounds->add_option("--region", region_file)->required();
  bounds->add_option("--lattice", lattice_files);
  bounds->add_option("--nmax", nmax);
  bounds->add_option("--tdiam-nmax", tdiam_nmax);
  bounds->add_option("--strategy", strategy)
      ->check(CLI::IsMember({"auto", "exhaustive", "lattice", "closed-form"}));
  bounds->add_option("--tol", tol);
  bounds->add_option("--out", out_file)->required();

  CLI::App* certify = app.add_subcommand("certify", "N, vanishing verdicts, finite bound");
  certify->add_option("--poly", poly_file)->required();
  certify->add_option("--lattice", lattice_file)->required();
  certify->add_option("--region", region_file);
  certify->add_option("--degree", cert_n);
  certify->add_option("--out", out_file)->required();

  CLI::App* verify = app.add_subcommand("verify", "re-check claimed norms and factors");
  verify->add_option("--poly", poly_file)->required();
  verify->add_option("--region", region_file)->required();
  verify->add_option("--claims", claims_file)->required();
  verify->add_option("--out", out_file);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (search->parsed())
      return run_search(region_file, degree, strategy, tol, out_file);
    if (sequence->parsed())
      return run_sequence(region_file, nmax, strategy, tol, out_file, plot_file);
    if (fekete->parsed()) return run_fekete(region_file, degree, iters, seed, out_file);
    if (tdiam->parsed()) return run_tdiam(region_file, nmax, out_file);
    if (bounds->parsed())
      return run_bounds(region_file, lattice_files, nmax, tdiam_nmax, strategy, tol,
                        out_file);
    if (certify->parsed())
      return run_certify(poly_file, lattice_file, region_file, cert_n, out_file);
    if (verify->parsed())
      return run_verify(poly_file, region_file, claims_file, out_file);
  } catch (const GuardExceeded& e) {
    std::cerr << "guard exceeded: " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "budget/internal failure: " << e.what() << "\n";
    return 4;
  }
  return 2;
}
