#include <doctest.h>

#include <algorithm>

#include "icheb/fekete.hpp"

using namespace icheb;

namespace {

struct Rng {
  unsigned long long s;
  explicit Rng(unsigned long long seed) : s(seed) {}
  long range(long lo, long hi) {
    s = s * 6364136223846793005ull + 1442695040888963407ull;
    return lo + static_cast<long>((s >> 33) % static_cast<unsigned long long>(hi - lo + 1));
  }
};

}  // namespace

TEST_CASE("h_n and l_n obey the exact ratio l = n h d/(d+1)") {
  for (unsigned d = 1; d <= 4; ++d)
    for (unsigned n = 1; n <= 12; ++n) {
      DegreeDims dims = DegreeDims::make(d, n);
      CHECK(dims.l * (d + 1) == Int(n) * dims.h * d);
    }
}

TEST_CASE("vandermonde: univariate product formula value") {
  std::vector<RatPoint> pts{RatPoint::real({Rat(0)}), RatPoint::real({Rat(1, 2)}),
                            RatPoint::real({Rat(1)})};
  QComplex det = vandermonde_det_exact(pts, 1, 2);
  CHECK(det.abs2() == Rat(1, 16));  // |V| = 1/4

  VandermondeLog vl = vandermonde_logabs(pts, 1, 2);
  REQUIRE(!vl.singular);
  mpf_class expect = hp_log(to_hp(Rat(1, 4)));
  CHECK(abs(mpf_class(vl.log_abs - expect)) < mpf_class(1e-45, kHpBits));
}

TEST_CASE("vandermonde agrees with the pairwise-product to 40 digits") {
  Rng rng(5);
  for (int iter = 0; iter < 6; ++iter) {
    unsigned n = 3 + iter % 3;
    std::vector<RatPoint> pts;
    std::vector<Rat> xs;
    for (unsigned i = 0; i <= n; ++i) {
      Rat x(rng.range(-50, 50), 1 + rng.range(0, 30));
      x.canonicalize();
      while (std::find(xs.begin(), xs.end(), x) != xs.end()) x += Rat(1, 97 + iter);
      xs.push_back(x);
      pts.push_back(RatPoint::real({x}));
    }
    Rat prod(1);
    for (std::size_t i = 0; i < xs.size(); ++i)
      for (std::size_t j = i + 1; j < xs.size(); ++j) prod *= xs[j] - xs[i];
    if (prod < 0) prod = -prod;
    REQUIRE(prod != 0);
    VandermondeLog vl = vandermonde_logabs(pts, 1, n);
    REQUIRE(!vl.singular);
    mpf_class expect = hp_log(to_hp(prod));
    CHECK(abs(mpf_class(vl.log_abs - expect)) < mpf_class(1e-40, kHpBits));
  }
}

TEST_CASE("vandermonde: bivariate 3x3 determinant and singularity") {
  std::vector<RatPoint> pts{RatPoint::real({Rat(0), Rat(0)}),
                            RatPoint::real({Rat(1), Rat(0)}),
                            RatPoint::real({Rat(0), Rat(1)})};
  QComplex det = vandermonde_det_exact(pts, 2, 1);
  CHECK(det.abs2() == Rat(1));

  std::vector<RatPoint> rep{RatPoint::real({Rat(0), Rat(0)}),
                            RatPoint::real({Rat(0), Rat(0)}),
                            RatPoint::real({Rat(0), Rat(1)})};
  CHECK(vandermonde_logabs(rep, 2, 1).singular);
  CHECK(vandermonde_det_exact(rep, 2, 1).is_zero());
}

TEST_CASE("fekete_search recovers the endpoint configurations") {
  FeketeOptions opts;
  opts.grid_density = 33;
  FeketeSet F = fekete_search(Region(Box{{{Rat(-1), Rat(1)}}}), 2, opts);
  REQUIRE(!F.singular);
  REQUIRE(F.points.size() == 3);
  std::vector<Rat> xs;
  for (const auto& z : F.points) xs.push_back(z.coords[0].re);
  std::sort(xs.begin(), xs.end());
  CHECK(xs[0] == Rat(-1));
  CHECK(xs[1] == Rat(0));
  CHECK(xs[2] == Rat(1));
  CHECK(abs(mpf_class(F.log_abs_V - hp_log(to_hp(Rat(2))))) < mpf_class(1e-30, kHpBits));

  FeketeSet F2 = fekete_search(Region(Box{{{Rat(0), Rat(1)}}}), 1, opts);
  std::vector<Rat> xs2{F2.points[0].coords[0].re, F2.points[1].coords[0].re};
  std::sort(xs2.begin(), xs2.end());
  CHECK(xs2[0] == Rat(0));
  CHECK(xs2[1] == Rat(1));
}

TEST_CASE("fekete_search on a point set of exactly h_n points returns them") {
  PointSet s{{RatPoint::real({Rat(0)}), RatPoint::real({Rat(1, 3)}),
              RatPoint::real({Rat(1)})}};
  FeketeSet F = fekete_search(Region(s), 2);
  REQUIRE(F.points.size() == 3);
  std::vector<Rat> xs;
  for (const auto& z : F.points) xs.push_back(z.coords[0].re);
  std::sort(xs.begin(), xs.end());
  CHECK(xs[0] == Rat(0));
  CHECK(xs[1] == Rat(1, 3));
  CHECK(xs[2] == Rat(1));
}

TEST_CASE("exchange passes never decrease log|V|") {
  FeketeOptions greedy_only;
  greedy_only.max_exchange_iters = 0;
  FeketeOptions full;
  Region E{Box{{{Rat(0), Rat(1)}}}};
  for (unsigned n : {3u, 6u}) {
    FeketeSet g = fekete_search(E, n, greedy_only);
    FeketeSet f = fekete_search(E, n, full);
    REQUIRE(!g.singular);
    REQUIRE(!f.singular);
    CHECK(f.log_abs_V >= g.log_abs_V - mpf_class(1e-50, kHpBits));
  }
}

TEST_CASE("lagrange basis bounded by 1 on returned configurations") {
  // grid-restricted maximality: the bound holds on the search grid itself
  Region E{Box{{{Rat(-1), Rat(1)}}}};
  FeketeOptions opts;
  opts.grid_density = 33;
  FeketeSet F = fekete_search(E, 2, opts);
  mpf_class m = lagrange_sup_check(F, E, 33);
  CHECK(m <= mpf_class(1.000001, kHpBits));
  CHECK(m >= mpf_class(0.999999, kHpBits));  // attained at the nodes

  PointSet s{{RatPoint::real({Rat(0)}), RatPoint::real({Rat(1)})}};
  FeketeSet F2 = fekete_search(Region(s), 1);
  mpf_class m2 = lagrange_sup_check(F2, Region(Box{{{Rat(0), Rat(1)}}}), 100);
  CHECK(m2 <= mpf_class(1.000001, kHpBits));
}

TEST_CASE("tdiam approaches the interval capacity from above") {
  Region E{Box{{{Rat(-1), Rat(1)}}}};
  FeketeOptions opts;
  opts.grid_density = 96;
  auto sets = tdiam_estimate(E, 6, opts);
  REQUIRE(sets.size() == 6);
  for (const FeketeSet& f : sets) {
    REQUIRE(!f.singular);
    CHECK(f.diam_raw > mpf_class(0.5, kHpBits));
  }
  CHECK(sets[5].diam_raw < sets[0].diam_raw);
}

TEST_CASE("tdiam on a single point degenerates to zero") {
  PointSet s{{RatPoint::real({Rat(1, 2)})}};
  auto sets = tdiam_estimate(Region(s), 2);
  REQUIRE(sets.size() == 2);
  for (const auto& f : sets) {
    CHECK(f.singular);
    CHECK(f.diam_estimate == 0);
  }
}

TEST_CASE("fekete smoke on the bidisk torus") {
  Region E{Polydisk{{Rat(1, 2), Rat(1, 2)}}};
  FeketeOptions fo;
  fo.grid_density = 6;
  FeketeSet F = fekete_search(E, 1, fo);
  REQUIRE(!F.singular);
  CHECK(F.points.size() == 3);
  CHECK(F.diam_estimate > 0);
}

TEST_CASE("fekete_search errors on an undersized grid") {
  PointSet s{{RatPoint::real({Rat(0)}), RatPoint::real({Rat(1)})}};
  CHECK_THROWS_AS(fekete_search(Region(s), 2), std::invalid_argument);
}
