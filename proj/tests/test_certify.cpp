#include <doctest.h>

#include "icheb/certify.hpp"

using namespace icheb;

namespace {

const Rat kTol(1, 1000000000);

// minimal polynomial 5x^2 - 5x + 1 (roots (5 +- sqrt5)/10, both in [0,1])
ConjugateSet golden_set() { return make_conjugate_set({Int(1), Int(-5), Int(5)}, true); }

AlgebraicLattice lattice01_squared() {
  // {0,1} x {0,1} as two degree-1 sets per coordinate: roots of x and x-1
  AlgebraicLattice L;
  L.coords.resize(2);
  for (unsigned j = 0; j < 2; ++j) {
    L.coords[j].push_back(make_conjugate_set({Int(0), Int(1)}, true));
    L.coords[j].push_back(make_conjugate_set({Int(-1), Int(1)}, true));
  }
  return L;
}

IntPoly c5_square() {
  IntPoly x = IntPoly::variable(2, 1), y = IntPoly::variable(2, 2);
  IntPoly one = IntPoly::constant(2, 1);
  return x * y * (y - one) * (x - one) * (x - y);
}

struct Rng {
  unsigned long long s;
  explicit Rng(unsigned long long seed) : s(seed) {}
  long range(long lo, long hi) {
    s = s * 6364136223846793005ull + 1442695040888963407ull;
    return lo + static_cast<long>((s >> 33) % static_cast<unsigned long long>(hi - lo + 1));
  }
};

IntPoly random_univariate(Rng& rng, unsigned deg) {
  IntPoly p(1);
  for (unsigned i = 0; i <= deg; ++i) p.add_term(MultiIndex({i}), Int(rng.range(-3, 3)));
  if (p.is_zero()) p.add_term(MultiIndex({0}), 1);
  return p;
}

}  // namespace

TEST_CASE("conjugate sets: construction checks") {
  ConjugateSet s = golden_set();
  CHECK(s.degree_m == 2);
  CHECK(s.leading == 5);
  CHECK(s.all_roots_real);
  REQUIRE(s.real_roots.size() == 2);

  // primitivity and squarefreeness machine-checked
  CHECK_THROWS_AS(make_conjugate_set({Int(2), Int(-10), Int(10)}, true),
                  std::invalid_argument);
  CHECK_THROWS_AS(make_conjugate_set({Int(3)}, true), std::invalid_argument);
  CHECK_THROWS_AS(make_conjugate_set({Int(1), Int(-2), Int(1)}, true),
                  std::invalid_argument);  // (x-1)^2
}

TEST_CASE("membership verification against projections") {
  AlgebraicLattice L;
  L.coords.push_back({golden_set()});
  Region E{Box{{{Rat(0), Rat(1)}}}};
  CHECK(verify_membership(L, E));
  CHECK(L.coords[0][0].membership == ConjugateSet::Membership::Verified);

  AlgebraicLattice L2;
  L2.coords.push_back({golden_set()});
  Region tiny{Box{{{Rat(0), Rat(1, 4)}}}};  // larger root lies outside
  CHECK(!verify_membership(L2, tiny));
}

TEST_CASE("n_certificate: the golden-quadratic -1 instance") {
  AlgebraicLattice L;
  L.coords.push_back({golden_set()});
  IntPoly p = IntPoly::univariate({Int(-1), Int(2)});  // 2x - 1
  Int N = n_certificate(p, L);
  CHECK(N == -1);

  // symmetric-function oracle: 5 (4 e2 - 2 e1 + 1) with e1 = 1, e2 = 1/5
  Rat oracle = Rat(5) * (Rat(4) * Rat(1, 5) - Rat(2) * Rat(1) + Rat(1));
  CHECK(oracle == Rat(-1));
}

TEST_CASE("n_certificate vanishes exactly on lattice zeros") {
  CHECK(n_certificate(c5_square(), lattice01_squared()) == 0);

  IntPoly one = IntPoly::constant(2, 1);
  CHECK(n_certificate(one, lattice01_squared()) != 0);

  AlgebraicLattice L;
  L.coords.push_back({golden_set()});
  CHECK_THROWS_AS(n_certificate(IntPoly::constant(1, 1), AlgebraicLattice{}),
                  std::invalid_argument);
  (void)L;
}

TEST_CASE("n_certificate is multiplicative with degree bookkeeping") {
  AlgebraicLattice L;
  L.coords.push_back({golden_set()});
  Rng rng(17);
  for (int iter = 0; iter < 12; ++iter) {
    IntPoly p = random_univariate(rng, 1 + iter % 3);
    IntPoly q = random_univariate(rng, 1 + (iter / 2) % 3);
    long np = std::max(p.degree(), 0L), nq = std::max(q.degree(), 0L);
    Int expected = n_certificate(p, L, np) * n_certificate(q, L, nq);
    CHECK(n_certificate(p * q, L, np + nq) == expected);
  }
}

TEST_CASE("n_certificate: resultant route matches high-precision root products") {
  ConjugateSet s = golden_set();
  AlgebraicLattice L;
  L.coords.push_back({s});
  Rng rng(23);
  for (int iter = 0; iter < 8; ++iter) {
    IntPoly p = random_univariate(rng, 2);
    long n = std::max(p.degree(), 0L);
    Int N = n_certificate(p, L, n);
    // product over refined roots, a^n * P(l1) * P(l2)
    mpf_class acc(1, kHpBits);
    for (RootInterval iv : s.real_roots) {
      refine_root(s.min_poly, iv, Rat(Int(1), pow_int(10, 45)));
      mpf_class v = to_hp(p.eval_real({(iv.lo + iv.hi) / 2}));
      acc *= v;
    }
    acc *= to_hp(pow_rat(Rat(5), n));
    mpf_class diff = acc - to_hp(Rat(N));
    CHECK(abs(diff) < mpf_class(1e-25, kHpBits) * (abs(to_hp(Rat(N))) + 1));
  }
}

TEST_CASE("n_certificate d=2: resultant route matches root-pair products") {
  ConjugateSet s = golden_set();
  AlgebraicLattice L;
  L.coords.push_back({s});
  L.coords.push_back({s});
  Rng rng(61);
  for (int iter = 0; iter < 6; ++iter) {
    IntPoly p(2);
    for (int t = 0; t < 5; ++t)
      p.add_term(MultiIndex({static_cast<unsigned>(rng.range(0, 2)),
                             static_cast<unsigned>(rng.range(0, 2))}),
                 Int(rng.range(-3, 3)));
    if (p.is_zero()) continue;
    long n = std::max(p.degree(), 0L);
    Int N = n_certificate(p, L, n);

    // oracle: a1^(m2 n) a2^(m1 n) * prod over root pairs of P(l1, l2)
    std::vector<Rat> roots;
    for (RootInterval iv : s.real_roots) {
      refine_root(s.min_poly, iv, Rat(Int(1), pow_int(10, 45)));
      roots.push_back((iv.lo + iv.hi) / 2);
    }
    mpf_class acc(1, kHpBits);
    for (const Rat& l1 : roots)
      for (const Rat& l2 : roots) acc *= to_hp(p.eval_real({l1, l2}));
    acc *= to_hp(pow_rat(Rat(625), n));  // a1^(m2 n) * a2^(m1 n) = 5^(2n) * 5^(2n)
    mpf_class expect = to_hp(Rat(N));
    CHECK(abs(mpf_class(acc - expect)) <
          mpf_class(1e-20, kHpBits) * (abs(expect) + 1));
  }
}

TEST_CASE("finite_lower_bound: the 5^(-1/2) certificate") {
  AlgebraicLattice L;
  L.coords.push_back({golden_set()});
  Region E{Box{{{Rat(0), Rat(1)}}}};
  verify_membership(L, E);

  Certificate c = finite_lower_bound(L, 1);
  REQUIRE(c.applicable);
  REQUIRE(c.lower_bound.has_value());
  // bound = 5^(-1/2), certified from below
  CHECK(*c.lower_bound * *c.lower_bound <= Rat(1, 5));
  CHECK(*c.lower_bound >= parse_rational("0.447213595"));
  bool membership_verified = false;
  for (const Hypothesis& h : c.hypotheses)
    if (h.name.find("inside projection") != std::string::npos && h.machine_verified)
      membership_verified = true;
  CHECK(membership_verified);

  // consistent with t_Z(1, [0,1]) = 1
  CHECK(*c.lower_bound <= Rat(1));
}

TEST_CASE("finite_lower_bound: precondition boundary cases") {
  AlgebraicLattice L;
  L.coords.push_back({golden_set()});
  Certificate c = finite_lower_bound(L, 2);  // m = 2 is not > n = 2
  CHECK(!c.applicable);
  CHECK(c.inapplicable_reason.find("m > n") != std::string::npos);

  // Trigub-style reference: single rational 1/(m+2) has degree 1
  AlgebraicLattice T;
  T.coords.push_back({make_conjugate_set({Int(-1), Int(3)}, true)});
  Certificate ct = finite_lower_bound(T, 1);
  CHECK(!ct.applicable);
}

TEST_CASE("finite lower bounds never exceed certified uppers") {
  AlgebraicLattice L;
  L.coords.push_back({golden_set()});
  Region E{Box{{{Rat(0), Rat(1)}}}};
  verify_membership(L, E);
  Certificate c = finite_lower_bound(L, 1);
  REQUIRE(c.applicable);
  SearchResult r = exhaustive_search(E, 1, kTol);
  CHECK(*c.lower_bound <= r.norm.upper);
}

TEST_CASE("asymptotic_lower_bound is a flagged surrogate") {
  std::vector<std::vector<ConjugateSet>> fam{{golden_set()}};
  AsymptoticBound b = asymptotic_lower_bound(fam);
  CHECK(b.note.find("surrogate") != std::string::npos);
  CHECK(b.certified_lower * b.certified_lower <= Rat(1, 5));
  CHECK(b.certified_lower >= parse_rational("0.4472"));

  std::vector<std::vector<ConjugateSet>> fam2{{golden_set()}, {golden_set()}};
  AsymptoticBound b2 = asymptotic_lower_bound(fam2);
  CHECK(b2.certified_lower <= Rat(1, 5));
  CHECK(b2.certified_lower >= parse_rational("0.1999"));

  std::vector<std::vector<ConjugateSet>> monic{
      {make_conjugate_set({Int(-2), Int(0), Int(1)}, true)}};  // x^2 - 2
  AsymptoticBound b3 = asymptotic_lower_bound(monic);
  CHECK(b3.certified_lower == 1);

  CHECK_THROWS_AS(asymptotic_lower_bound({}), std::invalid_argument);
}

TEST_CASE("vanishing_check: explicit factors vanish on {0,1}^2") {
  VanishingReport r = vanishing_check(c5_square(), lattice01_squared());
  CHECK(r.points.size() == 4);
  CHECK(r.vanishes_everywhere);
  for (const PointVerdict& v : r.points) {
    CHECK(v.status == PointVerdict::Status::Vanishes);
    CHECK(v.exact);
  }
  CHECK(r.certificate_product == 0);
}

TEST_CASE("vanishing_check: interval Chebyshev polynomial on {0,1}") {
  AlgebraicLattice L;
  L.coords.resize(1);
  L.coords[0].push_back(make_conjugate_set({Int(0), Int(1)}, true));
  L.coords[0].push_back(make_conjugate_set({Int(-1), Int(1)}, true));
  IntPoly q5 = IntPoly::univariate({Int(0), Int(0), Int(-1), Int(4), Int(-5), Int(2)});
  VanishingReport r = vanishing_check(q5, L);
  CHECK(r.points.size() == 2);
  CHECK(r.vanishes_everywhere);
}

TEST_CASE("vanishing_check: nonvanishing certified by N != 0") {
  AlgebraicLattice L;
  L.coords.push_back({golden_set()});
  IntPoly p = IntPoly::univariate({Int(-1), Int(2)});
  VanishingReport r = vanishing_check(p, L);
  CHECK(r.certificate_product == -1);
  CHECK(!r.vanishes_everywhere);
  for (const PointVerdict& v : r.points)
    CHECK(v.status == PointVerdict::Status::NonZero);
}

TEST_CASE("vanishing verdicts agree for P and P*(x - y) off the diagonal") {
  Rng rng(31);
  AlgebraicLattice L = lattice01_squared();
  IntPoly xy = IntPoly::variable(2, 1) - IntPoly::variable(2, 2);
  for (int iter = 0; iter < 6; ++iter) {
    IntPoly p(2);
    for (int t = 0; t < 5; ++t)
      p.add_term(MultiIndex({static_cast<unsigned>(rng.range(0, 2)),
                             static_cast<unsigned>(rng.range(0, 2))}),
                 Int(rng.range(-3, 3)));
    if (p.is_zero()) continue;
    VanishingReport a = vanishing_check(p, L);
    VanishingReport b = vanishing_check(p * xy, L);
    REQUIRE(a.points.size() == b.points.size());
    for (std::size_t i = 0; i < a.points.size(); ++i) {
      const auto& pa = a.points[i];
      const auto& pb = b.points[i];
      // compare only where the coordinates differ (x - y != 0)
      if (pa.coordinates[0].lo == pa.coordinates[1].lo) continue;
      CHECK(pa.status == pb.status);
    }
  }
}

TEST_CASE("hilbert_fekete_bound: certified exponentiation") {
  Certificate c = hilbert_fekete_bound(Rat(1, 4), 1);
  REQUIRE(c.upper_bound.has_value());
  CHECK(*c.upper_bound >= Rat(1, 2));
  CHECK(*c.upper_bound <= Rat(1, 2) + Rat(Int(1), pow_int(10, 25)));

  Certificate c2 = hilbert_fekete_bound(Rat(1, 9), 1);
  CHECK(*c2.upper_bound >= Rat(1, 3));
  CHECK(*c2.upper_bound <= Rat(1, 3) + Rat(Int(1), pow_int(10, 25)));

  Certificate c3 = hilbert_fekete_bound(Rat(1, 4), 2);
  CHECK(pow_rat(*c3.upper_bound, 3) >= Rat(1, 16));
  CHECK(*c3.upper_bound <= parse_rational("0.3968502630"));

  CHECK_THROWS_AS(hilbert_fekete_bound(Rat(-1), 1), std::invalid_argument);
}

TEST_CASE("projection_bound: combination and the C_n = 1 detection") {
  Region square{Box{{{Rat(0), Rat(1)}, {Rat(0), Rat(1)}}}};
  std::vector<std::optional<Rat>> uppers{parse_rational("0.4232"), std::nullopt};
  ProjectionBound b = projection_bound(square, uppers);
  CHECK(b.upper == parse_rational("0.4232"));
  CHECK(!b.exact_one);

  Region big{Box{{{Rat(0), Rat(4)}, {Rat(0), Rat(4)}}}};
  ProjectionBound b2 = projection_bound(big, {});
  CHECK(b2.exact_one);
  CHECK(b2.upper == 1);

  Region disk{Polydisk{{Rat(2), Rat(3)}}};
  ProjectionBound b3 = projection_bound(disk, {});
  CHECK(b3.exact_one);
}

TEST_CASE("closed_form: polydisk and lemniscate extremals") {
  Region disk{Polydisk{{Rat(1, 2), Rat(1, 3)}}};
  auto cf = closed_form(disk, 4, kTol);
  REQUIRE(cf.has_value());
  CHECK(cf->result.poly == IntPoly::monomial(2, MultiIndex({0, 4}), 1));
  CHECK(cf->result.norm.upper == Rat(1, 81));
  CHECK(cf->result.norm.lower == Rat(1, 81));
  CHECK(cf->tz_exact_base == Rat(1, 3));
  CHECK(cf->root_exponent == 1);

  IntPoly q1(2), q2(2);
  q1.add_term(MultiIndex({2, 0}), 1);
  q1.add_term(MultiIndex({0, 1}), 1);
  q2.add_term(MultiIndex({0, 2}), 1);
  Lemniscate L;
  L.map.components = {q1, q2};
  L.map.degree_l = 2;
  L.radii = {Rat(1, 2), Rat(1, 3)};
  auto cf2 = closed_form(Region(L), 2, kTol);
  REQUIRE(cf2.has_value());
  CHECK(cf2->result.poly == q2);
  CHECK(cf2->result.norm.upper == Rat(1, 3));
  CHECK(cf2->root_exponent == 2);
  CHECK(!closed_form(Region(L), 3, kTol).has_value());  // 3 not a multiple of l

  Region big{Polydisk{{Rat(1), Rat(2)}}};
  auto cf3 = closed_form(big, 5, kTol);
  REQUIRE(cf3.has_value());
  CHECK(cf3->result.poly == IntPoly::constant(2, 1));
  CHECK(cf3->result.norm.upper == 1);

  Region box{Box{{{Rat(0), Rat(1)}}}};
  CHECK(!closed_form(box, 2, kTol).has_value());
}
