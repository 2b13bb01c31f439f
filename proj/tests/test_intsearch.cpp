#include <doctest.h>

#include <array>

#include "icheb/intsearch.hpp"

using namespace icheb;

namespace {

const Rat kTol(1, 1000000000);

IntPoly x_minus_x2() { return IntPoly::univariate({Int(0), Int(1), Int(-1)}); }

// Independent oracle for t_Z(2, [0,1]) = 1/4: any P = a0 + a1 x + a2 x^2
// satisfies ||P|| >= max over {0, 1/2, 1} of |P|; enumerate small boxes.
struct ThreePointOracle {
  Rat best{2};
  std::vector<std::array<long, 3>> argmins;
  ThreePointOracle() {
    for (long a0 = -4; a0 <= 4; ++a0)
      for (long a1 = -8; a1 <= 8; ++a1)
        for (long a2 = -8; a2 <= 8; ++a2) {
          if (a0 == 0 && a1 == 0 && a2 == 0) continue;
          Rat v0(std::abs(a0));
          Rat v1 = Rat(a0) + Rat(a1, 2) + Rat(a2, 4);
          if (v1 < 0) v1 = -v1;
          Rat v2(std::abs(a0 + a1 + a2));
          Rat m = std::max(v0, std::max(v1, v2));
          if (m < best) {
            best = m;
            argmins.clear();
          }
          if (m == best) argmins.push_back({a0, a1, a2});
        }
  }
};

}  // namespace

TEST_CASE("coefficient_box: inverse-Vandermonde bounds") {
  Region E{Box{{{Rat(0), Rat(1)}}}};
  auto box = coefficient_box(E, 1, Rat(1));
  REQUIRE(box.size() == 2);
  CHECK(box[0] == 1);
  CHECK(box[1] == 2);

  auto zero = coefficient_box(E, 1, Rat(0));
  CHECK(zero[0] == 0);
  CHECK(zero[1] == 0);

  auto constant = coefficient_box(E, 0, Rat(1, 2));
  REQUIRE(constant.size() == 1);
  CHECK(constant[0] == 0);
}

TEST_CASE("exhaustive: degree 1 on [0,1] certifies norm 1") {
  Region E{Box{{{Rat(0), Rat(1)}}}};
  SearchResult r = exhaustive_search(E, 1, kTol);
  CHECK(r.certified_optimal);
  CHECK(r.norm.lower == 1);
  CHECK(r.norm.upper == 1);
  CHECK(r.poly == IntPoly::variable(1, 1));  // smallest canonical key among ties
}

TEST_CASE("exhaustive: degree 2 on [0,1] certifies 1/4 with witness x - x^2") {
  ThreePointOracle oracle;
  CHECK(oracle.best == Rat(1, 4));
  bool found = false;
  for (const auto& a : oracle.argmins)
    if (a[0] == 0 && a[1] == 1 && a[2] == -1) found = true;
  CHECK(found);

  Region E{Box{{{Rat(0), Rat(1)}}}};
  SearchResult r = exhaustive_search(E, 2, kTol);
  CHECK(r.certified_optimal);
  CHECK(r.poly == x_minus_x2());
  CHECK(r.norm.lower == Rat(1, 4));
  CHECK(r.norm.upper == Rat(1, 4));
}

TEST_CASE("exhaustive: polydisk monomial optimum") {
  Region E{Polydisk{{Rat(1, 2), Rat(1, 3)}}};
  SearchResult r = exhaustive_search(E, 3, kTol);
  CHECK(r.certified_optimal);
  CHECK(r.poly == IntPoly::monomial(2, MultiIndex({0, 3}), 1));
  CHECK(r.norm.upper == Rat(1, 27));
  CHECK(r.norm.lower == Rat(1, 27));
}

TEST_CASE("exhaustive guard rejects large spaces") {
  Region E{Box{{{Rat(0), Rat(1)}, {Rat(0), Rat(1)}}}};
  CHECK_THROWS_AS(exhaustive_search(E, 5, kTol), GuardExceeded);
}

TEST_CASE("lattice search on [0,1] at degree 5 reaches 5^(-5/2)") {
  Region E{Box{{{Rat(0), Rat(1)}}}};
  SearchResult r = lattice_search(E, 5, kTol);
  // upper <= 5^(-5/2) + 1e-9  <=>  (upper - 1e-9)^2 <= 1/3125
  Rat adj = r.norm.upper - kTol;
  CHECK(adj * adj <= Rat(1, 3125));
  // the winner matches the known extremal polynomial x^2 (1-x)^2 (2x-1)
  IntPoly q5 = IntPoly::univariate({Int(0), Int(0), Int(-1), Int(4), Int(-5), Int(2)});
  CHECK((r.poly == q5 || r.poly == -q5));
  CHECK(!r.certified_optimal);
}

TEST_CASE("lattice search injects closed forms on polydisks") {
  Region E{Polydisk{{Rat(1, 2), Rat(1, 3)}}};
  for (unsigned n : {2u, 5u}) {
    SearchResult r = lattice_search(E, n, kTol);
    CHECK(r.poly == IntPoly::monomial(2, MultiIndex({0, n}), 1));
    CHECK(r.norm.upper == pow_rat(Rat(1, 3), n));
  }
}

TEST_CASE("minkowski_construct realizes the determinant bound") {
  Region E{Box{{{Rat(0), Rat(1)}}}};
  FeketeOptions fo;
  fo.grid_density = 65;
  for (unsigned n : {1u, 4u, 8u}) {
    FeketeSet F = fekete_search(E, n, fo);
    REQUIRE(!F.singular);
    SearchResult r = minkowski_construct(F, E, kTol);
    CHECK(!r.poly.is_zero());
    CHECK(r.bound_realized);
    mpf_class target = mpf_class(F.h, kHpBits) *
                       hp_exp(mpf_class(F.log_abs_V / mpf_class(F.h, kHpBits)));
    CHECK(to_hp(r.norm.upper) <= target * mpf_class(1.001, kHpBits));
  }
}

TEST_CASE("degenerate Fekete set is rejected") {
  FeketeSet F;
  F.singular = true;
  Region E{Box{{{Rat(0), Rat(1)}}}};
  CHECK_THROWS_AS(minkowski_construct(F, E, kTol), std::invalid_argument);
}

TEST_CASE("tz_sequence on [0,1]: 1 then 1/4, with powers injected") {
  Region E{Box{{{Rat(0), Rat(1)}}}};
  TzSequence seq = tz_sequence(E, 4, "auto", kTol);
  REQUIRE(seq.per_degree.size() == 4);
  CHECK(seq.per_degree[0].norm.upper == 1);
  CHECK(seq.per_degree[1].norm.upper == Rat(1, 4));
  // n = 4: (x - x^2)^2 gives 1/16; the sequence can only improve on that
  CHECK(seq.per_degree[3].norm.upper <= Rat(1, 16));
  CHECK(seq.running_upper <= seq.root_upper[1]);
  // submultiplicativity via explicit power candidates
  CHECK(seq.per_degree[3].norm.upper <=
        pow_rat(seq.per_degree[1].norm.upper, 2) * (Rat(1) + kTol));
}

TEST_CASE("tz_sequence constant 1 on large regions") {
  Region big{Polydisk{{Rat(2), Rat(3)}}};
  TzSequence seq = tz_sequence(big, 3, "auto", kTol);
  for (const SearchResult& r : seq.per_degree) {
    CHECK(r.norm.upper == 1);
    CHECK(r.poly == IntPoly::constant(2, 1));
  }

  Region interval{Box{{{Rat(0), Rat(4)}}}};
  TzSequence seq2 = tz_sequence(interval, 2, "auto", kTol);
  for (const SearchResult& r : seq2.per_degree) CHECK(r.norm.upper == 1);
}

TEST_CASE("certified monotonicity for nested boxes") {
  Region inner{Box{{{Rat(0), Rat(1, 2)}}}};
  Region outer{Box{{{Rat(0), Rat(1)}}}};
  for (unsigned n : {1u, 2u}) {
    SearchResult ri = exhaustive_search(inner, n, kTol);
    SearchResult ro = exhaustive_search(outer, n, kTol);
    REQUIRE(ri.certified_optimal);
    REQUIRE(ro.certified_optimal);
    CHECK(ri.norm.upper <= ro.norm.upper);
  }
}

TEST_CASE("search results are re-verified enclosures") {
  Region E{Box{{{Rat(0), Rat(1)}}}};
  SearchResult r = lattice_search(E, 3, kTol);
  NormEnclosure again = supnorm_region(r.poly, E, kTol);
  CHECK(again.lower <= r.norm.upper);
  CHECK(r.norm.lower <= again.upper);
}

TEST_CASE("lemniscate sequence: certified at multiples of l, flagged between") {
  IntPoly q1(2), q2(2);
  q1.add_term(MultiIndex({2, 0}), 1);
  q1.add_term(MultiIndex({0, 1}), 1);
  q2.add_term(MultiIndex({0, 2}), 1);
  Lemniscate L;
  L.map.components = {q1, q2};
  L.radii = {Rat(1, 2), Rat(1, 3)};
  Region E{L};

  TzSequence seq = tz_sequence(E, 4, "auto", kTol);
  // degrees 2 and 4 are multiples of l = 2: closed forms, exact norms
  CHECK(seq.per_degree[1].norm.upper == Rat(1, 3));
  CHECK(seq.per_degree[1].norm.upper_certified);
  CHECK(seq.per_degree[1].certified_optimal);
  CHECK(seq.per_degree[3].norm.upper == Rat(1, 9));
  CHECK(seq.per_degree[3].norm.upper_certified);
  // running upper folds only certified entries
  CHECK(seq.running_upper_at % 2 == 0);
  Rat ru2 = seq.running_upper * seq.running_upper;
  CHECK(ru2 >= Rat(1, 3) - Rat(1, 1000000));
}

TEST_CASE("circle L_{1/3}: the search attains t_Z = 1/3 at every degree") {
  // |3z - 1| <= 1/3, where the integer Chebyshev constant equals 1/3 and the
  // Hilbert-Fekete bound is attained
  Lemniscate L;
  L.map.components = {IntPoly::univariate({Int(-1), Int(3)})};
  L.radii = {Rat(1, 3)};
  Region E{L};
  TzSequence seq = tz_sequence(E, 3, "auto", kTol);
  for (unsigned n = 1; n <= 3; ++n) {
    const SearchResult& r = seq.per_degree[n - 1];
    CHECK(r.norm.upper_certified);
    CHECK(r.norm.upper == pow_rat(Rat(1, 3), n));
    CHECK(seq.root_upper[n - 1] >= Rat(1, 3));
  }
  CHECK(seq.running_upper >= Rat(1, 3));
  CHECK(seq.running_upper <= Rat(1, 3) + Rat(Int(1), pow_int(10, 25)));
}

TEST_CASE("Trigub interval reference: uppers stay above 1/(m+2)") {
  // I_1 = [1/5, 1] has t_Z(I_1) >= 1/3; any certified upper obeys
  // upper^(1/n) >= t_Z by submultiplicativity
  Region E{Box{{{Rat(1, 5), Rat(1)}}}};
  TzSequence seq = tz_sequence(E, 3, "auto", kTol);
  for (unsigned n = 1; n <= 3; ++n)
    CHECK(seq.root_upper[n - 1] >= Rat(1, 3));
}

TEST_CASE("square degree-6 candidate: 1-x-y divisibility is reported only") {
  Region square{Box{{{Rat(0), Rat(1)}, {Rat(0), Rat(1)}}}};
  SearchOptions opts;
  SearchResult r = lattice_search(square, 6, Rat(1, 1000000), opts);
  CHECK(!r.poly.is_zero());
  CHECK(r.norm.upper_certified);
  IntPoly f(2);
  f.add_term(MultiIndex({0, 0}), 1);
  f.add_term(MultiIndex({1, 0}), -1);
  f.add_term(MultiIndex({0, 1}), -1);
  bool divisible = r.poly.exact_divide(f).has_value();
  std::string report = "degree-6 square candidate " + poly_to_string(r.poly) +
                       ", norm upper " + decimal_string(r.norm.upper, 10) +
                       (divisible ? ", divisible by 1-x-y" : ", not divisible by 1-x-y");
  MESSAGE(report);
  // the candidate must at least beat the degree-5 value (monotone in n)
  CHECK(r.norm.upper <= parse_rational("0.0178886"));
}
