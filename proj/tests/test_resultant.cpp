#include <doctest.h>

#include "icheb/resultant.hpp"

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

ZVec random_zvec(Rng& rng, long deg) {
  ZVec v;
  for (long i = 0; i <= deg; ++i) v.push_back(Int(rng.range(-6, 6)));
  if (v.back() == 0) v.back() = 1;
  return v;
}

}  // namespace

TEST_CASE("resultant of linear factors") {
  // Res(x - a, x - b) = (x - b)|_{x=a} = a - b
  ZVec A{Int(-3), Int(1)}, B{Int(-7), Int(1)};  // a = 3, b = 7
  CHECK(resultant_int(A, B) == Int(-4));
  CHECK(sylvester_resultant_int(A, B) == Int(-4));
}

TEST_CASE("resultant core value for the N certificate") {
  // Res(5x^2-5x+1, 2x-1) = 5 * (2l1-1)(2l2-1) = -1 by Vieta
  ZVec f{Int(1), Int(-5), Int(5)};
  ZVec p{Int(-1), Int(2)};
  CHECK(resultant_int(f, p) == Int(-1));
  CHECK(sylvester_resultant_int(f, p) == Int(-1));
}

TEST_CASE("subresultant PRS equals the Sylvester-Bareiss oracle") {
  Rng rng(99);
  for (int iter = 0; iter < 200; ++iter) {
    long da = rng.range(0, 6), db = rng.range(0, 6);
    ZVec A = random_zvec(rng, da), B = random_zvec(rng, db);
    CHECK(resultant_int(A, B) == sylvester_resultant_int(A, B));
  }
}

TEST_CASE("resultant detects common roots") {
  // (x-2)(x+1) and (x-2)(x-5) share the root 2
  ZVec A{Int(-2), Int(-1), Int(1)};
  ZVec B{Int(10), Int(-7), Int(1)};
  CHECK(resultant_int(A, B) == 0);
}

TEST_CASE("bivariate resultant: substitution identity") {
  // Res_y(y - c, P(x,y)) = P(x, c)
  IntPoly P(2);
  P.add_term(MultiIndex({1, 1}), 1);  // x*y
  P.add_term(MultiIndex({0, 0}), 1);  // + 1
  // f(y) must have constant (in x) coefficients for this helper; check y - c
  ZVec ymc{Int(-3), Int(1)};  // y - 3
  IntPoly r = resultant_wrt_second(ymc, P);
  IntPoly expect(1);
  expect.add_term(MultiIndex({1}), 3);
  expect.add_term(MultiIndex({0}), 1);  // 3x + 1 = P(x, 3)
  CHECK(r == expect);
}

TEST_CASE("bivariate resultant equals the Sylvester route") {
  Rng rng(123);
  for (int iter = 0; iter < 60; ++iter) {
    ZVec f = random_zvec(rng, rng.range(1, 3));
    IntPoly P(2);
    for (int t = 0; t < 6; ++t) {
      unsigned kx = static_cast<unsigned>(rng.range(0, 3));
      unsigned ky = static_cast<unsigned>(rng.range(0, 3));
      P.add_term(MultiIndex({kx, ky}), Int(rng.range(-4, 4)));
    }
    if (P.is_zero()) continue;
    CHECK(resultant_wrt_second(f, P) == sylvester_resultant_wrt_second(f, P));
  }
}

TEST_CASE("sturm isolation of quadratic roots") {
  ZVec f{Int(1), Int(-5), Int(5)};  // roots (5 +- sqrt5)/10, both in (0,1)
  auto roots = isolate_real_roots(f);
  REQUIRE(roots.size() == 2);
  for (auto& iv : roots) {
    refine_root(f, iv, Rat(1, 1000000));
    CHECK(iv.lo > 0);
    CHECK(iv.hi < 1);
  }
  // (5-sqrt5)/10 ~ 0.27639, (5+sqrt5)/10 ~ 0.72360
  CHECK(roots[0].hi < Rat(3, 10));
  CHECK(roots[1].lo > Rat(7, 10));

  ZVec g{Int(-2), Int(0), Int(1)};  // x^2 - 2
  auto r2 = isolate_real_roots(g);
  REQUIRE(r2.size() == 2);
  CHECK(real_root_count(g) == 2);

  ZVec h{Int(1), Int(0), Int(1)};  // x^2 + 1
  CHECK(isolate_real_roots(h).empty());
  CHECK(real_root_count(h) == 0);

  ZVec lin{Int(-1), Int(3)};  // 3x - 1
  auto r3 = isolate_real_roots(lin);
  REQUIRE(r3.size() == 1);
  CHECK(r3[0].exact);
  CHECK(r3[0].lo == Rat(1, 3));

  CHECK(zis_squarefree(f));
  ZVec sq{Int(1), Int(-2), Int(1)};  // (x-1)^2
  CHECK(!zis_squarefree(sq));
}

TEST_CASE("sturm count in intervals") {
  ZVec f{Int(1), Int(-5), Int(5)};
  SturmChain chain = sturm_chain(f);
  CHECK(count_roots(chain, Rat(0), Rat(1)) == 2);
  CHECK(count_roots(chain, Rat(0), Rat(1, 2)) == 1);
  CHECK(count_roots(chain, Rat(1, 2), Rat(1)) == 1);
  CHECK(count_roots(chain, Rat(2), Rat(3)) == 0);
}
