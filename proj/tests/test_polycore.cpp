#include <doctest.h>

#include "icheb/chebyshev.hpp"
#include "icheb/poly.hpp"

using namespace icheb;

namespace {

// small deterministic generator for property tests
struct Rng {
  unsigned long long s;
  explicit Rng(unsigned long long seed) : s(seed) {}
  unsigned long next() {
    s = s * 6364136223846793005ull + 1442695040888963407ull;
    return static_cast<unsigned long>(s >> 33);
  }
  long range(long lo, long hi) {  // inclusive
    return lo + static_cast<long>(next() % static_cast<unsigned long>(hi - lo + 1));
  }
};

IntPoly random_poly(Rng& rng, unsigned dim, unsigned maxdeg, unsigned terms) {
  IntPoly p(dim);
  for (unsigned t = 0; t < terms; ++t) {
    std::vector<unsigned> k(dim);
    unsigned budget = maxdeg;
    for (unsigned j = 0; j < dim; ++j) {
      k[j] = static_cast<unsigned>(rng.range(0, budget));
      budget -= k[j];
    }
    p.add_term(MultiIndex(k), Int(rng.range(-5, 5)));
  }
  return p;
}

IntPoly c5_square() {
  IntPoly x = IntPoly::variable(2, 1), y = IntPoly::variable(2, 2);
  IntPoly one = IntPoly::constant(2, 1);
  return x * y * (y - one) * (x - one) * (x - y);
}

IntPoly q5_interval() {  // 2x^5 - 5x^4 + 4x^3 - x^2
  return IntPoly::univariate({Int(0), Int(0), Int(-1), Int(4), Int(-5), Int(2)});
}

}  // namespace

TEST_CASE("order_compare pins the graded-lex rule") {
  MultiIndex a({0, 1}), b({1, 0});
  CHECK(order_compare(a, b) == Ordering::Less);  // (0,1)-(1,0) first entry -1
  CHECK(order_compare(b, a) == Ordering::Greater);
  CHECK(order_compare(MultiIndex({1, 1}), MultiIndex({0, 1})) == Ordering::Greater);
  CHECK(order_compare(MultiIndex({0, 0, 0}), MultiIndex({0, 0, 0})) == Ordering::Equal);
  CHECK_THROWS_AS(order_compare(MultiIndex({1}), MultiIndex({1, 0})),
                  std::invalid_argument);
}

TEST_CASE("order_compare is a total order") {
  Rng rng(7);
  std::vector<MultiIndex> pool;
  for (int i = 0; i < 25; ++i) {
    std::vector<unsigned> k(3);
    for (auto& e : k) e = static_cast<unsigned>(rng.range(0, 4));
    pool.emplace_back(k);
  }
  for (const auto& a : pool)
    for (const auto& b : pool) {
      Ordering ab = order_compare(a, b), ba = order_compare(b, a);
      if (ab == Ordering::Equal) {
        CHECK(a == b);
        CHECK(ba == Ordering::Equal);
      } else {
        CHECK(ab != ba);
      }
      for (const auto& c : pool) {  // transitivity
        if (order_compare(a, b) != Ordering::Greater &&
            order_compare(b, c) != Ordering::Greater)
          CHECK(order_compare(a, c) != Ordering::Greater);
      }
    }
}

TEST_CASE("monomials_upto matches the pinned order and counts") {
  auto m1 = monomials_upto(1, 2);
  REQUIRE(m1.size() == 3);
  CHECK(m1[0] == MultiIndex({0}));
  CHECK(m1[1] == MultiIndex({1}));
  CHECK(m1[2] == MultiIndex({2}));

  auto m2 = monomials_upto(2, 1);
  REQUIRE(m2.size() == 3);
  CHECK(m2[0] == MultiIndex({0, 0}));
  CHECK(m2[1] == MultiIndex({0, 1}));
  CHECK(m2[2] == MultiIndex({1, 0}));

  CHECK(monomials_upto(2, 5).size() == 21);

  for (unsigned d = 1; d <= 4; ++d)
    for (unsigned n = 0; n <= 12; ++n) {
      auto ms = monomials_upto(d, n);
      CHECK(Int(static_cast<unsigned long>(ms.size())) == binomial(d + n, n));
      for (std::size_t i = 1; i < ms.size(); ++i)
        CHECK(order_compare(ms[i - 1], ms[i]) == Ordering::Less);
    }
}

TEST_CASE("arithmetic examples") {
  IntPoly x = IntPoly::variable(1, 1);
  IntPoly one = IntPoly::constant(1, 1);
  CHECK(x * (one - x) == IntPoly::univariate({Int(0), Int(1), Int(-1)}));

  IntPoly built = x.pow(2) * (one - x).pow(2) * (x * Int(2) - one);
  CHECK(built == q5_interval());

  CHECK((x * IntPoly::zero(1)).is_zero());
  CHECK_THROWS_AS(x * IntPoly::variable(2, 1), std::invalid_argument);
}

TEST_CASE("exact evaluation") {
  IntPoly p = IntPoly::univariate({Int(-1), Int(2)});  // 2x-1
  CHECK(p.eval_real({Rat(1, 2)}) == 0);

  IntPoly c5 = c5_square();
  CHECK(c5.eval({QComplex(Rat(1, 2)), QComplex(Rat(1, 2))}).is_zero());

  IntPoly q = IntPoly::univariate({Int(0), Int(1), Int(-1)});  // x - x^2
  CHECK(q.eval_real({Rat(1, 2)}) == Rat(1, 4));
}

TEST_CASE("homogeneous_part filters by total degree") {
  IntPoly p(2);
  p.add_term(MultiIndex({2, 0}), 1);  // z1^2
  p.add_term(MultiIndex({0, 1}), 1);  // z2
  CHECK(p.homogeneous_part(2) == IntPoly::monomial(2, MultiIndex({2, 0}), 1));
  CHECK(p.homogeneous_part(1) == IntPoly::monomial(2, MultiIndex({0, 1}), 1));
  CHECK(q5_interval().homogeneous_part(3) ==
        IntPoly::monomial(1, MultiIndex({3}), 4));
}

TEST_CASE("compose: restriction identity and cancellation") {
  IntPoly x = IntPoly::variable(1, 1);
  IntPoly one_minus_x = IntPoly::constant(1, 1) - x;

  // z2^n under (z1^2+z2, z2^2) -> z2^(2n)
  for (unsigned n : {1u, 3u}) {
    IntPoly zn = IntPoly::monomial(2, MultiIndex({0, n}), 1);
    IntPoly q1(2), q2(2);
    q1.add_term(MultiIndex({2, 0}), 1);
    q1.add_term(MultiIndex({0, 1}), 1);
    q2.add_term(MultiIndex({0, 2}), 1);
    CHECK(zn.compose({q1, q2}) == IntPoly::monomial(2, MultiIndex({0, 2 * n}), 1));
  }

  CHECK(c5_square().compose({x, one_minus_x}) == q5_interval());

  IntPoly f(2);  // 1 - x - y
  f.add_term(MultiIndex({0, 0}), 1);
  f.add_term(MultiIndex({1, 0}), -1);
  f.add_term(MultiIndex({0, 1}), -1);
  CHECK(f.compose({x, one_minus_x}).is_zero());
}

TEST_CASE("exact_divide: factor detection") {
  IntPoly c5 = c5_square();
  IntPoly x = IntPoly::variable(2, 1), y = IntPoly::variable(2, 2);
  IntPoly one = IntPoly::constant(2, 1);

  auto q = c5.exact_divide(x - y);
  REQUIRE(q.has_value());
  CHECK(*q == x * y * (y - one) * (x - one));

  IntPoly f = one - x - y;
  CHECK(!c5.exact_divide(f).has_value());

  IntPoly x1 = IntPoly::variable(1, 1);
  auto q2 = (x1 * x1 - IntPoly::constant(1, 1)).exact_divide(x1 - IntPoly::constant(1, 1));
  REQUIRE(q2.has_value());
  CHECK(*q2 == x1 + IntPoly::constant(1, 1));

  CHECK_THROWS_AS(c5.exact_divide(IntPoly::zero(2)), std::invalid_argument);
}

TEST_CASE("ring axioms and division round-trips on random polynomials") {
  Rng rng(42);
  for (int iter = 0; iter < 25; ++iter) {
    unsigned dim = 1 + iter % 2;
    IntPoly p = random_poly(rng, dim, 4, 4);
    IntPoly q = random_poly(rng, dim, 4, 4);
    IntPoly r = random_poly(rng, dim, 3, 3);
    CHECK((p + q) * r == p * r + q * r);
    if (!p.is_zero() && !r.is_zero())
      CHECK((p * r).degree() == p.degree() + r.degree());

    std::vector<IntPoly> identity;
    for (unsigned j = 1; j <= dim; ++j) identity.push_back(IntPoly::variable(dim, j));
    CHECK(p.compose(identity) == p);

    if (!r.is_zero()) {
      auto back = (p * r).exact_divide(r);
      REQUIRE(back.has_value());
      CHECK(*back == p);
    }

    // eval of compose == compose of evals
    std::vector<IntPoly> maps;
    for (unsigned j = 0; j < dim; ++j) maps.push_back(random_poly(rng, 2, 2, 3));
    std::vector<QComplex> z{QComplex(Rat(1, 3), Rat(1, 7)), QComplex(Rat(-2, 5))};
    std::vector<QComplex> mapped;
    for (const auto& m : maps) mapped.push_back(m.eval(z));
    CHECK(p.compose(maps).eval(z) == p.eval(mapped));
  }
}

TEST_CASE("chebyshev_classical: norms and coefficients") {
  auto t2 = chebyshev_classical(2, Rat(-1), Rat(1));
  QPoly expect(1);
  expect.add_term(MultiIndex({2}), Rat(1));
  expect.add_term(MultiIndex({0}), Rat(-1, 2));
  CHECK(t2.poly == expect);
  CHECK(t2.norm == Rat(1, 2));

  CHECK(chebyshev_classical(3, Rat(0), Rat(1)).norm == Rat(1, 32));
  CHECK(chebyshev_classical(1, Rat(0), Rat(4)).norm == Rat(2));
  CHECK_THROWS_AS(chebyshev_classical(2, Rat(1), Rat(1)), std::invalid_argument);

  // monic: leading coefficient 1 for several instances
  for (unsigned n : {1u, 4u, 7u}) {
    auto t = chebyshev_classical(n, Rat(0), Rat(1));
    CHECK(t.poly.coeff(MultiIndex({n})) == Rat(1));
  }
}
