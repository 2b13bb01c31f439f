#include <doctest.h>

#include "icheb/lattice.hpp"

using namespace icheb;

namespace {

std::vector<std::vector<Int>> gram_of_basis(const std::vector<std::vector<Int>>& B) {
  std::size_t n = B.size(), m = B[0].size();
  std::vector<std::vector<Int>> G(n, std::vector<Int>(n, Int(0)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < m; ++k) G[i][j] += B[i][k] * B[j][k];
  return G;
}

Int det2(const std::vector<std::vector<Int>>& M) {
  return M[0][0] * M[1][1] - M[0][1] * M[1][0];
}

}  // namespace

TEST_CASE("lll reduces a skewed planar lattice to short vectors") {
  // basis (1, 0), (1000, 1): shortest vectors have squared norm 1
  std::vector<std::vector<Int>> B{{Int(1), Int(0)}, {Int(1000), Int(1)}};
  auto G = gram_of_basis(B);
  GramLLL red = lll_reduce_gram(G, Rat(99, 100));
  CHECK(abs(det2(red.transform)) == 1);  // unimodular
  for (const auto& row : red.transform) {
    Rat q = gram_value(G, row);
    CHECK(q <= Rat(2));  // both reduced vectors short
  }
}

TEST_CASE("lll is a fixed point on already-reduced bases") {
  std::vector<std::vector<Int>> B{{Int(1), Int(0)}, {Int(1), Int(1)}};
  auto G = gram_of_basis(B);
  GramLLL first = lll_reduce_gram(G, Rat(99, 100));
  // Gram of the reduced basis
  std::size_t n = 2;
  std::vector<std::vector<Int>> G2(n, std::vector<Int>(n, Int(0)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Int acc(0);
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
          acc += first.transform[i][a] * G[a][b] * first.transform[j][b];
      G2[i][j] = acc;
    }
  GramLLL second = lll_reduce_gram(G2, Rat(99, 100));
  CHECK(second.transform[0] == std::vector<Int>{Int(1), Int(0)});
  CHECK(second.transform[1] == std::vector<Int>{Int(0), Int(1)});
}

TEST_CASE("lll preserves the lattice determinant") {
  std::vector<std::vector<Int>> B{{Int(12), Int(5)}, {Int(7), Int(3)}};
  auto G = gram_of_basis(B);
  GramLLL red = lll_reduce_gram(G, Rat(99, 100));
  CHECK(abs(det2(red.transform)) == 1);
}

TEST_CASE("enumeration finds exactly the short vectors") {
  // diagonal form 4x^2 + 9y^2
  std::vector<std::vector<Int>> G{{Int(4), Int(0)}, {Int(0), Int(9)}};
  GramLLL red = lll_reduce_gram(G, Rat(99, 100));
  ShortVectors sv = enumerate_short_vectors(G, red, Rat(4), 100000, 100);
  REQUIRE(sv.vectors.size() == 1);  // only +-(1,0), sign-canonicalized
  CHECK(sv.vectors[0].first == Rat(4));
  CHECK(sv.vectors[0].second == std::vector<Int>{Int(1), Int(0)});

  ShortVectors sv2 = enumerate_short_vectors(G, red, Rat(9), 100000, 100);
  REQUIRE(sv2.vectors.size() == 2);
  CHECK(sv2.vectors[0].first == Rat(4));
  CHECK(sv2.vectors[1].first == Rat(9));
  CHECK(sv2.vectors[1].second == std::vector<Int>{Int(0), Int(1)});
}

TEST_CASE("enumeration respects the node budget") {
  std::vector<std::vector<Int>> G{{Int(1), Int(0)}, {Int(0), Int(1)}};
  GramLLL red = lll_reduce_gram(G, Rat(99, 100));
  ShortVectors sv = enumerate_short_vectors(G, red, Rat(10000), 5, 10000);
  CHECK(sv.budget_exhausted);
}

TEST_CASE("gram_value matches the quadratic form") {
  std::vector<std::vector<Int>> G{{Int(2), Int(1)}, {Int(1), Int(3)}};
  CHECK(gram_value(G, {Int(1), Int(-2)}) == Rat(2 - 4 + 12));
}

TEST_CASE("enumeration minimum matches brute force on random forms") {
  unsigned long long seed = 12345;
  auto next = [&]() {
    seed = seed * 6364136223846793005ull + 1442695040888963407ull;
    return static_cast<long>((seed >> 33) % 7) - 3;
  };
  for (int iter = 0; iter < 20; ++iter) {
    // near-diagonal random basis keeps the shortest vector's coefficients
    // small enough for the brute-force box to be exhaustive
    std::vector<std::vector<Int>> B(3, std::vector<Int>(3));
    Int det(0);
    while (det == 0) {
      for (unsigned i = 0; i < 3; ++i)
        for (unsigned j = 0; j < 3; ++j) B[i][j] = Int(i == j ? 5 : 0) + Int(next());
      det = B[0][0] * (B[1][1] * B[2][2] - B[1][2] * B[2][1]) -
            B[0][1] * (B[1][0] * B[2][2] - B[1][2] * B[2][0]) +
            B[0][2] * (B[1][0] * B[2][1] - B[1][1] * B[2][0]);
    }
    auto G = gram_of_basis(B);
    GramLLL red = lll_reduce_gram(G, Rat(99, 100));
    Rat bound = gram_value(G, red.transform[0]);
    for (const auto& row : red.transform) bound = std::min(bound, gram_value(G, row));
    ShortVectors sv = enumerate_short_vectors(G, red, bound, 2000000, 500);
    REQUIRE(!sv.vectors.empty());
    Rat enum_min = sv.vectors[0].first;

    // brute force over a box certainly containing the shortest vector
    Rat brute_min(-1);
    for (long a = -8; a <= 8; ++a)
      for (long b = -8; b <= 8; ++b)
        for (long c = -8; c <= 8; ++c) {
          if (!a && !b && !c) continue;
          Rat q = gram_value(G, {Int(a), Int(b), Int(c)});
          if (brute_min < 0 || q < brute_min) brute_min = q;
        }
    CHECK(enum_min == brute_min);
  }
}

TEST_CASE("lll rejects malformed input") {
  CHECK_THROWS_AS(lll_reduce_gram({}, Rat(99, 100)), std::invalid_argument);
  std::vector<std::vector<Int>> G{{Int(1), Int(0)}, {Int(0), Int(1)}};
  CHECK_THROWS_AS(lll_reduce_gram(G, Rat(2)), std::invalid_argument);
  std::vector<std::vector<Int>> neg{{Int(-1), Int(0)}, {Int(0), Int(1)}};
  CHECK_THROWS_AS(lll_reduce_gram(neg, Rat(99, 100)), std::invalid_argument);
}
