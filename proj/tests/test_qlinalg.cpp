#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "siltgeo/qlinalg.hpp"

using namespace siltgeo;

namespace {

RatMatrix random_int_matrix(std::mt19937& rng, std::size_t r, std::size_t c, int lo, int hi) {
  std::uniform_int_distribution<int> d(lo, hi);
  RatMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m.at(i, j) = d(rng);
  return m;
}

/* independent rank oracle: Bareiss fraction-free elimination over integers */
std::size_t bareiss_rank(const RatMatrix& m) {
  std::size_t r = m.rows(), c = m.cols();
  std::vector<std::vector<BigInt>> a(r, std::vector<BigInt>(c));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) {
      REQUIRE(denominator(m.at(i, j)) == 1);
      a[i][j] = numerator(m.at(i, j));
    }
  BigInt prev = 1;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < c && rank < r; ++col) {
    std::size_t piv = rank;
    while (piv < r && a[piv][col] == 0) ++piv;
    if (piv == r) continue;
    std::swap(a[piv], a[rank]);
    for (std::size_t i = rank + 1; i < r; ++i) {
      for (std::size_t j = col + 1; j < c; ++j)
        a[i][j] = (a[rank][col] * a[i][j] - a[i][col] * a[rank][j]) / prev;
      a[i][col] = 0;
    }
    prev = a[rank][col];
    ++rank;
  }
  return rank;
}

}  // namespace

TEST_CASE("rref on identity") {
  auto [r, piv] = rref(RatMatrix::identity(2));
  CHECK(r == RatMatrix::identity(2));
  CHECK(piv == std::vector<std::size_t>{0, 1});
}

TEST_CASE("rref rank-1 forced") {
  RatMatrix m(2, 2);
  m.at(0, 0) = 2;
  m.at(0, 1) = 4;
  m.at(1, 0) = 1;
  m.at(1, 1) = 2;
  auto [r, piv] = rref(m);
  RatMatrix want(2, 2);
  want.at(0, 0) = 1;
  want.at(0, 1) = 2;
  CHECK(r == want);
  CHECK(piv == std::vector<std::size_t>{0});
}

TEST_CASE("rref is idempotent and rank agrees with fraction-free oracle") {
  std::mt19937 rng(20240817);
  for (int iter = 0; iter < 40; ++iter) {
    RatMatrix m = random_int_matrix(rng, 5, 7, -4, 4);
    auto [r, piv] = rref(m);
    auto [r2, piv2] = rref(r);
    CHECK(r == r2);
    CHECK(piv == piv2);
    CHECK(piv.size() == bareiss_rank(m));
  }
}

TEST_CASE("kernel basics") {
  CHECK(kernel(RatMatrix::identity(3)).dim() == 0);
  CHECK(kernel(RatMatrix(3, 3)).dim() == 3);

  RatMatrix m(1, 3);
  m.at(0, 0) = 1;
  m.at(0, 1) = 1;
  Subspace k = kernel(m);
  CHECK(k.dim() == 2);
  for (std::size_t i = 0; i < k.dim(); ++i) {
    RatVec v = k.basis().row(i);
    RatVec mv(1);
    for (std::size_t j = 0; j < 3; ++j) mv[0] += m.at(0, j) * v[j];
    CHECK(is_zero(mv));
  }
}

TEST_CASE("rank-nullity on random matrices") {
  std::mt19937 rng(7);
  for (int iter = 0; iter < 30; ++iter) {
    RatMatrix m = random_int_matrix(rng, 4, 6, -3, 3);
    CHECK(kernel(m).dim() + rank(m) == m.cols());
  }
}

TEST_CASE("solve: identity, underdetermined, inconsistent") {
  RatVec b{Rat(3), Rat(-2)};
  auto s = solve(RatMatrix::identity(2), b);
  REQUIRE(s);
  CHECK(s->first == b);

  RatMatrix m(1, 2);
  m.at(0, 0) = 1;
  m.at(0, 1) = 2;
  auto s2 = solve(m, RatVec{Rat(3)});
  REQUIRE(s2);
  CHECK(s2->first == RatVec{Rat(3), Rat(0)});
  CHECK(s2->second.dim() == 1);
  /* multiply back */
  Rat acc = m.at(0, 0) * s2->first[0] + m.at(0, 1) * s2->first[1];
  CHECK(acc == 3);

  RatMatrix m3(2, 1);
  m3.at(0, 0) = 1;
  CHECK(!solve(m3, RatVec{Rat(0), Rat(1)}));
}

TEST_CASE("solve multiply-back on random systems") {
  std::mt19937 rng(99);
  for (int iter = 0; iter < 30; ++iter) {
    RatMatrix m = random_int_matrix(rng, 4, 5, -3, 3);
    RatVec x0(5);
    std::uniform_int_distribution<int> d(-3, 3);
    for (auto& c : x0) c = d(rng);
    RatVec b(4);
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 5; ++j) b[i] += m.at(i, j) * x0[j];
    auto s = solve(m, b);
    REQUIRE(s);
    for (std::size_t i = 0; i < 4; ++i) {
      Rat acc = 0;
      for (std::size_t j = 0; j < 5; ++j) acc += m.at(i, j) * s->first[j];
      CHECK(acc == b[i]);
    }
  }
}

TEST_CASE("subspace canonical form and equality") {
  Subspace a(3, {{Rat(1), Rat(1), Rat(0)}, {Rat(0), Rat(0), Rat(1)}});
  Subspace b(3, {{Rat(2), Rat(2), Rat(2)}, {Rat(0), Rat(0), Rat(-5)}});
  CHECK(a == b);
  CHECK(a.contains(RatVec{Rat(3), Rat(3), Rat(7)}));
  CHECK(!a.contains(RatVec{Rat(1), Rat(0), Rat(0)}));
}

TEST_CASE("sum_and_intersect: equal, complementary, Grassmann identity") {
  Subspace a(3, {{Rat(1), Rat(0), Rat(0)}, {Rat(0), Rat(1), Rat(0)}});
  auto [s, i] = sum_and_intersect(a, a);
  CHECK(s == a);
  CHECK(i == a);

  Subspace xy(3, {{Rat(1), Rat(0), Rat(0)}, {Rat(0), Rat(1), Rat(0)}});
  Subspace z(3, {{Rat(0), Rat(0), Rat(1)}});
  auto [s2, i2] = sum_and_intersect(xy, z);
  CHECK(s2 == Subspace::full(3));
  CHECK(i2.dim() == 0);

  std::mt19937 rng(5);
  for (int iter = 0; iter < 25; ++iter) {
    RatMatrix p = random_int_matrix(rng, 2, 4, -3, 3);
    RatMatrix q = random_int_matrix(rng, 2, 4, -3, 3);
    Subspace sp = row_space(p), sq = row_space(q);
    auto [ss, ii] = sum_and_intersect(sp, sq);
    CHECK(sp.dim() + sq.dim() == ss.dim() + ii.dim());
    CHECK(ss.contains(sp));
    CHECK(ss.contains(sq));
    CHECK(sp.contains(ii));
    CHECK(sq.contains(ii));
  }
}

TEST_CASE("inverse") {
  RatMatrix m(2, 2);
  m.at(0, 0) = 1;
  m.at(0, 1) = 2;
  m.at(1, 0) = 3;
  m.at(1, 1) = 7;
  CHECK(inverse(m) * m == RatMatrix::identity(2));
  CHECK(is_invertible(m));
  RatMatrix s(2, 2);
  s.at(0, 0) = 1;
  CHECK(!is_invertible(s));
}

TEST_CASE("rational string round trip") {
  CHECK(rat_from_string("7/12") == Rat(7, 12));
  CHECK(rat_from_string("-3") == Rat(-3));
  CHECK(rat_to_string(Rat(22, 4)) == "11/2");
  CHECK_THROWS_AS(rat_from_string("x"), std::invalid_argument);
}
