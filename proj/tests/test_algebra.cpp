#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fixtures.hpp"
#include "siltgeo/algebra.hpp"
#include "siltgeo/errors.hpp"

using namespace siltgeo;
using namespace fixtures;

namespace {

/* number of paths in an acyclic quiver, the dimension oracle */
std::size_t path_count(const Quiver& q, std::size_t cap = 32) {
  std::size_t total = q.vertices.size();
  std::vector<std::vector<std::size_t>> frontier;  /* paths as arrow lists */
  for (std::size_t a = 0; a < q.arrows.size(); ++a) frontier.push_back({a});
  std::size_t len = 1;
  while (!frontier.empty() && len <= cap) {
    total += frontier.size();
    std::vector<std::vector<std::size_t>> next;
    for (const auto& p : frontier)
      for (std::size_t a = 0; a < q.arrows.size(); ++a)
        if (q.arrows[p.back()].to == q.arrows[a].from) {
          auto np = p;
          np.push_back(a);
          next.push_back(np);
        }
    frontier = next;
    ++len;
  }
  return total;
}

}  // namespace

TEST_CASE("A4 path algebra: dim 10 with 4 idempotents") {
  auto a = path_algebra_An(4);
  CHECK(a->dim() == 10);
  CHECK(a->dim() == path_count(linear_quiver(4)));
  CHECK(a->num_idempotents() == 4);
  /* sum over corners equals dim */
  std::size_t corner_total = 0;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) corner_total += a->corner_basis(i, j).size();
  CHECK(corner_total == a->dim());
}

TEST_CASE("K(1->2) has dim 3; dual numbers dim 2") {
  CHECK(path_algebra_An(2)->dim() == 3);
  CHECK(dual_numbers()->dim() == 2);
}

TEST_CASE("infinite dimensional detection: loop without relations") {
  Quiver q;
  q.vertices = {"1"};
  q.arrows = {{"x", 0, 0}};
  CHECK_THROWS_AS(Algebra::from_quiver(q, 6), InfiniteDimensional);
}

TEST_CASE("malformed relation: non-parallel terms") {
  Quiver q = linear_quiver(3);
  Quiver::Relation r;
  r.push_back({Rat(1), {0}});     /* a1: 1 -> 2 */
  r.push_back({Rat(-1), {1}});    /* a2: 2 -> 3 */
  q.relations.push_back(r);
  CHECK_THROWS_AS(Algebra::from_quiver(q), MalformedRelation);
}

TEST_CASE("radical: semisimple, acyclic arrow ideal, dual numbers") {
  CHECK(jacobson_radical(*semisimple2()).dim() == 0);

  auto a2 = path_algebra_An(2);
  Subspace rad = jacobson_radical(*a2);
  CHECK(rad.dim() == 1);
  /* the radical of an acyclic bound quiver algebra is the arrow ideal: all
     basis paths of positive length */
  for (std::size_t k = 0; k < a2->dim(); ++k) {
    const std::string& name = a2->basis_names()[k];
    bool is_arrow_path = name[0] != 'e';
    CHECK(rad.contains(a2->basis_element(k)) == is_arrow_path);
  }

  auto d = dual_numbers();
  Subspace radd = jacobson_radical(*d);
  CHECK(radd.dim() == 1);
  CHECK(radd.contains(d->basis_element(1)));

  auto a4 = path_algebra_An(4);
  Subspace rad4 = jacobson_radical(*a4);
  CHECK(rad4.dim() == 6);  /* paths of length >= 1 */
}

TEST_CASE("radical is nilpotent") {
  for (auto a : {path_algebra_An(4), a3_radical_square_zero(), nakayama_cycle3()}) {
    Subspace rad = jacobson_radical(*a);
    /* multiply radical basis vectors until the span dies */
    std::vector<RatVec> cur;
    for (std::size_t i = 0; i < rad.dim(); ++i) cur.push_back(rad.basis().row(i));
    std::size_t steps = 0;
    while (!cur.empty() && steps <= a->dim()) {
      std::vector<RatVec> next;
      for (const auto& x : cur)
        for (std::size_t i = 0; i < rad.dim(); ++i) {
          RatVec y = a->multiply(x, rad.basis().row(i));
          if (!is_zero(y)) next.push_back(y);
        }
      Subspace sp(a->dim(), next);
      cur.clear();
      for (std::size_t i = 0; i < sp.dim(); ++i) cur.push_back(sp.basis().row(i));
      ++steps;
    }
    CHECK(cur.empty());
  }
}

TEST_CASE("quotient by zero ideal is the identity up to relabeling") {
  auto a = path_algebra_An(3);
  auto q = quotient_by_ideal(*a, {});
  CHECK(q.algebra->dim() == a->dim());
  /* structure constants agree after the identity relabeling */
  for (std::size_t i = 0; i < a->dim(); ++i)
    for (std::size_t j = 0; j < a->dim(); ++j)
      CHECK(q.algebra->multiply(q.algebra->basis_element(i), q.algebra->basis_element(j)) ==
            a->multiply(a->basis_element(i), a->basis_element(j)) * q.projection);
}

TEST_CASE("K(1->2) modulo the arrow is Q x Q") {
  auto a = path_algebra_An(2);
  /* the arrow is the unique basis element not named e* */
  RatVec arrow;
  for (std::size_t k = 0; k < a->dim(); ++k)
    if (a->basis_names()[k][0] != 'e') arrow = a->basis_element(k);
  auto q = quotient_by_ideal(*a, {arrow});
  CHECK(q.algebra->dim() == 2);
  CHECK(q.algebra->num_idempotents() == 2);
  CHECK(jacobson_radical(*q.algebra).dim() == 0);
}

TEST_CASE("quotient by the whole algebra throws") {
  auto a = path_algebra_An(2);
  CHECK_THROWS_AS(quotient_by_ideal(*a, {a->unit()}), IdealIsWholeAlgebra);
}

TEST_CASE("primitive idempotents: Q x Q and A4") {
  auto s = semisimple2();
  auto idem = primitive_idempotents(*s);
  CHECK(idem.size() == 2);

  auto a4 = path_algebra_An(4);
  auto idem4 = primitive_idempotents(*a4);
  CHECK(idem4.size() == 4);
  RatVec total(a4->dim());
  for (const auto& e : idem4) {
    CHECK(a4->is_idempotent(e));
    total = total + e;
  }
  CHECK(total == a4->unit());
}

TEST_CASE("division and local detection") {
  CHECK(is_local_algebra(*dual_numbers()));
  CHECK(!is_division_algebra(*dual_numbers()));
  CHECK(!is_local_algebra(*semisimple2()));

  /* 2x2 matrix algebra is semisimple but not a division algebra */
  std::vector<std::string> names{"e11", "e12", "e21", "e22"};
  auto unitv = RatVec{Rat(1), Rat(0), Rat(0), Rat(1)};
  std::vector<std::vector<RatVec>> mult(4, std::vector<RatVec>(4, RatVec(4)));
  auto idx = [](std::size_t i, std::size_t j) { return 2 * i + j; };
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      for (std::size_t k = 0; k < 2; ++k)
        for (std::size_t l = 0; l < 2; ++l) {
          RatVec prod(4);
          if (j == k) prod[idx(i, l)] = 1;
          mult[idx(i, j)][idx(k, l)] = prod;
        }
  RatVec e11(4), e22(4);
  e11[0] = 1;
  e22[3] = 1;
  Algebra m2(names, mult, unitv, {e11, e22});
  CHECK(!is_division_algebra(m2));
  CHECK(jacobson_radical(m2).dim() == 0);
  auto prim = primitive_idempotents(m2);
  CHECK(prim.size() == 2);
}

TEST_CASE("corner dimensions of A4 count paths") {
  auto a = path_algebra_An(4);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j)
      CHECK(a->corner_basis(i, j).size() == (i <= j ? 1u : 0u));
}

TEST_CASE("bound quiver algebras with relations") {
  auto a = a3_radical_square_zero();
  CHECK(a->dim() == 5);  /* e1 e2 e3 a1 a2 */
  auto n = nakayama_cycle3();
  CHECK(n->dim() == 6);
  CHECK(jacobson_radical(*n).dim() == 3);
}
