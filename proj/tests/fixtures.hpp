#pragma once

/* Shared quiver fixtures for the test suites. */

#include <string>
#include <vector>

#include "siltgeo/algebra.hpp"

namespace fixtures {

using siltgeo::Algebra;
using siltgeo::AlgebraPtr;
using siltgeo::Quiver;
using siltgeo::Rat;

/* linear quiver 1 -> 2 -> ... -> n, arrows a1..a_{n-1} */
inline Quiver linear_quiver(std::size_t n) {
  Quiver q;
  for (std::size_t v = 1; v <= n; ++v) q.vertices.push_back(std::to_string(v));
  for (std::size_t v = 1; v < n; ++v)
    q.arrows.push_back({"a" + std::to_string(v), v - 1, v});
  return q;
}

inline AlgebraPtr path_algebra_An(std::size_t n) {
  return Algebra::from_quiver(linear_quiver(n));
}

/* 1 -> 2 -> 3 with the composite arrow path zero */
inline AlgebraPtr a3_radical_square_zero() {
  Quiver q = linear_quiver(3);
  q.relations.push_back({{Rat(1), {0, 1}}});
  return Algebra::from_quiver(q);
}

/* cyclic quiver on three vertices with all length-two paths zero */
inline AlgebraPtr nakayama_cycle3() {
  Quiver q;
  q.vertices = {"1", "2", "3"};
  q.arrows = {{"a", 0, 1}, {"b", 1, 2}, {"c", 2, 0}};
  q.relations.push_back({{Rat(1), {0, 1}}});
  q.relations.push_back({{Rat(1), {1, 2}}});
  q.relations.push_back({{Rat(1), {2, 0}}});
  return Algebra::from_quiver(q);
}

/* two vertices, no arrows */
inline AlgebraPtr semisimple2() {
  Quiver q;
  q.vertices = {"1", "2"};
  return Algebra::from_quiver(q);
}

/* one vertex, one loop x with x^2 = 0 */
inline AlgebraPtr dual_numbers() {
  Quiver q;
  q.vertices = {"1"};
  q.arrows = {{"x", 0, 0}};
  q.relations.push_back({{Rat(1), {0, 0}}});
  return Algebra::from_quiver(q);
}

}  // namespace fixtures
