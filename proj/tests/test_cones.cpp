#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "siltgeo/cones.hpp"
#include "siltgeo/errors.hpp"

using namespace siltgeo;

namespace {

RatVec rv(std::initializer_list<int> v) {
  RatVec out;
  for (int c : v) out.push_back(Rat(c));
  return out;
}

}  // namespace

TEST_CASE("standard orthant in the plane") {
  RatCone c = RatCone::from_rays(2, {rv({1, 0}), rv({0, 1})});
  CHECK(c.dim() == 2);
  CHECK(c.inequalities().size() == 2);
  RatCone h = RatCone::from_inequalities(2, {rv({1, 0}), rv({0, 1})});
  CHECK(c == h);
}

TEST_CASE("opposite inequalities give lineality") {
  RatCone c = RatCone::from_inequalities(2, {rv({1, 0}), rv({-1, 0})});
  CHECK(c.rays().empty());
  REQUIRE(c.lineality().size() == 1);
  CHECK(c.lineality()[0] == rv({0, 1}));
}

TEST_CASE("double description round trip") {
  std::vector<std::vector<RatVec>> ray_sets = {
      {rv({1, 0, 0}), rv({0, 1, 0}), rv({0, 0, 1})},
      {rv({1, 1, 0}), rv({1, -1, 0}), rv({0, 0, 1}), rv({1, 0, 0})},
      {rv({2, 1, 1}), rv({1, 2, 1}), rv({1, 1, 2}), rv({1, 1, 1})},
  };
  for (const auto& rays : ray_sets) {
    RatCone c = RatCone::from_rays(3, rays);
    RatCone back = RatCone::from_inequalities(3, c.normals());
    CHECK(c == back);
  }
}

TEST_CASE("A4 interval cone: inequalities to extreme rays") {
  /* the five facet normals cut a cone whose extreme rays are the theta_i */
  std::vector<RatVec> normals = {
      rv({0, 0, 1, 0}),   /* (1,+): S(3) */
      rv({0, 0, 0, -1}),  /* (1,-): minus S(4) */
      rv({1, 1, 1, 1}),   /* (2,+) */
      rv({1, 1, 0, 0}),   /* (2,+) */
      rv({1, 0, 0, 0}),   /* (2,+) */
  };
  RatCone d = RatCone::from_inequalities(4, normals);
  CHECK(d.dim() == 4);
  CHECK(d.lineality().empty());
  std::vector<RatVec> expect = {rv({0, 1, 0, 0}), rv({0, 0, 1, 0}),
                                rv({1, -1, 0, 0}), rv({0, 1, 0, -1}),
                                rv({0, 0, 1, -1})};
  std::sort(expect.begin(), expect.end());
  CHECK(d.rays() == expect);

  /* face counts by dimension: 1, 5, 8, 5, 1 */
  std::vector<std::size_t> by_dim(5, 0);
  for (const auto& f : all_faces(d)) ++by_dim[f.dim()];
  CHECK(by_dim == std::vector<std::size_t>({1, 5, 8, 5, 1}));
}

TEST_CASE("face lattice of the full orthant is boolean") {
  RatCone c = RatCone::from_rays(3, {rv({1, 0, 0}), rv({0, 1, 0}), rv({0, 0, 1})});
  CHECK(all_faces(c).size() == 8);

  RatCone half = RatCone::from_inequalities(2, {rv({1, 0})});
  auto faces = all_faces(half);
  CHECK(faces.size() == 2);  /* itself and the y-axis */
}

TEST_CASE("relative interior points are strict") {
  RatCone ray = RatCone::from_rays(2, {rv({1, 2})});
  CHECK(ray.relative_interior_point() == rv({1, 2}));
  RatCone orth = RatCone::from_rays(2, {rv({1, 0}), rv({0, 1})});
  CHECK(orth.contains_in_relative_interior(orth.relative_interior_point()));
  CHECK(!orth.contains_in_relative_interior(rv({1, 0})));
}

TEST_CASE("fan axioms and completeness") {
  std::vector<RatCone> quadrants;
  for (int sx : {1, -1})
    for (int sy : {1, -1})
      quadrants.push_back(RatCone::from_rays(2, {rv({sx, 0}), rv({0, sy})}));
  GenFan f = fan_from_cones(2, quadrants);
  FanCheck ck = fan_check(f);
  CHECK(ck.is_fan);
  CHECK(ck.is_complete);

  GenFan single = fan_from_cones(2, {quadrants[0]});
  FanCheck ck2 = fan_check(single);
  CHECK(ck2.is_fan);
  CHECK(!ck2.is_complete);

  /* overlapping cones are not a fan */
  GenFan bad = fan_from_cones(2, {quadrants[0], RatCone::from_rays(2, {rv({1, 1}), rv({1, -1})})});
  CHECK(!fan_check(bad).is_fan);
}

TEST_CASE("fan image: identity and a projection with saturation") {
  std::vector<RatCone> quadrants;
  for (int sx : {1, -1})
    for (int sy : {1, -1})
      quadrants.push_back(RatCone::from_rays(2, {rv({sx, 0}), rv({0, sy})}));
  GenFan f = fan_from_cones(2, quadrants);

  GenFan same = fan_image(f, RatMatrix::identity(2), true);
  CHECK(same.cones.size() == f.cones.size());

  RatMatrix proj(2, 1);
  proj.at(0, 0) = 1;

  /* the full plane fan has no cones saturated against the projection */
  CHECK(fan_image(f, proj, false).cones.empty());
  CHECK_THROWS_AS(fan_image(f, proj, true), SaturationViolated);

  /* a subfan supported on the x-axis saturates and maps onto the complete
     fan of the line */
  GenFan axis = fan_from_cones(
      2, {RatCone::from_rays(2, {rv({1, 0})}), RatCone::from_rays(2, {rv({-1, 0})})});
  GenFan line = fan_image(axis, proj, true);
  FanCheck ck = fan_check(line);
  CHECK(ck.is_fan);
  CHECK(ck.is_complete);
  CHECK(line.cones.size() == 3);
}

TEST_CASE("containment and face tests") {
  RatCone orth = RatCone::from_rays(3, {rv({1, 0, 0}), rv({0, 1, 0}), rv({0, 0, 1})});
  RatCone edge = RatCone::from_rays(3, {rv({1, 0, 0})});
  RatCone inner = RatCone::from_rays(3, {rv({1, 1, 0})});
  CHECK(cone_contains(orth, edge));
  CHECK(cone_contains(orth, inner));
  CHECK(is_face_of(edge, orth));
  CHECK(!is_face_of(inner, orth));
  CHECK(is_face_of(RatCone::zero_cone(3), orth));
  CHECK(is_face_of(orth, orth));
}

TEST_CASE("zero-dimensional ambient space") {
  RatCone z = RatCone::zero_cone(0);
  CHECK(z.dim() == 0);
  GenFan f = fan_from_cones(0, {z});
  FanCheck ck = fan_check(f);
  CHECK(ck.is_fan);
  CHECK(ck.is_complete);
}
