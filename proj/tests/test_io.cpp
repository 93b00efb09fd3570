#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <nlohmann/json.hpp>

#include "fixtures.hpp"
#include "siltgeo/errors.hpp"
#include "siltgeo/io.hpp"

using namespace siltgeo;
using namespace fixtures;

namespace {

const char* kQuiverText = R"(
# the linear quiver on three vertices with one zero relation
[quiver]
vertices = ["1", "2", "3"]
relations = ["a1*a2"]

[[quiver.arrows]]
name = "a1"
from = "1"
to = "2"

[[quiver.arrows]]
name = "a2"
from = "2"
to = "3"
)";

const char* kComplexText = R"(
[[complex]]
p_minus = ["2"]
p_zero = ["1"]
diff = [["a1"]]

[[complex]]
p_minus = []
p_zero = ["3"]
)";

}  // namespace

TEST_CASE("toml subset: tables, arrays of tables, values") {
  TomlDoc doc = parse_toml("x = 3\n[a]\ny = \"s\"\n[[b]]\nz = [1, 2,\n 3]\n[[b]]\nz = []\n");
  REQUIRE(doc.first(""));
  CHECK(doc.first("")->find("x")->num == 3);
  CHECK(doc.first("a")->find("y")->str == "s");
  auto bs = doc.all("b");
  REQUIRE(bs.size() == 2);
  CHECK(bs[0]->find("z")->arr.size() == 3);
  CHECK(bs[1]->find("z")->arr.empty());
  CHECK_THROWS_AS(parse_toml("oops\n"), ParseError);
}

TEST_CASE("quiver file round trip") {
  Quiver q = parse_quiver_toml(kQuiverText);
  CHECK(q.vertices.size() == 3);
  CHECK(q.arrows.size() == 2);
  REQUIRE(q.relations.size() == 1);
  CHECK(q.relations[0].size() == 1);
  CHECK(q.relations[0][0].arrows == std::vector<std::size_t>({0, 1}));
  auto a = Algebra::from_quiver(q);
  CHECK(a->dim() == 5);
}

TEST_CASE("relation expressions with coefficients and signs") {
  Quiver q;
  q.vertices = {"1", "2"};
  q.arrows = {{"a", 0, 1}, {"b", 0, 1}};
  Quiver parsed = parse_quiver_toml(
      "[quiver]\nvertices = [\"1\", \"2\"]\nrelations = [\"a - 1/2 b\"]\n"
      "[[quiver.arrows]]\nname = \"a\"\nfrom = \"1\"\nto = \"2\"\n"
      "[[quiver.arrows]]\nname = \"b\"\nfrom = \"1\"\nto = \"2\"\n");
  REQUIRE(parsed.relations.size() == 1);
  REQUIRE(parsed.relations[0].size() == 2);
  CHECK(parsed.relations[0][0].coef == Rat(1));
  CHECK(parsed.relations[0][1].coef == Rat(-1, 2));
  auto a = Algebra::from_quiver(parsed);
  CHECK(a->dim() == 3);  /* e1, e2, and one surviving arrow class */
}

TEST_CASE("complex file parses into reduced two-term complexes") {
  Quiver q = parse_quiver_toml(kQuiverText);
  auto a = Algebra::from_quiver(q);
  auto cs = parse_complexes_toml(kComplexText, a);
  REQUIRE(cs.size() == 2);
  CHECK(cs[0].g_vector() == GVector({1, -1, 0}));
  CHECK(cs[1].g_vector() == GVector({0, 0, 1}));
  CHECK_THROWS_AS(parse_complexes_toml("[[complex]]\np_minus = [\"1\"]\n"
                                       "p_zero = [\"2\"]\ndiff = [[\"nope\"]]\n",
                                       a),
                  ParseError);
}

TEST_CASE("element expressions") {
  auto a = path_algebra_An(2);
  CHECK(parse_element_expression(*a, "0") == RatVec(3, Rat(0)));
  RatVec e1 = parse_element_expression(*a, "e1");
  CHECK(a->is_idempotent(e1));
  RatVec s = parse_element_expression(*a, "2 a1 - a1");
  CHECK(s == parse_element_expression(*a, "a1"));
}

TEST_CASE("atlas json and dot are deterministic") {
  auto a = path_algebra_An(2);
  SiltingAtlas atlas = SiltingAtlas::enumerate(a);
  Json j1 = atlas_json(atlas), j2 = atlas_json(atlas);
  CHECK(json_to_string(j1) == json_to_string(j2));
  std::string dot = atlas_dot(atlas);
  CHECK(dot.find("digraph") != std::string::npos);
  CHECK(std::count(dot.begin(), dot.end(), '\n') > 10);
}

TEST_CASE("cone json carries both representations") {
  RatCone c = RatCone::from_rays(2, {{Rat(1), Rat(0)}, {Rat(0), Rat(1)}});
  Json j = cone_json(c);
  CHECK(j["rays"].size() == 2);
  CHECK(j["normals"].size() == 2);
  CHECK(j["lineality"].empty());
}

TEST_CASE("svg emitters produce drawings") {
  auto a = path_algebra_An(2);
  SiltingAtlas atlas = SiltingAtlas::enumerate(a);
  GenFan f = gfan(atlas);
  std::string svg = fan_svg(f);
  CHECK(svg.find("<svg") == 0);
  CHECK(svg.find("<line") != std::string::npos);

  RatCone orth = RatCone::from_rays(3, {{Rat(1), Rat(0), Rat(0)},
                                        {Rat(0), Rat(1), Rat(0)},
                                        {Rat(0), Rat(0), Rat(1)}});
  std::string slice = slice_svg(orth, {Rat(1), Rat(1), Rat(1)}, Rat(1));
  CHECK(slice.find("circle") != std::string::npos);
  /* triangle: three edges */
  CHECK(std::count(slice.begin(), slice.end(), '\n') >= 7);
}
