#pragma once

#include <nlohmann/json_fwd.hpp>
#include <string>
#include <vector>

#include "siltgeo/interval.hpp"

namespace siltgeo {

using Json = nlohmann::ordered_json;

/* ------------------------- TOML subset reader -------------------------
   Just enough structure for the two input schemas: [table] headers,
   [[array-of-table]] headers, and key = string | integer | array values
   (arrays may nest one level and span lines). */
struct TomlValue {
  enum class Kind { Str, Int, Arr };
  Kind kind = Kind::Int;
  std::string str;
  long num = 0;
  std::vector<TomlValue> arr;
};

struct TomlTable {
  std::vector<std::pair<std::string, TomlValue>> entries;
  const TomlValue* find(const std::string& key) const;
};

struct TomlDoc {
  /* dotted header path -> tables in file order; "" is the root */
  std::vector<std::pair<std::string, TomlTable>> tables;
  std::vector<const TomlTable*> all(const std::string& path) const;
  const TomlTable* first(const std::string& path) const;
};

TomlDoc parse_toml(const std::string& text);

/* quiver file: [quiver] vertices, relations; [[quiver.arrows]] name/from/to */
Quiver parse_quiver_toml(const std::string& text);

/* algebra-element expressions: "e1", "a1*a2", "1/2 a - b*c", "0" */
RatVec parse_element_expression(const Algebra& a, const std::string& expr);

/* complexes file: one [[complex]] block per indecomposable summand */
std::vector<TwoTerm> parse_complexes_toml(const std::string& text,
                                          const AlgebraPtr& a);

/* ------------------------------ emitters ------------------------------ */

Json cone_json(const RatCone& c);
Json fan_json(const GenFan& f);
Json atlas_json(const SiltingAtlas& atlas);
std::string atlas_dot(const SiltingAtlas& atlas);

/* the full interval report: facets, faces by (I, dim), fans with equality
   verdicts, the rho sample table and the reduction data */
Json interval_report(IntervalContext& ctx);

/* a 2-d fan rendered directly, rays and shaded maximal cones */
std::string fan_svg(const GenFan& f);

/* wireframe of the slice of a cone by the affine hyperplane c.x = c0,
   projected onto the first two coordinates of the hyperplane */
std::string slice_svg(const RatCone& cone, const RatVec& plane, const Rat& level);

std::string json_to_string(const Json& j);

}  // namespace siltgeo
