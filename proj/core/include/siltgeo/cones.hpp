#pragma once

#include <string>
#include <vector>

#include "siltgeo/qlinalg.hpp"

namespace siltgeo {

/* A rational polyhedral cone with both representations kept in a canonical
   form: rays are primitive, reduced modulo the lineality space, and sorted;
   inequalities are the extreme rays of the polar, reduced modulo the span
   equations.  Two cones are equal as sets iff their canonical data agree. */
class RatCone {
 public:
  static RatCone from_rays(std::size_t ambient, const std::vector<RatVec>& rays,
                           const std::vector<RatVec>& lineality = {});
  /* normals may contain opposite pairs; those become span equations */
  static RatCone from_inequalities(std::size_t ambient,
                                   const std::vector<RatVec>& normals);
  static RatCone full_space(std::size_t ambient);
  static RatCone zero_cone(std::size_t ambient);

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const;
  bool is_zero() const { return rays_.empty() && lineality_.empty(); }

  const std::vector<RatVec>& rays() const { return rays_; }
  const std::vector<RatVec>& lineality() const { return lineality_; }
  const std::vector<RatVec>& inequalities() const { return ineqs_; }
  const std::vector<RatVec>& equations() const { return equations_; }
  /* inequalities plus both signs of every equation */
  std::vector<RatVec> normals() const;

  bool contains(const RatVec& p) const;
  /* contains p with every non-implicit inequality strict */
  bool contains_in_relative_interior(const RatVec& p) const;
  RatVec relative_interior_point() const;
  Subspace span() const;
  Subspace lineality_space() const;

  bool operator==(const RatCone& o) const = default;
  std::string key() const;  /* canonical hash string */

 private:
  std::size_t ambient_ = 0;
  std::vector<RatVec> rays_, lineality_, ineqs_, equations_;
  friend RatCone make_canonical(std::size_t, std::vector<RatVec>, std::vector<RatVec>);
};

RatCone intersect(const RatCone& a, const RatCone& b);
bool cone_contains(const RatCone& big, const RatCone& small);
/* exact face test: f equals big cut by the inequalities tight on f */
bool is_face_of(const RatCone& f, const RatCone& big);
/* every face, the cone itself and the minimal face included */
std::vector<RatCone> all_faces(const RatCone& c);

/* scale to a primitive integer vector; direction preserved */
RatVec primitive_scale(const RatVec& v);

struct GenFan {
  std::size_t ambient = 0;
  std::vector<RatCone> cones;

  bool contains_cone(const RatCone& c) const;
  void insert(const RatCone& c);              /* set semantics */
  std::vector<RatCone> maximal_cones() const; /* not contained in another */
};

/* closes a set of cones under faces */
GenFan fan_from_cones(std::size_t ambient, const std::vector<RatCone>& cones);

struct FanCheck {
  bool is_fan = false;
  bool is_complete = false;
  std::string detail;
};
FanCheck fan_check(const GenFan& f);

/* Images under the linear map x -> x * map of exactly the cones whose
   preimage saturates against the support of f.  With require_all set, a
   non-saturated cone raises SaturationViolated. */
GenFan fan_image(const GenFan& f, const RatMatrix& map, bool require_all);

}  // namespace siltgeo
