#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "siltgeo/cones.hpp"
#include "siltgeo/cpx2.hpp"

namespace siltgeo {

struct AtlasVertex {
  std::vector<TwoTerm> summands;  /* canonical order */
  SmcDatum smc;                   /* aligned with summands */
  std::vector<AModulePtr> h0s, hm1s;  /* per-summand cohomology */
  std::string key;                /* sorted g-vector fingerprint */
};

struct AtlasArrow {
  std::size_t src = 0, dst = 0;
  std::size_t index = 0;  /* mutated position in src */
  AModulePtr label;       /* the brick labelling the left mutation */
  DimVector label_class;
};

/* a basic presilting complex, realized as a summand subset of some vertex */
struct AtlasPresilting {
  std::vector<TwoTerm> summands;
  std::string key;
  std::size_t vertex = 0;                 /* a silting containing it */
  std::vector<std::size_t> positions;     /* inside that vertex */
};

/* The exchange quiver of basic 2-term silting complexes, enumerated by
   left/right mutation from the stalk algebra.  Immutable once built. */
class SiltingAtlas {
 public:
  static SiltingAtlas enumerate(AlgebraPtr a, std::size_t cap = 10000);

  const AlgebraPtr& algebra() const { return algebra_; }
  bool complete() const { return complete_; }
  const std::vector<AtlasVertex>& vertices() const { return vertices_; }
  const std::vector<AtlasArrow>& arrows() const { return arrows_; }
  const std::vector<AtlasPresilting>& presiltings() const { return presiltings_; }

  std::optional<std::size_t> find_vertex(const std::string& key) const;
  /* the vertex that is the maximal completion of the given presilting: all
     summands off the subset carry plus-type smc parts */
  std::optional<std::size_t> bongartz_vertex(const AtlasPresilting& p) const;
  std::optional<std::size_t> bongartz_vertex(const std::vector<TwoTerm>& u) const;

 private:
  AlgebraPtr algebra_;
  std::vector<AtlasVertex> vertices_;
  std::vector<AtlasArrow> arrows_;
  std::vector<AtlasPresilting> presiltings_;
  std::map<std::string, std::size_t> index_;
  bool complete_ = false;
};

std::string silting_key(const std::vector<TwoTerm>& summands);

/* the g-fan: all silting cones C(V') over the enumerated presiltings */
GenFan gfan(const SiltingAtlas& atlas);

RatCone silting_cone(const SiltingAtlas& atlas, const AtlasPresilting& p);

/* the Bongartz completion read off a complete atlas: the unique vertex
   containing u whose other summands all carry plus-type smc parts; ordered
   u first, extras sorted canonically */
std::optional<std::vector<TwoTerm>> bongartz_from_atlas(const SiltingAtlas& atlas,
                                                        const std::vector<TwoTerm>& u);

struct Located {
  std::size_t presilting = 0;  /* index into atlas.presiltings() */
  RatVec coeffs;               /* theta over the containing silting's g-basis */
};
/* the unique presilting with theta in its open cone; empty if the atlas is
   incomplete and no enumerated cone contains theta */
std::optional<Located> cone_locate(const SiltingAtlas& atlas, const RatVec& theta);

/* registry of brick isomorphism classes for exact support bookkeeping */
class BrickRegistry {
 public:
  std::size_t id_of(const AModulePtr& brick);
  const std::vector<AModulePtr>& bricks() const { return bricks_; }

 private:
  std::vector<AModulePtr> bricks_;
};

struct TorsionTriple {
  Subspace t{0};     /* the T_theta part of M, as a submodule subspace */
  Subspace tbar{0};  /* the closed part; f = M/tbar, w = tbar/t */
  AModulePtr t_mod, w_mod, f_mod;
  std::vector<AModulePtr> supp_bricks;   /* sorted by K0 class */
  std::vector<std::size_t> supp_ids;     /* sorted registry ids */
  std::vector<DimVector> supp_classes;   /* their K0 classes */

  bool same_class(const TorsionTriple& o) const {
    return t == o.t && tbar == o.tbar && supp_ids == o.supp_ids;
  }
};

TorsionTriple torsion_triple(const SiltingAtlas& atlas, const RatVec& theta,
                             const AModule& m, BrickRegistry& reg);

/* triple at a relative interior point of C(V'), bypassing location */
TorsionTriple torsion_triple_at(const SiltingAtlas& atlas, std::size_t presilting,
                                const AModule& m, BrickRegistry& reg);

struct MtfClass {
  RatCone closure;
  TorsionTriple data;
};

struct MtfFan {
  GenFan fan;
  std::vector<MtfClass> classes;
  const MtfClass& class_of(const RatVec& theta) const;  /* relint membership */
};

/* The fan of closures of M-TF equivalence classes, computed by grouping the
   g-fan cones by their triple data; certified convex and a complete fan.
   Requires a complete atlas. */
MtfFan mtf_fan(const SiltingAtlas& atlas, const AModule& m, std::size_t threads = 1);

/* the closed cones where t = 0 and tbar = m (the wall of m) */
std::vector<RatCone> wall(const SiltingAtlas& atlas, const AModule& m);

}  // namespace siltgeo
