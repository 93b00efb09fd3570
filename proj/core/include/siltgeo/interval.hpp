#pragma once

#include <map>
#include <optional>
#include <set>
#include <vector>

#include "siltgeo/cones.hpp"
#include "siltgeo/reduction.hpp"
#include "siltgeo/siltfan.hpp"

namespace siltgeo {

/* A facet of D(U) with its unique index, sign, brick label and the signed
   inner normal eps * [L_F]. */
struct FacetDatum {
  RatCone face;
  std::size_t i_F = 0;
  int eps = +1;
  AModulePtr label;
  DimVector label_class;
  RatVec normal;
};

/* The full working state for one interval neighborhood D(U). */
struct IntervalContext {
  ReductionContext red;
  ConstrainedAtlas catlas;            /* siltings containing u */
  bool reduction_complete = false;    /* B brick finite certificate */
  std::optional<SiltingAtlas> a_atlas;  /* full atlas of A, for open tests */
  std::optional<SiltingAtlas> b_atlas;  /* atlas of B, for rho and fans */
  std::vector<AModulePtr> yplus, xminus;  /* the semibrick pair, i < m */

  RatCone dcu{RatCone::zero_cone(0)};
  std::vector<FacetDatum> facets;
  std::vector<RatCone> faces;                       /* all faces, canonical */
  std::vector<std::set<std::size_t>> face_I;        /* I_F per face */

  BrickRegistry reg;
  std::size_t threads = 1;

  std::size_t m() const { return red.m(); }
  std::size_t n() const { return red.n(); }
};

/* Builds the context: reduction, constrained atlas, facet data, face
   lattice, and the two atlases.  The geometry requires the constrained
   atlas to close under the cap (B brick finite); otherwise only the
   semibrick pair, closed membership against the partial facet list and the
   convexity split survive, and dcu/faces stay unset. */
IntervalContext make_interval_context(const AlgebraPtr& a,
                                      const std::vector<TwoTerm>& u,
                                      std::size_t cap = 10000,
                                      bool with_a_atlas = true);

/* the semibricks (Y_i^+, X_i^-) straight from U via the radical formulas */
std::vector<std::pair<AModulePtr, AModulePtr>> semibrick_pair(
    const ReductionContext& red);

struct LambdaSplit {
  RatVec lambda;        /* in C(U) */
  RatVec lambda_prime;  /* in L(U) */
  RatVec coeffs;        /* a_i over the summands of u */
};

/* The facet machinery without the reduction context: everything the labels
   need is the constrained atlas with its smc data, the u summands and
   their division dimensions. */
struct FacetTable {
  RatCone dcu{RatCone::zero_cone(0)};
  std::vector<FacetDatum> facets;
};
FacetTable facet_table(const AlgebraPtr& a, const std::vector<TwoTerm>& u,
                       const std::vector<std::size_t>& d_u,
                       const ConstrainedAtlas& catlas);

/* lambda over a bare facet table */
LambdaSplit lambda_split(const FacetTable& ft, const std::vector<TwoTerm>& u,
                         const std::vector<std::size_t>& d_u, const RatVec& theta);

/* facet table; throws IncompleteReduction when the constrained atlas is cut
   off by the cap */
std::vector<FacetDatum> dcu_inequalities(IntervalContext& ctx);

bool dcu_membership_closed(const IntervalContext& ctx, const RatVec& theta);
bool dcu_membership_open(IntervalContext& ctx, const RatVec& theta);

/* map I -> faces with exactly that index set */
std::map<std::set<std::size_t>, std::vector<std::size_t>> faces_by_I(
    const IntervalContext& ctx);

LambdaSplit lambda_split(const IntervalContext& ctx, const RatVec& theta);

/* rho(xi) in L(U) via |xi(f_xi M_i)| = rho_i d_i; certified against pi */
RatVec rho(IntervalContext& ctx, const RatVec& xi);

/* Sigma_I as pi-images of the I-faces, certified saturated and complete */
GenFan sigma_I(const IntervalContext& ctx, const std::set<std::size_t>& I);

struct SigmaMIResult {
  GenFan fan;
  bool equals_sigma_I = false;
};
SigmaMIResult sigma_MI(IntervalContext& ctx, const std::set<std::size_t>& I);

struct TfClass {
  std::set<std::size_t> I;
  RatVec xi;
};
TfClass tf_classify(const IntervalContext& ctx, const RatVec& theta);

struct ConvexitySplit {
  bool sincere = false;
  std::set<std::size_t> lineality_indices;
};
ConvexitySplit strong_convexity_split(const IntervalContext& ctx);

struct PartialFlags {
  bool partial_plus = false;   /* theta in  ∂_i^+ */
  bool partial_minus = false;  /* theta in  ∂_i^- */
  bool partial = false;        /* theta in  ∂_i  */
  bool link = false;           /* theta in  L(U) */
};
PartialFlags link_and_partial(IntervalContext& ctx, const RatVec& theta,
                              std::size_t i);

}  // namespace siltgeo
