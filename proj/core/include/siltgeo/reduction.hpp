#pragma once

#include <optional>
#include <vector>

#include "siltgeo/cpx2.hpp"
#include "siltgeo/siltfan.hpp"

namespace siltgeo {

/* B-modules are ordinary modules over the reduced algebra. */
using BModule = AModule;
using BModulePtr = AModulePtr;

/* Everything the reduction at U carries: the completions S and T with the
   paper-compatible indexing (U first), the two simple-minded collections,
   the algebra B = End(H0 S)/<e> with its projectives indexed by the
   non-U summands of S, the K0 projection, and the modules M_i. */
struct ReductionContext {
  AlgebraPtr A;
  std::vector<TwoTerm> u;          /* U_1..U_m in input order */
  std::vector<TwoTerm> S;          /* Bongartz completion, u first */
  std::vector<TwoTerm> T;          /* minimal completion, aligned with S */
  std::vector<std::vector<std::size_t>> approx_mult;  /* a_{j,i}, j = m..n-1 */
  SmcDatum smc_S, smc_T;
  std::vector<std::size_t> d;      /* d_{S_j} = dim End/rad, all j */

  EndAlgebra end_h0;               /* End_A(H0 S) with hom back-references */
  std::vector<AModulePtr> h0_parts;
  AModulePtr h0_total;
  std::vector<AModulePtr> hm1_parts;
  AModulePtr hm1_total;
  RatVec idem_e;                   /* e in End(H0 S) coordinates */

  AlgebraPtr B;
  RatMatrix end_to_b;              /* End(H0 S) coords -> B coords */
  std::vector<RatVec> b_lifts;     /* End(H0 S)-representatives of B basis */

  RatMatrix pi;                    /* n x (n-m); pi(theta) = theta * pi */
  std::vector<BModulePtr> M;       /* M_i = Phi(W_i), i < m */

  std::size_t m() const { return u.size(); }
  std::size_t n() const { return S.size(); }
};

/* Builds the full context; throws NotSilting if u is not presilting and
   propagates completion / idempotent / certification errors. */
ReductionContext reduce(const AlgebraPtr& a, const std::vector<TwoTerm>& u);

bool w_u_membership(const ReductionContext& ctx, const AModule& m);

/* Hom_A(H0 S, m) as a right B-module; throws NotInWU. */
BModulePtr phi(const ReductionContext& ctx, const AModule& m);

RatVec pi_map(const ReductionContext& ctx, const RatVec& theta);

BModulePtr m_module(const ReductionContext& ctx, std::size_t i);

/* projective and simple B-modules in the P(k)_B indexing */
BModulePtr b_projective(const ReductionContext& ctx, std::size_t k);
BModulePtr b_simple(const ReductionContext& ctx, std::size_t k);

/* the atlas of silting complexes containing u, mutations only at non-u
   positions; vertices keep u at the front */
struct ConstrainedAtlas {
  std::vector<std::vector<TwoTerm>> vertices;
  std::vector<SmcDatum> smcs;
  bool complete = false;
};
ConstrainedAtlas constrained_atlas(const ReductionContext& ctx, std::size_t cap = 10000);

/* the same atlas filtered out of a complete global atlas: vertices
   containing u, with u moved to the front and the smc permuted along */
ConstrainedAtlas constrained_atlas_from(const std::vector<TwoTerm>& u,
                                        const SiltingAtlas& atlas);

/* A quiver presentation certificate: returned only when products of lifted
   arrows and idempotents span b and the path algebra of the guessed quiver
   has exactly matching dimensions. */
std::optional<Quiver> path_algebra_certificate(const Algebra& b);

}  // namespace siltgeo
