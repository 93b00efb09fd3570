#pragma once

#include <memory>
#include <vector>

#include "siltgeo/algebra.hpp"
#include "siltgeo/qlinalg.hpp"

namespace siltgeo {

class AModule;
using AModulePtr = std::shared_ptr<const AModule>;

/* nonnegative coordinates indexed by the owner's primitive idempotents */
using DimVector = std::vector<long>;

/* A finitely generated right module: one action matrix per algebra basis
   element, acting on row vectors.  Construction verifies the action
   against every structure constant and the unit.  Immutable. */
class AModule {
 public:
  AModule(AlgebraPtr owner, std::vector<RatMatrix> action, bool validate = true);
  static AModulePtr zero(AlgebraPtr owner);
  static AModulePtr regular(AlgebraPtr owner);
  static AModulePtr direct_sum(const AModule& a, const AModule& b);
  static AModulePtr direct_sum(AlgebraPtr owner, const std::vector<AModulePtr>& parts);

  const AlgebraPtr& owner() const { return owner_; }
  std::size_t dim() const { return dim_; }
  /* action of an arbitrary algebra element, x |-> x * act(a) */
  RatMatrix act(const RatVec& a) const;
  const RatMatrix& basis_action(std::size_t k) const { return action_[k]; }
  DimVector dim_vector() const;

 private:
  AlgebraPtr owner_;
  std::size_t dim_;
  std::vector<RatMatrix> action_;
};

/* f(v) = v * matrix, intertwining all actions */
struct ModuleHom {
  AModulePtr src, dst;
  RatMatrix matrix;
};

/* basis of Hom_A(m, n) as matrices in canonical (RREF of flattening) form */
std::vector<RatMatrix> hom_space(const AModule& m, const AModule& n);
std::size_t hom_dim(const AModule& m, const AModule& n);

/* the radical of Hom: the (m,n) block of rad End(m ⊕ n) */
std::vector<RatMatrix> rad_hom(const AModule& m, const AModule& n);

struct EndAlgebra {
  AlgebraPtr algebra;
  std::vector<RatMatrix> hom_basis;  /* basis element k <-> hom_basis[k] */
  AModulePtr module;
};
/* End_A(m) with b_i * b_j acting as "apply b_j, then b_i". */
EndAlgebra endomorphism_algebra(const AModule& m);

/* A submodule/quotient package over a fixed ambient module. */
struct SubQuotient {
  Subspace space;    /* the submodule's subspace, canonical */
  AModulePtr sub;    /* the subspace as a module; basis = space.basis() rows */
  RatMatrix incl;    /* sub -> ambient */
  AModulePtr quot;   /* ambient / sub */
  RatMatrix proj;    /* ambient -> quot */
};

/* closure of generators under the action */
SubQuotient sub_quotient(const AModule& m, const std::vector<RatVec>& generators);
/* as above for an already action-stable subspace (checked) */
SubQuotient sub_quotient_of_subspace(const AModule& m, const Subspace& s);

/* the largest submodule of target generated by gen: sum of all hom images */
SubQuotient trace_submodule(const AModule& gen, const AModule& target);
/* intersection of kernels of all homs m -> cogen */
SubQuotient reject_submodule(const AModule& m, const AModule& cogen);

/* quotient big/small of two nested action-stable subspaces of m */
AModulePtr nested_quotient(const AModule& m, const Subspace& big, const Subspace& small);

bool is_brick(const AModule& m);
bool is_semibrick(const AModule& m);

/* Krull-Schmidt decomposition into pairwise non-isomorphic indecomposables
   with multiplicities; throws NonSplitSemisimple if idempotent splitting
   fails. */
std::vector<std::pair<AModulePtr, std::size_t>> indecompose(const AModule& m);

bool is_indecomposable(const AModule& m);
/* both arguments indecomposable */
bool indec_isomorphic(const AModule& m, const AModule& n);
bool modules_isomorphic(const AModule& m, const AModule& n);

AModulePtr projective_module(const AlgebraPtr& a, std::size_t i);  /* e_i A  */
AModulePtr injective_module(const AlgebraPtr& a, std::size_t i);   /* D(A e_i) */
AModulePtr simple_module(const AlgebraPtr& a, std::size_t i);      /* top of P(i) */

/* matrix of P(from) -> P(to), x |-> elt * x, in the canonical bases used by
   projective_module; elt must lie in e_to A e_from */
RatMatrix projective_map(const Algebra& a, const RatVec& elt, std::size_t from,
                         std::size_t to);
/* the Nakayama image I(from) -> I(to) of the same elt */
RatMatrix injective_map(const Algebra& a, const RatVec& elt, std::size_t from,
                        std::size_t to);

/* Euler pairing <theta, [m]> = sum_i theta_i dim(m e_i) */
Rat euler_pair(const RatVec& theta, const AModule& m);
Rat euler_pair_dimvec(const RatVec& theta, const DimVector& dv);

}  // namespace siltgeo
