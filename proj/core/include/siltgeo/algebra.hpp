#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include "siltgeo/qlinalg.hpp"

namespace siltgeo {

/* A quiver with rational relations.  Relations are linear combinations of
   parallel paths, each path a composable arrow sequence read left to right
   (p then q traverses p first). */
struct Quiver {
  struct Arrow {
    std::string name;
    std::size_t from = 0, to = 0;
  };
  struct PathTerm {
    Rat coef;
    std::vector<std::size_t> arrows;  /* indices into `arrows`, composable */
  };
  using Relation = std::vector<PathTerm>;

  std::vector<std::string> vertices;
  std::vector<Arrow> arrows;
  std::vector<Relation> relations;

  std::size_t vertex_index(const std::string& label) const;
  std::size_t arrow_index(const std::string& name) const;
};

class Algebra;
using AlgebraPtr = std::shared_ptr<const Algebra>;

/* Element coordinates in the owner's basis. */
using AlgebraElement = RatVec;

/* A finite-dimensional unital associative Q-algebra given by structure
   constants, together with a complete orthogonal set of primitive
   idempotents.  Immutable after construction. */
class Algebra {
 public:
  /* Validates associativity, unitality, and that the idempotent list is
     orthogonal, idempotent and sums to one.  Primitivity is the caller's
     responsibility (verified where the list is produced). */
  Algebra(std::vector<std::string> basis_names,
          std::vector<std::vector<RatVec>> mult_table, RatVec unit,
          std::vector<RatVec> idempotents, std::string name = "",
          bool validate = true);

  /* Path algebra of q modulo its relation ideal.  Basis paths are chosen
     representatives; throws InfiniteDimensional if paths survive beyond
     path_cap, MalformedRelation on inconsistent relations. */
  static AlgebraPtr from_quiver(const Quiver& q, std::size_t path_cap = 12);

  std::size_t dim() const { return dim_; }
  const std::string& name() const { return name_; }
  const std::vector<std::string>& basis_names() const { return basis_names_; }
  const RatVec& unit() const { return unit_; }
  const std::vector<RatVec>& idempotents() const { return idempotents_; }
  std::size_t num_idempotents() const { return idempotents_.size(); }

  RatVec multiply(const RatVec& a, const RatVec& b) const;
  /* matrix of x -> a*x on row-vector coordinates */
  RatMatrix left_mult_matrix(const RatVec& a) const;
  /* matrix of x -> x*a on row-vector coordinates */
  RatMatrix right_mult_matrix(const RatVec& a) const;
  RatVec basis_element(std::size_t i) const;

  bool is_idempotent(const RatVec& a) const;
  /* two-sided inverse if it exists */
  std::optional<RatVec> try_invert(const RatVec& a) const;

  /* basis of the corner e_i A e_j (maps P(j) -> P(i) by left multiplication) */
  const std::vector<RatVec>& corner_basis(std::size_t i, std::size_t j) const;
  const Subspace& corner_subspace(std::size_t i, std::size_t j) const;

  /* A generating set as unital algebra: the idempotents plus lifts of
     rad/rad^2 when that closes up (split basic case), otherwise the whole
     basis.  Intertwining conditions only need to hold on these. */
  const std::vector<RatVec>& generators() const { return generators_; }

  /* Quiver presentation when the algebra was built from one. */
  const Quiver* origin_quiver() const { return origin_ ? &*origin_ : nullptr; }

 private:
  friend struct AlgebraBuilder;
  std::size_t dim_;
  std::string name_;
  std::vector<std::string> basis_names_;
  std::vector<std::vector<RatVec>> mult_;  /* mult_[i][j] = coords of b_i b_j */
  RatVec unit_;
  std::vector<RatVec> idempotents_;
  std::vector<RatVec> generators_;
  std::vector<std::vector<std::vector<RatVec>>> corners_;
  std::vector<std::vector<Subspace>> corner_spaces_;
  std::optional<Quiver> origin_;

  void validate() const;
  void build_corners();
  void build_generators();
};

Subspace jacobson_radical(const Algebra& a);

struct QuotientResult {
  AlgebraPtr algebra;
  RatMatrix projection;  /* dim(a) x dim(quotient), x |-> x * projection */
};

/* Quotient by the two-sided ideal generated by gens.  The quotient carries a
   freshly computed complete orthogonal primitive idempotent list.  Throws
   IdealIsWholeAlgebra if the unit falls into the ideal. */
QuotientResult quotient_by_ideal(const Algebra& a, const std::vector<RatVec>& gens);

/* As above but with a caller-supplied idempotent list for the quotient
   (images of chosen idempotents of a); verified orthogonal/complete and
   primitive. */
QuotientResult quotient_by_ideal_with_idempotents(const Algebra& a,
                                                  const std::vector<RatVec>& gens,
                                                  const std::vector<RatVec>& lifted_idems);

/* Complete orthogonal primitive idempotents, lifted from a/rad(a).
   Requires a/rad(a) split over Q; throws NonSplitSemisimple otherwise. */
std::vector<RatVec> primitive_idempotents(const Algebra& a);

/* True iff a is a division algebra: zero radical and no nontrivial
   idempotent found (the brick criterion applied to endomorphism algebras). */
bool is_division_algebra(const Algebra& a);

/* True iff a/rad(a) is a division algebra (locality; the indecomposability
   criterion for End(M)). */
bool is_local_algebra(const Algebra& a);

/* Semisimple quotient helper: a/I as algebra data without idempotents. */
struct RawQuotient {
  std::vector<std::string> basis_names;
  std::vector<std::vector<RatVec>> mult;
  RatVec unit;
  RatMatrix projection;      /* x |-> x*projection */
  std::vector<RatVec> lifts; /* coset representatives of quotient basis */
};
RawQuotient raw_quotient(const Algebra& a, const Subspace& ideal);

/* Closes the span of gens under two-sided multiplication. */
Subspace ideal_closure(const Algebra& a, const std::vector<RatVec>& gens);

}  // namespace siltgeo
