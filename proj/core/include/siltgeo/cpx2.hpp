#pragma once

#include <optional>
#include <string>
#include <vector>

#include "siltgeo/repmod.hpp"

namespace siltgeo {

/* g-vector / integer class in K0(proj A) */
using GVector = std::vector<long>;

/* A matrix over the algebra: entry(r,c) lies in e_{rows[r]} A e_{cols[c]}
   and represents the map P(cols[c]) -> P(rows[r]) given by left
   multiplication. */
struct AlgMatrix {
  std::vector<std::size_t> rows, cols;
  std::vector<std::vector<RatVec>> entry;  /* [r][c] */

  static AlgMatrix zero(const Algebra& a, std::vector<std::size_t> rows,
                        std::vector<std::size_t> cols);
  bool operator==(const AlgMatrix& o) const = default;
};

AlgMatrix alg_compose(const Algebra& a, const AlgMatrix& second, const AlgMatrix& first);
AlgMatrix alg_add(const AlgMatrix& a, const AlgMatrix& b);
AlgMatrix alg_neg(const AlgMatrix& a);

/* module-level matrix of the map ⊕P(cols) -> ⊕P(rows) */
RatMatrix realize_alg_matrix(const Algebra& a, const AlgMatrix& m);
/* the Nakayama image ⊕I(cols) -> ⊕I(rows) */
RatMatrix realize_alg_matrix_nakayama(const Algebra& a, const AlgMatrix& m);

std::size_t proj_sum_dim(const Algebra& a, const std::vector<std::size_t>& verts);
AModulePtr proj_sum_module(const AlgebraPtr& a, const std::vector<std::size_t>& verts);
AModulePtr inj_sum_module(const AlgebraPtr& a, const std::vector<std::size_t>& verts);

/* A 2-term complex of projectives P(p_minus) -> P(p_zero), always stored
   in reduced (minimal) form: the differential has no invertible entry, so
   no summand (P -> P) survives. */
class TwoTerm {
 public:
  TwoTerm(AlgebraPtr owner, std::vector<std::size_t> p_minus,
          std::vector<std::size_t> p_zero, AlgMatrix diff);
  static TwoTerm projective(const AlgebraPtr& a, std::size_t i);          /* P(i) */
  static TwoTerm shifted_projective(const AlgebraPtr& a, std::size_t i);  /* P(i)[1] */
  static TwoTerm stalk_regular(const AlgebraPtr& a);                      /* A */
  static TwoTerm shifted_regular(const AlgebraPtr& a);                    /* A[1] */
  static TwoTerm zero_complex(const AlgebraPtr& a);
  static TwoTerm direct_sum(const TwoTerm& a, const TwoTerm& b);

  const AlgebraPtr& owner() const { return owner_; }
  const std::vector<std::size_t>& p_minus() const { return p_minus_; }
  const std::vector<std::size_t>& p_zero() const { return p_zero_; }
  const AlgMatrix& diff() const { return diff_; }
  bool is_zero_object() const { return p_minus_.empty() && p_zero_.empty(); }

  GVector g_vector() const;
  /* deterministic total order used for canonical summand sorting */
  std::string canonical_key() const;

 private:
  AlgebraPtr owner_;
  std::vector<std::size_t> p_minus_, p_zero_;
  AlgMatrix diff_;
  void reduce();
};

AModulePtr h0(const TwoTerm& u);
AModulePtr hminus1_nu(const TwoTerm& u);

/* chain map u -> v: components in degrees -1 and 0 */
struct ChainMap {
  AlgMatrix minus, zero;
};

/* g o f for composable chain maps */
ChainMap chain_compose(const Algebra& a, const ChainMap& f, const ChainMap& g);

/* Hom in the homotopy category between 2-term complexes (shift 0): the
   chain-map space with its null-homotopic subspace in chain coordinates. */
struct HomK {
  std::vector<ChainMap> chain_basis;
  Subspace chain_span{0};   /* flattened span of the chain-map space */
  Subspace null_space{0};   /* in coordinates over chain_basis */
  std::size_t class_dim() const { return chain_basis.size() - null_space.dim(); }
  /* representatives of a basis of the quotient (non-pivot positions) */
  std::vector<std::size_t> rep_positions;
};
HomK hom_k0(const TwoTerm& u, const TwoTerm& v);

/* Hom_K(u, v[1]): maps u^{-1} -> v^0 modulo (h d_u + d_v h') */
struct HomK1 {
  std::vector<AlgMatrix> space_basis;  /* full Hom-degree space */
  Subspace boundaries{0};
  std::size_t class_dim() const { return space_basis.size() - boundaries.dim(); }
};
HomK1 hom_k1(const TwoTerm& u, const TwoTerm& v);

std::size_t hom_k_dim(const TwoTerm& u, const TwoTerm& v, int shift);

/* End_K(u) as an algebra: the chain-pair algebra (for minimal complexes the
   null-homotopic ideal is nil, so idempotents split at chain level), plus
   the null subspace */
struct EndK {
  AlgebraPtr chain_algebra;  /* basis <-> homk.chain_basis */
  HomK homk;
};
EndK end_k(const TwoTerm& u);

bool is_presilting(const TwoTerm& u);
bool is_silting(const TwoTerm& u);

std::vector<std::pair<TwoTerm, std::size_t>> indec_summands(const TwoTerm& u);
bool twoterm_indec_isomorphic(const TwoTerm& x, const TwoTerm& y);
bool twoterm_isomorphic(const TwoTerm& x, const TwoTerm& y);
bool is_indec_complex(const TwoTerm& x);

/* deterministic total order on complexes (by degree-0 list, degree -1 list,
   then presentation) */
bool twoterm_less(const TwoTerm& a, const TwoTerm& b);
/* sorted basic list from a summand collection */
std::vector<TwoTerm> basicify(const std::vector<TwoTerm>& parts);

/* d_V = dim of End_K(V)/rad for an indecomposable complex */
std::size_t division_dim(const TwoTerm& v);

/* minimal left add(U)-approximation of x: f and its target, with the
   multiplicity of each addset member used */
struct Approximation {
  TwoTerm target;
  ChainMap map;                        /* x -> target */
  std::vector<std::size_t> mults;      /* aligned with addset */
  std::vector<std::size_t> slot_of;    /* addset index per target slot */
};
Approximation min_left_approx(const TwoTerm& x, const std::vector<TwoTerm>& addset);
Approximation min_right_approx(const TwoTerm& x, const std::vector<TwoTerm>& addset);

/* mapping cone of f: x -> y reduced to 2-term form */
TwoTerm cone_reduced(const TwoTerm& x, const TwoTerm& y, const ChainMap& f);
/* cocone: cone(f)[-1] reduced to 2-term form */
TwoTerm cocone_reduced(const TwoTerm& x, const TwoTerm& y, const ChainMap& f);

enum class MutDir { Left, Right };

/* mutation of a basic silting complex (given by its summand list) at j */
TwoTerm mutate(const std::vector<TwoTerm>& silting, std::size_t j, MutDir dir);
/* the mutation direction forced at j: Left iff the SMC part is a module */
MutDir mutation_direction(const std::vector<TwoTerm>& silting, std::size_t j);

/* per-summand 2-term simple-minded collection datum */
struct SmcPart {
  AModulePtr plus, minus;  /* exactly one nonzero */
  std::size_t d = 1;       /* dim of End/rad of the silting summand */
  DimVector class_vector(std::size_t n) const;  /* [plus] - [minus] */
};
using SmcDatum = std::vector<SmcPart>;
SmcDatum smc_of_silting(const std::vector<TwoTerm>& silting);

/* maximal (Bongartz) completion: u's summands first, the rest sorted
   canonically; certified by Sub H^{-1}(nu S) = Sub H^{-1}(nu u), with a
   bounded mutation search fallback */
std::vector<TwoTerm> bongartz_completion(const AlgebraPtr& a,
                                         const std::vector<TwoTerm>& u,
                                         std::size_t search_cap = 10000);

struct MinimalCompletion {
  std::vector<TwoTerm> summands;  /* u first, then T_j aligned with bongartz */
  /* approx_mult[j - m][i] = multiplicity of u_i in the approximation target
     of the Bongartz summand S_j */
  std::vector<std::vector<std::size_t>> approx_mult;
};
MinimalCompletion minimal_completion(const AlgebraPtr& a,
                                     const std::vector<TwoTerm>& u,
                                     const std::vector<TwoTerm>& bongartz);

/* Hom_D(u, N[shift]) for a module N (shift 0 or 1), with classes
   represented by module matrices out of the realization of u^0 / u^{-1}. */
struct StalkHoms {
  int shift = 0;
  std::size_t src_dim = 0;
  std::size_t mod_dim = 0;
  std::vector<RatMatrix> reps;
  Subspace null_space{0};  /* flattened boundary subspace (shift 1), or zero */
  Subspace rep_span{0};    /* span of flattened reps, reduced mod null */
};
StalkHoms hom_to_module(const TwoTerm& u, const AModule& n, int shift);

}  // namespace siltgeo
