#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fixtures.hpp"
#include "siltgeo/errors.hpp"
#include "siltgeo/reduction.hpp"

using namespace siltgeo;
using namespace fixtures;

namespace {

RatVec rv(std::initializer_list<int> v) {
  RatVec out;
  for (int c : v) out.push_back(Rat(c));
  return out;
}

DimVector dv(std::initializer_list<long> v) { return DimVector(v); }

TwoTerm one_arrow_complex(const AlgebraPtr& a, std::size_t zero, std::size_t minus) {
  const auto& cb = a->corner_basis(zero, minus);
  REQUIRE(cb.size() == 1);
  AlgMatrix d = AlgMatrix::zero(*a, {zero}, {minus});
  d.entry[0][0] = cb[0];
  return TwoTerm(a, {minus}, {zero}, d);
}

ReductionContext a4_reduction() {
  auto a = path_algebra_An(4);
  std::vector<TwoTerm> u{one_arrow_complex(a, 2, 3), TwoTerm::projective(a, 0)};
  return reduce(a, u);
}

}  // namespace

TEST_CASE("A4 reduction: B is the path algebra of 1 -> 2") {
  ReductionContext ctx = a4_reduction();
  CHECK(ctx.m() == 2);
  CHECK(ctx.n() == 4);
  CHECK(ctx.B->dim() == 3);
  CHECK(ctx.B->num_idempotents() == 2);
  auto cert = path_algebra_certificate(*ctx.B);
  REQUIRE(cert);
  CHECK(cert->vertices.size() == 2);
  REQUIRE(cert->arrows.size() == 1);
  CHECK(cert->arrows[0].from == 0);
  CHECK(cert->arrows[0].to == 1);
}

TEST_CASE("A4 reduction: pi on the paper values") {
  ReductionContext ctx = a4_reduction();
  /* theta = [P(2)] - [P(4)] maps to [P(1)_B] - [P(2)_B] */
  CHECK(pi_map(ctx, rv({0, 1, 0, -1})) == rv({1, -1}));
  /* [S_3] = [P(2)] maps to [P(1)_B] */
  CHECK(pi_map(ctx, rv({0, 1, 0, 0})) == rv({1, 0}));
  /* the kernel is spanned by the g-vectors of U */
  CHECK(pi_map(ctx, rv({0, 0, 1, -1})) == rv({0, 0}));
  CHECK(pi_map(ctx, rv({1, 0, 0, 0})) == rv({0, 0}));
}

TEST_CASE("A4 reduction: Phi on the simples of W_U and on W_2") {
  ReductionContext ctx = a4_reduction();
  /* X_3 = S(2) and X_4 = 3/4 go to the simple B-modules */
  AModulePtr x3 = ctx.smc_S[2].plus;
  AModulePtr x4 = ctx.smc_S[3].plus;
  CHECK(w_u_membership(ctx, *x3));
  CHECK(w_u_membership(ctx, *x4));
  CHECK(modules_isomorphic(*phi(ctx, *x3), *b_simple(ctx, 0)));
  CHECK(modules_isomorphic(*phi(ctx, *x4), *b_simple(ctx, 1)));

  /* W_2 = 2/3/4 = P(2) over A maps to P(1)_B */
  auto a = ctx.A;
  AModulePtr w2 = projective_module(a, 1);
  CHECK(w_u_membership(ctx, *w2));
  CHECK(modules_isomorphic(*phi(ctx, *w2), *b_projective(ctx, 0)));

  /* H0(U_2) = P(1) is not in W_U */
  CHECK(!w_u_membership(ctx, *projective_module(a, 0)));
  CHECK_THROWS_AS(phi(ctx, *projective_module(a, 0)), NotInWU);

  CHECK(w_u_membership(ctx, *AModule::zero(a)));
  CHECK(phi(ctx, *AModule::zero(a))->dim() == 0);
}

TEST_CASE("A4 reduction: the modules M_i") {
  ReductionContext ctx = a4_reduction();
  REQUIRE(ctx.M.size() == 2);
  CHECK(ctx.M[0]->dim_vector() == dv({0, 1}));  /* L(2)_B */
  CHECK(ctx.M[1]->dim_vector() == dv({1, 1}));  /* P(1)_B */
  CHECK(modules_isomorphic(*ctx.M[0], *b_simple(ctx, 1)));
  CHECK(modules_isomorphic(*ctx.M[1], *b_projective(ctx, 0)));
}

TEST_CASE("dual basis identity a d = b d") {
  ReductionContext ctx = a4_reduction();
  for (std::size_t k = 0; k + ctx.m() < ctx.n(); ++k)
    for (std::size_t i = 0; i < ctx.m(); ++i) {
      long a_ji = static_cast<long>(ctx.approx_mult[k][i]);
      long b_ji = ctx.M[i]->dim_vector()[k] / static_cast<long>(ctx.d[ctx.m() + k]);
      CHECK(a_ji * static_cast<long>(ctx.d[i]) ==
            b_ji * static_cast<long>(ctx.d[ctx.m() + k]));
    }
}

TEST_CASE("reduction of a silting complex is the zero algebra") {
  auto a = path_algebra_An(2);
  std::vector<TwoTerm> u{TwoTerm::projective(a, 0), TwoTerm::projective(a, 1)};
  ReductionContext ctx = reduce(a, u);
  CHECK(ctx.B->dim() == 0);
  CHECK(ctx.pi.cols() == 0);
  for (const auto& mi : ctx.M) CHECK(mi->dim() == 0);
}

TEST_CASE("reduction at zero recovers the algebra") {
  auto a = path_algebra_An(2);
  ReductionContext ctx = reduce(a, {});
  CHECK(ctx.B->dim() == a->dim());
  CHECK(ctx.pi == RatMatrix::identity(2));
  auto cert = path_algebra_certificate(*ctx.B);
  REQUIRE(cert);
  CHECK(cert->arrows.size() == 1);
}

TEST_CASE("constrained atlas of the A4 example has five vertices") {
  ReductionContext ctx = a4_reduction();
  ConstrainedAtlas ca = constrained_atlas(ctx);
  CHECK(ca.complete);
  CHECK(ca.vertices.size() == 5);
  for (const auto& v : ca.vertices) {
    REQUIRE(v.size() == 4);
    CHECK(twoterm_indec_isomorphic(v[0], ctx.u[0]));
    CHECK(twoterm_indec_isomorphic(v[1], ctx.u[1]));
  }
}

TEST_CASE("non-presilting input is rejected") {
  auto a = path_algebra_An(2);
  std::vector<TwoTerm> bad{TwoTerm::projective(a, 0),
                           TwoTerm::shifted_projective(a, 0)};
  CHECK_THROWS_AS(reduce(a, bad), NotSilting);
}

TEST_CASE("the constrained atlas transports to the atlas of B under Phi") {
  ReductionContext ctx = a4_reduction();
  SiltingAtlas a_atlas = SiltingAtlas::enumerate(ctx.A);
  ConstrainedAtlas ca = constrained_atlas_from(ctx.u, a_atlas);
  SiltingAtlas b_atlas = SiltingAtlas::enumerate(ctx.B);
  REQUIRE(ca.vertices.size() == b_atlas.vertices().size());

  /* vertexwise: the pi-images of the non-u summands name a B-vertex */
  auto b_key = [&](const std::vector<TwoTerm>& v) {
    std::vector<std::string> ks;
    for (std::size_t j = ctx.m(); j < v.size(); ++j) {
      RatVec g;
      for (long c : v[j].g_vector()) g.push_back(Rat(c));
      RatVec img = pi_map(ctx, g);
      std::string k;
      for (const auto& c : img) k += rat_to_string(c) + ",";
      ks.push_back(k);
    }
    std::sort(ks.begin(), ks.end());
    std::string out;
    for (const auto& k : ks) out += k + "|";
    return out;
  };
  std::set<std::string> b_keys;
  for (const auto& v : b_atlas.vertices()) {
    std::vector<std::string> ks;
    for (const auto& s : v.summands) {
      std::string k;
      for (long c : s.g_vector()) k += rat_to_string(Rat(c)) + ",";
      ks.push_back(k);
    }
    std::sort(ks.begin(), ks.end());
    std::string out;
    for (const auto& k : ks) out += k + "|";
    b_keys.insert(out);
  }
  for (const auto& v : ca.vertices) CHECK(b_keys.count(b_key(v)) == 1);

  /* arrowwise: left-mutation labels at non-u indices map to B-labels
     under Phi */
  for (std::size_t vi = 0; vi < ca.vertices.size(); ++vi) {
    const auto& v = ca.vertices[vi];
    const auto& smc = ca.smcs[vi];
    for (std::size_t j = ctx.m(); j < v.size(); ++j) {
      if (!(smc[j].plus && smc[j].plus->dim() > 0)) continue;
      AModulePtr label = smc[j].plus;
      REQUIRE(w_u_membership(ctx, *label));
      BModulePtr img = phi(ctx, *label);
      /* the image is a brick label of some arrow of the B-atlas */
      bool found = false;
      for (const auto& arr : b_atlas.arrows())
        if (arr.label_class == img->dim_vector() &&
            modules_isomorphic(*arr.label, *img))
          found = true;
      CHECK(found);
    }
  }
}
