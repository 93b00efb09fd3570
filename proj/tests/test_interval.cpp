#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fixtures.hpp"
#include "siltgeo/errors.hpp"
#include "siltgeo/interval.hpp"

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

IntervalContext& a4_interval() {
  static IntervalContext ctx = [] {
    auto a = path_algebra_An(4);
    std::vector<TwoTerm> u{one_arrow_complex(a, 2, 3), TwoTerm::projective(a, 0)};
    return make_interval_context(a, u);
  }();
  return ctx;
}

}  // namespace

TEST_CASE("semibrick pair of the A4 example") {
  IntervalContext& ctx = a4_interval();
  REQUIRE(ctx.m() == 2);
  CHECK(ctx.yplus[0]->dim_vector() == dv({0, 0, 1, 0}));   /* S(3) */
  CHECK(ctx.xminus[0]->dim_vector() == dv({0, 0, 0, 1}));  /* S(4) */
  CHECK(ctx.yplus[1]->dim_vector() == dv({1, 1, 1, 1}));   /* P(1) */
  CHECK(ctx.xminus[1]->dim() == 0);
  /* consistency with the completions: Y_i^+ = H0(Y_i), X_i^- = H^{-1}(X_i) */
  for (std::size_t i = 0; i < 2; ++i) {
    CHECK(ctx.yplus[i]->dim_vector() == ctx.red.smc_T[i].plus->dim_vector());
    CHECK(ctx.xminus[i]->dim_vector() == ctx.red.smc_S[i].minus->dim_vector());
  }
}

TEST_CASE("semibrick pair of projective and shifted stalks") {
  auto a = path_algebra_An(2);
  {
    ReductionContext red = reduce(a, {TwoTerm::projective(a, 0)});
    auto sb = semibrick_pair(red);
    /* P(1) is a brick: no radical homs to quotient by, Y+ = P(1) itself */
    CHECK(sb[0].first->dim_vector() == dv({1, 1}));
    CHECK(sb[0].second->dim() == 0);
    CHECK(is_brick(*sb[0].first));
  }
  {
    ReductionContext red = reduce(a, {TwoTerm::shifted_projective(a, 0)});
    auto sb = semibrick_pair(red);
    CHECK(sb[0].first->dim() == 0);
    CHECK(sb[0].second->dim_vector() == dv({1, 0}));  /* socle of I(1) = S(1) */
  }
}

TEST_CASE("A4 facet table matches the worked example") {
  IntervalContext& ctx = a4_interval();
  REQUIRE(ctx.facets.size() == 5);
  std::vector<std::tuple<std::size_t, int, DimVector>> got, want;
  for (const auto& f : ctx.facets) got.emplace_back(f.i_F, f.eps, f.label_class);
  want = {{0, +1, dv({0, 0, 1, 0})},
          {0, -1, dv({0, 0, 0, 1})},
          {1, +1, dv({1, 1, 1, 1})},
          {1, +1, dv({1, 1, 0, 0})},
          {1, +1, dv({1, 0, 0, 0})}};
  std::sort(got.begin(), got.end());
  std::sort(want.begin(), want.end());
  CHECK(got == want);
  for (const auto& f : ctx.facets) CHECK(is_brick(*f.label));

  /* extreme rays of D(U) */
  std::vector<RatVec> rays = {rv({0, 1, 0, 0}), rv({0, 0, 1, 0}), rv({1, -1, 0, 0}),
                              rv({0, 1, 0, -1}), rv({0, 0, 1, -1})};
  std::sort(rays.begin(), rays.end());
  CHECK(ctx.dcu.rays() == rays);
  /* pairing identity: [U_i'](L_F) = eps delta d */
  for (const auto& f : ctx.facets)
    for (std::size_t i2 = 0; i2 < 2; ++i2) {
      RatVec g;
      for (long c : ctx.red.u[i2].g_vector()) g.push_back(Rat(c));
      Rat val = euler_pair_dimvec(g, f.label_class);
      Rat expect = (i2 == f.i_F) ? Rat(f.eps) * Rat(long(ctx.red.d[f.i_F])) : Rat(0);
      CHECK(val == expect);
    }
}

TEST_CASE("membership in D(U)") {
  IntervalContext& ctx = a4_interval();
  /* theta = [U1] + [U2] is interior */
  RatVec inside = rv({1, 0, 1, -1});
  CHECK(dcu_membership_closed(ctx, inside));
  CHECK(dcu_membership_open(ctx, inside));
  /* [P(2)] is on the boundary: closed yes, open no */
  CHECK(dcu_membership_closed(ctx, rv({0, 1, 0, 0})));
  CHECK(!dcu_membership_open(ctx, rv({0, 1, 0, 0})));
  /* -[P(1)] violates the (2,+,(1,1,1,1)) label */
  CHECK(!dcu_membership_closed(ctx, rv({-1, 0, 0, 0})));
}

TEST_CASE("A4 face census by (I, dim)") {
  IntervalContext& ctx = a4_interval();
  auto by_I = faces_by_I(ctx);
  auto census = [&](const std::set<std::size_t>& I) {
    std::map<std::size_t, std::size_t> by_dim;
    auto it = by_I.find(I);
    if (it != by_I.end())
      for (auto f : it->second) ++by_dim[ctx.faces[f].dim()];
    return by_dim;
  };
  CHECK(census({}) == std::map<std::size_t, std::size_t>({{4, 1}}));
  CHECK(census({0}) == std::map<std::size_t, std::size_t>({{2, 1}, {3, 2}}));
  CHECK(census({1}) == std::map<std::size_t, std::size_t>({{1, 1}, {2, 3}, {3, 3}}));
  CHECK(census({0, 1}) ==
        std::map<std::size_t, std::size_t>({{0, 1}, {1, 4}, {2, 4}}));
}

TEST_CASE("lambda splitting") {
  IntervalContext& ctx = a4_interval();
  /* theta in C(U): lambda = theta */
  RatVec theta = rv({2, 0, 3, -3});
  LambdaSplit ls = lambda_split(ctx, theta);
  CHECK(ls.lambda == theta);
  CHECK(is_zero(ls.lambda_prime));

  /* theta = [P(1)] + [P(2)]: lambda = [P(1)], lambda' = [P(2)] */
  LambdaSplit ls2 = lambda_split(ctx, rv({1, 1, 0, 0}));
  CHECK(ls2.lambda == rv({1, 0, 0, 0}));
  CHECK(ls2.lambda_prime == rv({0, 1, 0, 0}));

  /* integrality at integer points */
  LambdaSplit ls3 = lambda_split(ctx, rv({1, 2, 1, -1}));
  for (const auto& c : ls3.coeffs) CHECK(denominator(c) == 1);

  CHECK_THROWS_AS(lambda_split(ctx, rv({-1, 0, 0, 0})), NotInDU);
}

TEST_CASE("rho on the paper table") {
  IntervalContext& ctx = a4_interval();
  CHECK(rho(ctx, rv({1, 0})) == rv({0, 1, 0, 0}));    /* [P(2)] */
  CHECK(rho(ctx, rv({0, 1})) == rv({0, 0, 1, 0}));    /* [P(3)] */
  CHECK(rho(ctx, rv({-1, 0})) == rv({1, -1, 0, 0}));  /* [P(1)] - [P(2)] */
  CHECK(rho(ctx, rv({1, -1})) == rv({0, 1, 0, -1}));  /* [P(2)] - [P(4)] */
}

TEST_CASE("sigma_I fans and the M-TF comparison") {
  IntervalContext& ctx = a4_interval();
  std::vector<std::set<std::size_t>> subsets{{}, {0}, {1}, {0, 1}};
  std::map<std::set<std::size_t>, std::size_t> expected_max{
      {{}, 1}, {{0}, 2}, {{1}, 3}, {{0, 1}, 4}};
  for (const auto& I : subsets) {
    GenFan si = sigma_I(ctx, I);
    CHECK(fan_check(si).is_complete);
    CHECK(si.maximal_cones().size() == expected_max[I]);
    SigmaMIResult mi = sigma_MI(ctx, I);
    CHECK(mi.equals_sigma_I);
  }
  /* sigma_{0} has the single ray sigma_13 = [P(1)_B]R axis */
  GenFan s0 = sigma_I(ctx, {0});
  bool has_line = false;
  for (const auto& c : s0.cones)
    if (c.dim() == 1 && c.lineality().size() == 1) has_line = true;
  CHECK(has_line);
}

TEST_CASE("tf classification") {
  IntervalContext& ctx = a4_interval();
  /* interior of C(U): full I, xi = 0 */
  TfClass c1 = tf_classify(ctx, rv({1, 0, 1, -1}));
  CHECK(c1.I == std::set<std::size_t>({0, 1}));
  CHECK(is_zero(c1.xi));
  /* theta = [P(2)] = [S_3]: empty I, xi = [P(1)_B] */
  TfClass c2 = tf_classify(ctx, rv({0, 1, 0, 0}));
  CHECK(c2.I.empty());
  CHECK(c2.xi == rv({1, 0}));
  /* theta = [U_1] + [P(2)]: I = {0}, xi = [P(1)_B] */
  TfClass c3 = tf_classify(ctx, rv({0, 1, 1, -1}));
  CHECK(c3.I == std::set<std::size_t>({0}));
  CHECK(c3.xi == rv({1, 0}));
}

TEST_CASE("strong convexity split") {
  IntervalContext& ctx = a4_interval();
  ConvexitySplit cs = strong_convexity_split(ctx);
  CHECK(cs.sincere);
  CHECK(cs.lineality_indices.empty());

  auto a2 = path_algebra_An(2);
  IntervalContext c1 = make_interval_context(a2, {TwoTerm::projective(a2, 0)});
  ConvexitySplit s1 = strong_convexity_split(c1);
  CHECK(s1.sincere);

  IntervalContext c2 = make_interval_context(a2, {TwoTerm::projective(a2, 1)});
  ConvexitySplit s2 = strong_convexity_split(c2);
  CHECK(!s2.sincere);
  CHECK(s2.lineality_indices == std::set<std::size_t>({0}));
}

TEST_CASE("partial boundary flags") {
  IntervalContext& ctx = a4_interval();
  /* interior of C(U): all flags false */
  PartialFlags f0 = link_and_partial(ctx, rv({1, 0, 1, -1}), 0);
  CHECK(!f0.partial);
  CHECK(!f0.link);

  /* a relative interior point of F_134 = cone(theta_1, theta_3, theta_4):
     (0,1,0,0)+(1,-1,0,0)+(0,1,0,-1) = (1,1,0,-1) */
  RatVec t134 = rv({1, 1, 0, -1});
  PartialFlags f1 = link_and_partial(ctx, t134, 0);
  CHECK(f1.partial_plus);
  CHECK(!f1.partial_minus);

  /* C(U/U_i) is inside partial_i: [U_2] for i = 0 */
  PartialFlags f2 = link_and_partial(ctx, rv({1, 0, 0, 0}), 0);
  CHECK(f2.partial);

  /* link points have vanishing lambda */
  PartialFlags f3 = link_and_partial(ctx, rv({0, 1, 0, 0}), 0);
  CHECK(f3.link);
}

TEST_CASE("degenerate inputs: a full silting complex and the zero complex") {
  auto a = path_algebra_An(2);
  /* u = the stalk algebra: D(A) is the nonnegative orthant with the simple
     modules as labels, all signs positive */
  std::vector<TwoTerm> full{TwoTerm::projective(a, 0), TwoTerm::projective(a, 1)};
  IntervalContext ctx = make_interval_context(a, full);
  CHECK(ctx.red.B->dim() == 0);
  REQUIRE(ctx.reduction_complete);
  CHECK(ctx.dcu == RatCone::from_inequalities(2, {rv({1, 0}), rv({0, 1})}));
  for (const auto& f : ctx.facets) CHECK(f.eps == +1);
  CHECK(ctx.facets.size() == 2);
  /* K0(proj B) is zero dimensional; the fans live there */
  GenFan s = sigma_I(ctx, {0, 1});
  CHECK(s.ambient == 0);
  CHECK(fan_check(s).is_complete);
  SigmaMIResult mi = sigma_MI(ctx, {0, 1});
  CHECK(mi.equals_sigma_I);
  TfClass tc = tf_classify(ctx, rv({1, 1}));
  CHECK(tc.I == std::set<std::size_t>({0, 1}));
  CHECK(tc.xi.empty());

  /* u = 0: D(U) is everything and lambda vanishes */
  IntervalContext zero = make_interval_context(a, {});
  REQUIRE(zero.reduction_complete);
  CHECK(zero.facets.empty());
  CHECK(dcu_membership_closed(zero, rv({-5, 7})));
  LambdaSplit ls = lambda_split(zero, rv({-5, 7}));
  CHECK(is_zero(ls.lambda));
  CHECK(ls.lambda_prime == rv({-5, 7}));
  GenFan sz = sigma_I(zero, {});
  CHECK(sz.ambient == 2);
  CHECK(fan_check(sz).is_complete);
}
