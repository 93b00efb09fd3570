#include "siltgeo/verify.hpp"

#include <functional>
#include <nlohmann/json.hpp>
#include <random>
#include <set>
#include <sstream>

#include "siltgeo/errors.hpp"
#include "siltgeo/io.hpp"

namespace siltgeo {

namespace {

AlgebraPtr linear_algebra(std::size_t n) {
  Quiver q;
  for (std::size_t v = 1; v <= n; ++v) q.vertices.push_back(std::to_string(v));
  for (std::size_t v = 1; v < n; ++v)
    q.arrows.push_back({"a" + std::to_string(v), v - 1, v});
  return Algebra::from_quiver(q);
}

TwoTerm one_arrow_complex(const AlgebraPtr& a, std::size_t zero, std::size_t minus) {
  const auto& cb = a->corner_basis(zero, minus);
  if (cb.size() != 1) throw Error("verify: expected a one-dimensional corner");
  AlgMatrix d = AlgMatrix::zero(*a, {zero}, {minus});
  d.entry[0][0] = cb[0];
  return TwoTerm(a, {minus}, {zero}, d);
}

DimVector dv(std::initializer_list<long> v) { return DimVector(v); }

RatVec rv(std::initializer_list<int> v) {
  RatVec out;
  for (int c : v) out.push_back(Rat(c));
  return out;
}

/* ------------------------- frozen expectations ------------------------ */

/* pentagon labels: the long path and the short path from the stalk algebra
   to its shift */
const std::vector<DimVector> kPentagonLong{{0, 1}, {1, 1}, {1, 0}};
const std::vector<DimVector> kPentagonShort{{1, 0}, {0, 1}};

/* the facet table of the standard example: (index, sign, label class) */
struct FacetGold {
  std::size_t i;
  int eps;
  DimVector cls;
};
const std::vector<FacetGold> kFacets{{0, +1, {0, 0, 1, 0}},
                                     {0, -1, {0, 0, 0, 1}},
                                     {1, +1, {1, 1, 1, 1}},
                                     {1, +1, {1, 1, 0, 0}},
                                     {1, +1, {1, 0, 0, 0}}};

const std::vector<std::vector<int>> kExtremeRays{
    {0, 1, 0, 0}, {0, 0, 1, 0}, {1, -1, 0, 0}, {0, 1, 0, -1}, {0, 0, 1, -1}};

/* smc tables: sign (+1 module part, -1 shifted part) and dimension vector */
struct SmcGold {
  int sign;
  DimVector cls;
};
const std::vector<SmcGold> kSmcS{{-1, {0, 0, 0, 1}},
                                 {+1, {1, 0, 0, 0}},
                                 {+1, {0, 1, 0, 0}},
                                 {+1, {0, 0, 1, 1}}};
const std::vector<SmcGold> kSmcT{{+1, {0, 0, 1, 0}},
                                 {+1, {1, 1, 1, 1}},
                                 {-1, {0, 1, 0, 0}},
                                 {-1, {0, 0, 1, 1}}};

/* face census: subsets of {1,2} -> counts per dimension */
const std::vector<std::pair<std::vector<int>, std::vector<std::pair<int, int>>>>
    kFaceCensus{{{}, {{4, 1}}},
                {{1}, {{2, 1}, {3, 2}}},
                {{2}, {{1, 1}, {2, 3}, {3, 3}}},
                {{1, 2}, {{0, 1}, {1, 4}, {2, 4}}}};

/* rho table rows: xi and the expected value */
const std::vector<std::pair<std::vector<int>, std::vector<int>>> kRho{
    {{1, 0}, {0, 1, 0, 0}},
    {{0, 1}, {0, 0, 1, 0}},
    {{-1, 0}, {1, -1, 0, 0}},
    {{1, -1}, {0, 1, 0, -1}}};

}  // namespace

VerifyResult verify_paper() {
  VerifyResult out;
  std::ostringstream report;
  auto check = [&](const std::string& name, bool pass, const std::string& detail) {
    out.checks.push_back({name, pass, detail});
    report << (pass ? "ok   " : "FAIL ") << name;
    if (!pass && !detail.empty()) report << ": " << detail;
    report << "\n";
  };

  /* ------------------------------ pentagon ---------------------------- */
  try {
    AlgebraPtr a2 = linear_algebra(2);
    SiltingAtlas atlas = SiltingAtlas::enumerate(a2);
    check("pentagon.count", atlas.vertices().size() == 5 && atlas.arrows().size() == 5,
          "expected 5 vertices and 5 arrows");
    std::vector<TwoTerm> start{TwoTerm::projective(a2, 0), TwoTerm::projective(a2, 1)};
    std::vector<TwoTerm> end{TwoTerm::shifted_projective(a2, 0),
                             TwoTerm::shifted_projective(a2, 1)};
    auto src = atlas.find_vertex(silting_key(start));
    auto snk = atlas.find_vertex(silting_key(end));
    bool labels_ok = false;
    if (src && snk) {
      std::vector<std::vector<DimVector>> paths;
      std::function<void(std::size_t, std::vector<DimVector>)> walk =
          [&](std::size_t v, std::vector<DimVector> acc) {
            if (v == *snk) {
              paths.push_back(acc);
              return;
            }
            for (const auto& arr : atlas.arrows())
              if (arr.src == v) {
                auto acc2 = acc;
                acc2.push_back(arr.label_class);
                walk(arr.dst, acc2);
              }
          };
      walk(*src, {});
      labels_ok = paths.size() == 2 &&
                  ((paths[0] == kPentagonLong && paths[1] == kPentagonShort) ||
                   (paths[1] == kPentagonLong && paths[0] == kPentagonShort));
    }
    check("pentagon.labels", labels_ok, "brick labels differ from the table");
  } catch (const std::exception& e) {
    check("pentagon", false, e.what());
  }

  /* ------------------------- the main example ------------------------- */
  try {
    AlgebraPtr a4 = linear_algebra(4);
    std::vector<TwoTerm> u{one_arrow_complex(a4, 2, 3), TwoTerm::projective(a4, 0)};
    IntervalContext ctx = make_interval_context(a4, u);

    /* reduction */
    {
      bool ok = ctx.red.B->dim() == 3 && ctx.red.B->num_idempotents() == 2;
      auto cert = path_algebra_certificate(*ctx.red.B);
      ok = ok && cert && cert->vertices.size() == 2 && cert->arrows.size() == 1 &&
           cert->arrows[0].from == 0 && cert->arrows[0].to == 1;
      check("reduction.B", ok, "B is not the expected path algebra");
      bool mod_ok = ctx.red.M.size() == 2 &&
                    ctx.red.M[0]->dim_vector() == dv({0, 1}) &&
                    ctx.red.M[1]->dim_vector() == dv({1, 1}) &&
                    modules_isomorphic(*ctx.red.M[0], *b_simple(ctx.red, 1)) &&
                    modules_isomorphic(*ctx.red.M[1], *b_projective(ctx.red, 0));
      check("reduction.M", mod_ok, "M_1, M_2 differ from the table");
    }

    /* smc tables */
    {
      auto match = [&](const SmcDatum& got, const std::vector<SmcGold>& want) {
        if (got.size() != want.size()) return false;
        for (std::size_t j = 0; j < want.size(); ++j) {
          const AModulePtr& part = want[j].sign > 0 ? got[j].plus : got[j].minus;
          const AModulePtr& other = want[j].sign > 0 ? got[j].minus : got[j].plus;
          if (!part || part->dim() == 0) return false;
          if (other && other->dim() != 0) return false;
          if (part->dim_vector() != want[j].cls) return false;
        }
        return true;
      };
      check("smc.S", match(ctx.red.smc_S, kSmcS), "SH of the maximal completion");
      check("smc.T", match(ctx.red.smc_T, kSmcT), "SH of the minimal completion");
    }

    /* facet table and extreme rays */
    {
      std::vector<std::tuple<std::size_t, int, DimVector>> got, want;
      for (const auto& f : ctx.facets) got.emplace_back(f.i_F, f.eps, f.label_class);
      for (const auto& f : kFacets) want.emplace_back(f.i, f.eps, f.cls);
      std::sort(got.begin(), got.end());
      std::sort(want.begin(), want.end());
      check("facets.table", got == want, "facet table differs");
      std::vector<RatVec> rays;
      for (const auto& r : kExtremeRays) {
        RatVec v;
        for (int c : r) v.push_back(Rat(c));
        rays.push_back(v);
      }
      std::sort(rays.begin(), rays.end());
      check("facets.rays", ctx.dcu.rays() == rays, "extreme rays differ");
    }

    /* face census and the dimension formula */
    {
      auto by_I = faces_by_I(ctx);  /* certifies the dimension formula */
      bool ok = true;
      for (const auto& [Iints, counts] : kFaceCensus) {
        std::set<std::size_t> I;
        for (int i : Iints) I.insert(static_cast<std::size_t>(i - 1));
        std::map<int, int> want(counts.begin(), counts.end());
        std::map<int, int> got;
        auto it = by_I.find(I);
        if (it != by_I.end())
          for (auto fi : it->second) ++got[static_cast<int>(ctx.faces[fi].dim())];
        if (got != want) ok = false;
      }
      check("faces.census", ok, "face counts per (I, dim) differ");
    }

    /* fans */
    {
      bool ok = true;
      std::vector<std::set<std::size_t>> subsets{{}, {0}, {1}, {0, 1}};
      std::vector<GenFan> sigmas;
      for (const auto& I : subsets) {
        GenFan si = sigma_I(ctx, I);
        FanCheck ck = fan_check(si);
        if (!ck.is_fan || !ck.is_complete) ok = false;
        SigmaMIResult mi = sigma_MI(ctx, I);
        if (!mi.equals_sigma_I) ok = false;
        sigmas.push_back(si);
      }
      /* the full-I fan is the common refinement of the singleton fans */
      std::set<std::string> refinement;
      for (const auto& s1 : sigmas[1].cones)
        for (const auto& s2 : sigmas[2].cones)
          refinement.insert(intersect(s1, s2).key());
      std::set<std::string> full;
      for (const auto& c : sigmas[3].cones) full.insert(c.key());
      if (full != refinement) ok = false;
      check("fans.sigma", ok, "sigma_I / sigma(M_I) mismatch");
    }

    /* rho table and the section identity */
    {
      bool ok = true;
      for (const auto& [xi_i, want_i] : kRho) {
        RatVec xi, want;
        for (int c : xi_i) xi.push_back(Rat(c));
        for (int c : want_i) want.push_back(Rat(c));
        if (rho(ctx, xi) != want) ok = false;
      }
      check("rho.table", ok, "rho values differ");
      std::mt19937 rng(2024);
      std::uniform_int_distribution<int> num(-9, 9), den(1, 4);
      bool section = true;
      for (int rep = 0; rep < 50; ++rep) {
        RatVec xi{Rat(num(rng), den(rng)), Rat(num(rng), den(rng))};
        RatVec r = rho(ctx, xi);
        if (pi_map(ctx.red, r) != xi) section = false;
      }
      check("rho.section", section, "pi does not invert rho");
    }

    /* strong convexity */
    {
      ConvexitySplit cs = strong_convexity_split(ctx);
      check("convexity", cs.sincere && ctx.dcu.lineality().empty(),
            "expected a strongly convex cone");
    }

    report << "---\n";
    report << json_to_string(interval_report(ctx));
  } catch (const std::exception& e) {
    check("interval", false, e.what());
  }

  out.ok = true;
  for (const auto& c : out.checks) out.ok = out.ok && c.pass;
  out.report = report.str();
  return out;
}

}  // namespace siltgeo
