#include "siltgeo/interval.hpp"

#include <algorithm>
#include <sstream>

#include "siltgeo/errors.hpp"

namespace siltgeo {

namespace {

RatVec class_to_rat(const DimVector& dv) {
  RatVec v;
  for (long c : dv) v.push_back(Rat(c));
  return v;
}

RatVec gvec_to_rat(const GVector& g) {
  RatVec v;
  for (long c : g) v.push_back(Rat(c));
  return v;
}

}  // namespace

std::vector<std::pair<AModulePtr, AModulePtr>> semibrick_pair(
    const ReductionContext& red) {
  AlgebraPtr a = red.A;
  std::size_t m = red.m();
  std::vector<AModulePtr> h0u(red.h0_parts.begin(), red.h0_parts.begin() + m);
  std::vector<AModulePtr> hm1u(red.hm1_parts.begin(), red.hm1_parts.begin() + m);
  AModulePtr h0_total = AModule::direct_sum(a, h0u);
  AModulePtr hm1_total = AModule::direct_sum(a, hm1u);

  std::vector<std::pair<AModulePtr, AModulePtr>> out;
  for (std::size_t i = 0; i < m; ++i) {
    AModulePtr yplus;
    {
      const AModule& hi = *h0u[i];
      if (hi.dim() == 0)
        yplus = AModule::zero(a);
      else {
        auto rads = rad_hom(*h0_total, hi);
        std::vector<RatVec> rows;
        for (const auto& f : rads)
          for (std::size_t r = 0; r < f.rows(); ++r) rows.push_back(f.row(r));
        yplus = sub_quotient_of_subspace(hi, Subspace(hi.dim(), rows)).quot;
      }
    }
    AModulePtr xminus;
    {
      const AModule& hi = *hm1u[i];
      if (hi.dim() == 0)
        xminus = AModule::zero(a);
      else {
        auto rads = rad_hom(hi, *hm1_total);
        if (rads.empty())
          xminus = sub_quotient_of_subspace(hi, Subspace::full(hi.dim())).sub;
        else {
          RatMatrix stacked = rads[0];
          for (std::size_t k = 1; k < rads.size(); ++k) stacked = stacked.hstack(rads[k]);
          xminus = sub_quotient_of_subspace(hi, left_kernel(stacked)).sub;
        }
      }
    }
    if (yplus->dim() == 0 && xminus->dim() == 0)
      throw Error("semibrick_pair: both parts vanish");
    out.emplace_back(yplus, xminus);
  }
  return out;
}

IntervalContext make_interval_context(const AlgebraPtr& a,
                                      const std::vector<TwoTerm>& u, std::size_t cap,
                                      bool with_a_atlas) {
  IntervalContext ctx;
  ctx.red = reduce(a, u);
  auto sb = semibrick_pair(ctx.red);
  for (auto& [y, x] : sb) {
    ctx.yplus.push_back(y);
    ctx.xminus.push_back(x);
  }
  if (with_a_atlas) ctx.a_atlas = SiltingAtlas::enumerate(a, cap);
  if (ctx.a_atlas && ctx.a_atlas->complete())
    ctx.catlas = constrained_atlas_from(ctx.red.u, *ctx.a_atlas);
  else
    ctx.catlas = constrained_atlas(ctx.red, cap);
  ctx.reduction_complete = ctx.catlas.complete;
  ctx.b_atlas = SiltingAtlas::enumerate(ctx.red.B, cap);
  if (ctx.reduction_complete) dcu_inequalities(ctx);
  return ctx;
}

FacetTable facet_table(const AlgebraPtr& a, const std::vector<TwoTerm>& u,
                       const std::vector<std::size_t>& d_u,
                       const ConstrainedAtlas& catlas) {
  (void)d_u;
  if (!catlas.complete)
    throw IncompleteReduction("the constrained atlas did not close under the cap");
  const std::size_t n = a->num_idempotents(), m = u.size();
  FacetTable out;

  /* collect the signed normals of Z_{V,i} over the constrained atlas */
  struct Entry {
    std::size_t i;
    int eps;
    AModulePtr label;
    DimVector cls;
    RatVec normal;
  };
  std::vector<Entry> entries;
  std::set<std::string> seen;
  for (std::size_t vi = 0; vi < catlas.vertices.size(); ++vi) {
    const SmcDatum& smc = catlas.smcs[vi];
    for (std::size_t i = 0; i < m; ++i) {
      bool plus = smc[i].plus && smc[i].plus->dim() > 0;
      AModulePtr label = plus ? smc[i].plus : smc[i].minus;
      int eps = plus ? +1 : -1;
      DimVector cls = label->dim_vector();
      RatVec normal = class_to_rat(cls);
      if (eps < 0) normal = scaled(normal, Rat(-1));
      normal = primitive_scale(normal);
      std::ostringstream os;
      for (const auto& c : normal) os << rat_to_string(c) << ",";
      if (!seen.insert(os.str()).second) continue;
      entries.push_back({i, eps, label, cls, normal});
    }
  }

  std::vector<RatVec> normals;
  for (const auto& e : entries) normals.push_back(e.normal);
  out.dcu = RatCone::from_inequalities(n, normals);

  /* every canonical facet normal must match exactly one entry */
  for (const auto& e : entries) {
    bool found = false;
    for (const auto& nrm : out.dcu.inequalities())
      if (nrm == e.normal) found = true;
    if (!found)
      throw CertificationFailed("dcu: a brick label normal is not a facet");
  }
  if (out.dcu.inequalities().size() != entries.size())
    throw CertificationFailed("dcu: facet count does not match the label count");

  for (const auto& e : entries) {
    FacetDatum f;
    std::vector<RatVec> cut = out.dcu.normals();
    cut.push_back(scaled(e.normal, Rat(-1)));
    f.face = RatCone::from_inequalities(n, cut);
    f.i_F = e.i;
    f.eps = e.eps;
    f.label = e.label;
    f.label_class = e.cls;
    f.normal = e.normal;
    out.facets.push_back(std::move(f));
  }
  return out;
}

LambdaSplit lambda_split(const FacetTable& ft, const std::vector<TwoTerm>& u,
                         const std::vector<std::size_t>& d_u, const RatVec& theta) {
  for (const auto& f : ft.facets) {
    Rat acc = 0;
    for (std::size_t k = 0; k < theta.size(); ++k) acc += theta[k] * f.normal[k];
    if (acc < 0) throw NotInDU("lambda: theta outside D(U)");
  }
  LambdaSplit out;
  out.coeffs.assign(u.size(), Rat(0));
  for (std::size_t i = 0; i < u.size(); ++i) {
    bool first = true;
    Rat best = 0;
    for (const auto& f : ft.facets) {
      if (f.i_F != i) continue;
      Rat val = 0;
      for (std::size_t k = 0; k < theta.size(); ++k) val += theta[k] * f.normal[k];
      val /= Rat(long(d_u[i]));
      if (first || val < best) {
        best = val;
        first = false;
      }
    }
    if (first) throw Error("lambda: no facet with index i");
    out.coeffs[i] = best;
  }
  out.lambda.assign(theta.size(), Rat(0));
  for (std::size_t i = 0; i < u.size(); ++i)
    out.lambda = out.lambda + scaled(gvec_to_rat(u[i].g_vector()), out.coeffs[i]);
  out.lambda_prime = theta - out.lambda;
  return out;
}

std::vector<FacetDatum> dcu_inequalities(IntervalContext& ctx) {
  if (!ctx.facets.empty()) return ctx.facets;
  std::vector<std::size_t> d_u(ctx.red.d.begin(), ctx.red.d.begin() + ctx.m());
  FacetTable ft = facet_table(ctx.red.A, ctx.red.u, d_u, ctx.catlas);
  ctx.dcu = ft.dcu;
  ctx.facets = ft.facets;

  /* the face lattice and the index sets I_F */
  ctx.faces = all_faces(ctx.dcu);
  ctx.face_I.clear();
  for (const auto& face : ctx.faces) {
    std::set<std::size_t> I;
    for (std::size_t i = 0; i < ctx.m(); ++i)
      if (!face.contains(gvec_to_rat(ctx.red.u[i].g_vector()))) I.insert(i);
    ctx.face_I.push_back(std::move(I));
  }
  return ctx.facets;
}

bool dcu_membership_closed(const IntervalContext& ctx, const RatVec& theta) {
  for (const auto& f : ctx.facets) {
    Rat acc = 0;
    for (std::size_t k = 0; k < theta.size(); ++k) acc += theta[k] * f.normal[k];
    if (acc < 0) return false;
  }
  return true;
}

bool dcu_membership_open(IntervalContext& ctx, const RatVec& theta) {
  if (!ctx.a_atlas) throw NotLocated("open membership needs the ambient atlas");
  for (std::size_t i = 0; i < ctx.m(); ++i) {
    if (ctx.yplus[i]->dim() > 0) {
      TorsionTriple t = torsion_triple(*ctx.a_atlas, theta, *ctx.yplus[i], ctx.reg);
      if (t.t.dim() != ctx.yplus[i]->dim()) return false;
    }
    if (ctx.xminus[i]->dim() > 0) {
      TorsionTriple t = torsion_triple(*ctx.a_atlas, theta, *ctx.xminus[i], ctx.reg);
      if (t.f_mod->dim() != ctx.xminus[i]->dim()) return false;
    }
  }
  return true;
}

std::map<std::set<std::size_t>, std::vector<std::size_t>> faces_by_I(
    const IntervalContext& ctx) {
  std::map<std::set<std::size_t>, std::vector<std::size_t>> out;
  for (std::size_t f = 0; f < ctx.faces.size(); ++f)
    out[ctx.face_I[f]].push_back(f);
  /* the dimension formula dim F = (m - #I) + dim pi(F) holds per face */
  for (std::size_t f = 0; f < ctx.faces.size(); ++f) {
    const RatCone& face = ctx.faces[f];
    std::vector<RatVec> img_rays, img_lin;
    for (const auto& r : face.rays()) img_rays.push_back(r * ctx.red.pi);
    for (const auto& l : face.lineality()) img_lin.push_back(l * ctx.red.pi);
    RatCone img = RatCone::from_rays(ctx.n() - ctx.m(), img_rays, img_lin);
    if (face.dim() != (ctx.m() - ctx.face_I[f].size()) + img.dim())
      throw CertificationFailed("faces_by_I: dimension formula fails");
  }
  return out;
}

LambdaSplit lambda_split(const IntervalContext& ctx, const RatVec& theta) {
  if (!dcu_membership_closed(ctx, theta)) throw NotInDU("lambda: theta outside D(U)");
  LambdaSplit out;
  out.coeffs.assign(ctx.m(), Rat(0));
  for (std::size_t i = 0; i < ctx.m(); ++i) {
    bool first = true;
    Rat best = 0;
    for (const auto& f : ctx.facets) {
      if (f.i_F != i) continue;
      /* |theta(L_F)| = eps theta(L_F) = theta . normal on D(U) */
      Rat val = 0;
      for (std::size_t k = 0; k < theta.size(); ++k) val += theta[k] * f.normal[k];
      val /= Rat(long(ctx.red.d[i]));
      if (first || val < best) {
        best = val;
        first = false;
      }
    }
    if (first) throw Error("lambda: no facet with index i");
    out.coeffs[i] = best;
  }
  out.lambda.assign(theta.size(), Rat(0));
  for (std::size_t i = 0; i < ctx.m(); ++i)
    out.lambda = out.lambda + scaled(gvec_to_rat(ctx.red.u[i].g_vector()), out.coeffs[i]);
  out.lambda_prime = theta - out.lambda;
  return out;
}

RatVec rho(IntervalContext& ctx, const RatVec& xi) {
  if (!ctx.b_atlas || !ctx.b_atlas->complete())
    throw IncompleteReduction("rho needs a complete atlas of B");
  const std::size_t m = ctx.m(), n = ctx.n();
  RatVec theta(n, Rat(0));
  for (std::size_t i = 0; i < m; ++i) {
    Rat val = 0;
    if (ctx.red.M[i]->dim() > 0) {
      TorsionTriple t = torsion_triple(*ctx.b_atlas, xi, *ctx.red.M[i], ctx.reg);
      val = euler_pair(xi, *t.f_mod);
    }
    if (val > 0) throw CertificationFailed("rho: positive pairing with the f part");
    Rat coeff = -val / Rat(long(ctx.red.d[i]));
    theta = theta + scaled(gvec_to_rat(ctx.red.u[i].g_vector()), coeff);
  }
  for (std::size_t k = 0; k < n - m; ++k)
    theta = theta + scaled(gvec_to_rat(ctx.red.S[m + k].g_vector()), xi[k]);
  /* certify: pi(rho(xi)) = xi and lambda vanishes */
  if (pi_map(ctx.red, theta) != xi)
    throw CertificationFailed("rho: pi does not invert");
  LambdaSplit ls = lambda_split(ctx, theta);
  if (!is_zero(ls.lambda)) throw CertificationFailed("rho: image is not in the link");
  return theta;
}

GenFan sigma_I(const IntervalContext& ctx, const std::set<std::size_t>& I) {
  if (!ctx.reduction_complete)
    throw IncompleteReduction("sigma_I needs the full interval geometry");
  const std::size_t nb = ctx.n() - ctx.m();
  /* Face_I: faces whose index set contains I; its support is partial_I */
  std::vector<std::size_t> face_I_idx, face_circ_idx;
  for (std::size_t f = 0; f < ctx.faces.size(); ++f) {
    if (std::includes(ctx.face_I[f].begin(), ctx.face_I[f].end(), I.begin(), I.end()))
      face_I_idx.push_back(f);
    if (ctx.face_I[f] == I) face_circ_idx.push_back(f);
  }
  auto image_of = [&](const RatCone& c) {
    std::vector<RatVec> rays, lin;
    for (const auto& r : c.rays()) rays.push_back(r * ctx.red.pi);
    for (const auto& l : c.lineality()) lin.push_back(l * ctx.red.pi);
    return RatCone::from_rays(nb, rays, lin);
  };
  GenFan out;
  out.ambient = nb;
  for (auto f : face_circ_idx) {
    RatCone img = image_of(ctx.faces[f]);
    /* saturation against the support of Face_I */
    std::vector<RatVec> pre_normals;
    for (const auto& nrm : img.normals()) {
      RatVec v(ctx.n());
      for (std::size_t i = 0; i < ctx.n(); ++i) {
        Rat acc = 0;
        for (std::size_t j = 0; j < nb; ++j) acc += ctx.red.pi.at(i, j) * nrm[j];
        v[i] = acc;
      }
      pre_normals.push_back(v);
    }
    RatCone pre = RatCone::from_inequalities(ctx.n(), pre_normals);
    for (auto g : face_I_idx) {
      RatCone meet = intersect(ctx.faces[g], pre);
      if (!cone_contains(ctx.faces[f], meet))
        throw SaturationViolated("sigma_I: a face image does not saturate");
    }
    if (out.contains_cone(img))
      throw CertificationFailed("sigma_I: pi is not injective on the I-faces");
    out.insert(img);
  }
  std::sort(out.cones.begin(), out.cones.end(),
            [](const RatCone& a, const RatCone& b) { return a.key() < b.key(); });
  FanCheck ck = fan_check(out);
  if (!ck.is_fan || !ck.is_complete)
    throw CertificationFailed("sigma_I is not a complete generalized fan: " + ck.detail);
  return out;
}

SigmaMIResult sigma_MI(IntervalContext& ctx, const std::set<std::size_t>& I) {
  if (!ctx.b_atlas || !ctx.b_atlas->complete())
    throw IncompleteReduction("sigma_MI needs a complete atlas of B");
  std::vector<AModulePtr> parts;
  for (auto i : I) parts.push_back(ctx.red.M[i]);
  AModulePtr mi = AModule::direct_sum(ctx.red.B, parts);
  MtfFan f = mtf_fan(*ctx.b_atlas, *mi, ctx.threads);
  SigmaMIResult out;
  out.fan = f.fan;
  GenFan si = sigma_I(ctx, I);
  auto keyset = [](const GenFan& g) {
    std::vector<std::string> ks;
    for (const auto& c : g.cones) ks.push_back(c.key());
    std::sort(ks.begin(), ks.end());
    return ks;
  };
  out.equals_sigma_I = keyset(out.fan) == keyset(si);
  return out;
}

TfClass tf_classify(const IntervalContext& ctx, const RatVec& theta) {
  LambdaSplit ls = lambda_split(ctx, theta);  /* throws NotInDU outside */
  TfClass out;
  for (std::size_t i = 0; i < ctx.m(); ++i)
    if (ls.coeffs[i] > 0) out.I.insert(i);
  out.xi = pi_map(ctx.red, theta);
  return out;
}

ConvexitySplit strong_convexity_split(const IntervalContext& ctx) {
  ConvexitySplit out;
  DimVector total(ctx.red.A->num_idempotents(), 0);
  for (std::size_t i = 0; i < ctx.m(); ++i) {
    DimVector a = ctx.red.h0_parts[i]->dim_vector();
    DimVector b = ctx.red.hm1_parts[i]->dim_vector();
    for (std::size_t k = 0; k < total.size(); ++k) total[k] += a[k] + b[k];
  }
  for (std::size_t k = 0; k < total.size(); ++k)
    if (total[k] == 0) out.lineality_indices.insert(k);
  out.sincere = out.lineality_indices.empty();
  /* agree with the cone-level lineality when the geometry is available */
  if (!ctx.facets.empty()) {
    std::vector<RatVec> rows;
    for (auto k : out.lineality_indices) {
      RatVec e(ctx.n());
      e[k] = 1;
      rows.push_back(e);
    }
    if (!(ctx.dcu.lineality_space() == Subspace(ctx.n(), rows)))
      throw CertificationFailed("convexity split disagrees with the cone lineality");
  }
  return out;
}

PartialFlags link_and_partial(IntervalContext& ctx, const RatVec& theta,
                              std::size_t i) {
  if (!dcu_membership_closed(ctx, theta))
    throw NotInDU("link_and_partial: theta outside D(U)");
  if (!ctx.a_atlas) throw NotLocated("link_and_partial needs the ambient atlas");
  PartialFlags out;
  if (ctx.yplus[i]->dim() > 0) {
    TorsionTriple t = torsion_triple(*ctx.a_atlas, theta, *ctx.yplus[i], ctx.reg);
    out.partial_plus = t.t.dim() != ctx.yplus[i]->dim();
  }
  if (ctx.xminus[i]->dim() > 0) {
    TorsionTriple t = torsion_triple(*ctx.a_atlas, theta, *ctx.xminus[i], ctx.reg);
    out.partial_minus = t.f_mod->dim() != ctx.xminus[i]->dim();
  }
  out.partial = out.partial_plus || out.partial_minus;
  /* cross-check: partial_i = D(U) minus the open neighborhood of U_i */
  bool in_open_ui = true;
  {
    const AModule& h0i = *ctx.red.h0_parts[i];
    if (h0i.dim() > 0) {
      TorsionTriple t = torsion_triple(*ctx.a_atlas, theta, h0i, ctx.reg);
      if (t.t.dim() != h0i.dim()) in_open_ui = false;
    }
    const AModule& hm1i = *ctx.red.hm1_parts[i];
    if (hm1i.dim() > 0 && in_open_ui) {
      TorsionTriple t = torsion_triple(*ctx.a_atlas, theta, hm1i, ctx.reg);
      if (t.f_mod->dim() != hm1i.dim()) in_open_ui = false;
    }
  }
  if (out.partial == in_open_ui)
    throw CertificationFailed("partial_i does not complement the open neighborhood");
  LambdaSplit ls = lambda_split(ctx, theta);
  out.link = is_zero(ls.lambda);
  return out;
}

}  // namespace siltgeo
