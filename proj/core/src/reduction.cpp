#include "siltgeo/reduction.hpp"

#include <algorithm>
#include <deque>
#include <map>

#include "siltgeo/errors.hpp"

namespace siltgeo {

namespace {

RatVec flatten_matrix(const RatMatrix& m) {
  RatVec v(m.rows() * m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) v[i * m.cols() + j] = m.at(i, j);
  return v;
}

RatMatrix unflatten_matrix(const RatVec& v, std::size_t rows, std::size_t cols) {
  RatMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = v[i * cols + j];
  return m;
}

/* the block projection of H0(S-total) onto the summands in `keep` */
RatMatrix block_projection(const std::vector<AModulePtr>& parts,
                           const std::vector<bool>& keep) {
  std::size_t total = 0;
  for (const auto& p : parts) total += p->dim();
  RatMatrix m(total, total);
  std::size_t off = 0;
  for (std::size_t j = 0; j < parts.size(); ++j) {
    if (keep[j])
      for (std::size_t t = 0; t < parts[j]->dim(); ++t) m.at(off + t, off + t) = 1;
    off += parts[j]->dim();
  }
  return m;
}

/* chain inclusion of the i-th summand into the direct sum */
ChainMap block_inclusion(const Algebra& a, const std::vector<TwoTerm>& summands,
                         const TwoTerm& total, std::size_t i) {
  ChainMap inc{AlgMatrix::zero(a, total.p_minus(), summands[i].p_minus()),
               AlgMatrix::zero(a, total.p_zero(), summands[i].p_zero())};
  std::size_t off_m = 0, off_z = 0;
  for (std::size_t j = 0; j < i; ++j) {
    off_m += summands[j].p_minus().size();
    off_z += summands[j].p_zero().size();
  }
  for (std::size_t c = 0; c < summands[i].p_minus().size(); ++c)
    inc.minus.entry[off_m + c][c] = a.idempotents()[summands[i].p_minus()[c]];
  for (std::size_t c = 0; c < summands[i].p_zero().size(); ++c)
    inc.zero.entry[off_z + c][c] = a.idempotents()[summands[i].p_zero()[c]];
  return inc;
}

}  // namespace

ReductionContext reduce(const AlgebraPtr& a, const std::vector<TwoTerm>& u) {
  ReductionContext ctx;
  ctx.A = a;
  for (const auto& x : u)
    if (!x.is_zero_object()) ctx.u.push_back(x);
  const std::size_t m = ctx.u.size();

  {
    TwoTerm total = TwoTerm::zero_complex(a);
    for (const auto& x : ctx.u) total = TwoTerm::direct_sum(total, x);
    if (!is_presilting(total)) throw NotSilting("reduce: u is not presilting");
  }

  ctx.S = bongartz_completion(a, ctx.u);
  MinimalCompletion mc = minimal_completion(a, ctx.u, ctx.S);
  ctx.T = mc.summands;
  ctx.approx_mult = mc.approx_mult;
  ctx.smc_S = smc_of_silting(ctx.S);
  ctx.smc_T = smc_of_silting(ctx.T);
  for (const auto& part : ctx.smc_S) ctx.d.push_back(part.d);
  const std::size_t n = ctx.S.size();

  for (std::size_t j = m; j < n; ++j)
    if (ctx.S[j].p_zero().empty())
      throw CertificationFailed("reduce: a non-u Bongartz summand is shifted");

  for (const auto& s : ctx.S) {
    ctx.h0_parts.push_back(h0(s));
    ctx.hm1_parts.push_back(hminus1_nu(s));
  }
  ctx.h0_total = AModule::direct_sum(a, ctx.h0_parts);
  ctx.hm1_total = AModule::direct_sum(a, ctx.hm1_parts);

  /* g-vector basis change and the projection pi */
  RatMatrix g(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    GVector gv = ctx.S[j].g_vector();
    for (std::size_t k = 0; k < n; ++k) g.at(j, k) = gv[k];
  }
  RatMatrix ginv = inverse(g);
  ctx.pi = RatMatrix(n, n - m);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n - m; ++k) ctx.pi.at(i, k) = ginv.at(i, m + k);
  {
    Subspace ker = left_kernel(ctx.pi);
    std::vector<RatVec> ugs;
    for (const auto& x : ctx.u) {
      RatVec r;
      for (long c : x.g_vector()) r.push_back(Rat(c));
      ugs.push_back(r);
    }
    if (!(ker == Subspace(n, ugs)))
      throw CertificationFailed("reduce: pi kernel is not the span of C(U)");
  }

  /* the algebra B = End(H0 S)/<e> with the summand-block idempotents */
  if (m == n) {
    ctx.B = std::make_shared<Algebra>(std::vector<std::string>{},
                                      std::vector<std::vector<RatVec>>{}, RatVec{},
                                      std::vector<RatVec>{}, "B");
    ctx.end_h0 = endomorphism_algebra(*ctx.h0_total);
    ctx.end_to_b = RatMatrix(ctx.end_h0.algebra->dim(), 0);
    ctx.idem_e = ctx.end_h0.algebra->unit();
    for (std::size_t i = 0; i < m; ++i) ctx.M.push_back(AModule::zero(ctx.B));
    return ctx;
  }

  ctx.end_h0 = endomorphism_algebra(*ctx.h0_total);
  std::vector<RatVec> hom_flat;
  for (const auto& h : ctx.end_h0.hom_basis) hom_flat.push_back(flatten_matrix(h));
  Subspace homspace(ctx.h0_total->dim() * ctx.h0_total->dim(), hom_flat);

  auto endo_coords = [&](const RatMatrix& f) {
    return homspace.coordinates(flatten_matrix(f));
  };
  std::vector<bool> keep_u(n, false);
  for (std::size_t i = 0; i < m; ++i) keep_u[i] = true;
  ctx.idem_e = endo_coords(block_projection(ctx.h0_parts, keep_u));

  std::vector<RatVec> eps;
  for (std::size_t j = m; j < n; ++j) {
    std::vector<bool> keep(n, false);
    keep[j] = true;
    eps.push_back(endo_coords(block_projection(ctx.h0_parts, keep)));
  }
  QuotientResult q = quotient_by_ideal_with_idempotents(*ctx.end_h0.algebra,
                                                        {ctx.idem_e}, eps);
  ctx.B = q.algebra;
  ctx.end_to_b = q.projection;
  if (ctx.B->num_idempotents() != n - m)
    throw CertificationFailed("reduce: an idempotent of B collapsed");
  /* lifts of the B basis: solve x * projection = basis vector */
  for (std::size_t s = 0; s < ctx.B->dim(); ++s) {
    RatVec e(ctx.B->dim());
    e[s] = 1;
    auto lift = solve_left(ctx.end_to_b, e);
    if (!lift) throw Error("reduce: B basis does not lift");
    ctx.b_lifts.push_back(*lift);
  }
  /* primitivity: each corner of B must be local */
  for (std::size_t k = 0; k < n - m; ++k) {
    const RatVec& ek = ctx.B->idempotents()[k];
    const auto& corner = ctx.B->corner_basis(k, k);
    std::vector<std::vector<RatVec>> mult(corner.size(),
                                          std::vector<RatVec>(corner.size()));
    Subspace cs = ctx.B->corner_subspace(k, k);
    for (std::size_t s = 0; s < corner.size(); ++s)
      for (std::size_t t = 0; t < corner.size(); ++t)
        mult[s][t] = cs.coordinates(ctx.B->multiply(corner[s], corner[t]));
    std::vector<std::string> names(corner.size(), "c");
    Algebra ca(names, mult, cs.coordinates(ek), {cs.coordinates(ek)});
    if (!is_local_algebra(ca))
      throw CertificationFailed("reduce: P(k)_B is not indecomposable");
  }

  /* M_i via the chain-level hom spaces */
  TwoTerm total = TwoTerm::zero_complex(a);
  for (const auto& s : ctx.S) total = TwoTerm::direct_sum(total, s);
  EndK ek = end_k(total);

  /* H0 of a chain endomorphism, on the block basis of h0_total */
  std::vector<RatVec> h0_sections;
  {
    RatMatrix proj(proj_sum_dim(*a, total.p_zero()), ctx.h0_total->dim());
    std::size_t off_amb = 0, off_q = 0;
    for (std::size_t j = 0; j < n; ++j) {
      AModulePtr part = proj_sum_module(a, ctx.S[j].p_zero());
      SubQuotient sq = sub_quotient_of_subspace(
          *part, row_space(realize_alg_matrix(*a, ctx.S[j].diff())));
      for (std::size_t r = 0; r < part->dim(); ++r)
        for (std::size_t c = 0; c < sq.proj.cols(); ++c)
          proj.at(off_amb + r, off_q + c) = sq.proj.at(r, c);
      off_amb += part->dim();
      off_q += sq.proj.cols();
    }
    for (std::size_t t = 0; t < ctx.h0_total->dim(); ++t) {
      RatVec e(ctx.h0_total->dim());
      e[t] = 1;
      auto sec = solve_left(proj, e);
      if (!sec) throw Error("reduce: H0 projection has no section");
      h0_sections.push_back(*sec);
    }
    ctx.M.clear();
    auto h0_of_chain = [&](const ChainMap& f) {
      RatMatrix fz = realize_alg_matrix(*a, f.zero);
      RatMatrix out(ctx.h0_total->dim(), ctx.h0_total->dim());
      for (std::size_t t = 0; t < ctx.h0_total->dim(); ++t)
        out.set_row(t, (h0_sections[t] * fz) * proj);
      return out;
    };

    /* chain coordinates -> B coordinates */
    RatMatrix chain_to_b(ek.homk.chain_basis.size(), ctx.B->dim());
    for (std::size_t k = 0; k < ek.homk.chain_basis.size(); ++k)
      chain_to_b.set_row(k,
                         endo_coords(h0_of_chain(ek.homk.chain_basis[k])) * ctx.end_to_b);
    /* chain lifts of the B basis */
    std::vector<ChainMap> b_chain;
    for (std::size_t s = 0; s < ctx.B->dim(); ++s) {
      RatVec e(ctx.B->dim());
      e[s] = 1;
      auto sol = solve_left(chain_to_b, e);
      if (!sol) throw CertificationFailed("reduce: B basis has no chain lift");
      ChainMap f{AlgMatrix::zero(*a, total.p_minus(), total.p_minus()),
                 AlgMatrix::zero(*a, total.p_zero(), total.p_zero())};
      for (std::size_t k = 0; k < sol->size(); ++k)
        if ((*sol)[k] != 0) {
          AlgMatrix sm = ek.homk.chain_basis[k].minus;
          AlgMatrix sz = ek.homk.chain_basis[k].zero;
          for (auto& row : sm.entry)
            for (auto& x : row) x = scaled(x, (*sol)[k]);
          for (auto& row : sz.entry)
            for (auto& x : row) x = scaled(x, (*sol)[k]);
          f.minus = alg_add(f.minus, sm);
          f.zero = alg_add(f.zero, sz);
        }
      b_chain.push_back(std::move(f));
    }
    Subspace ambiguity = left_kernel(chain_to_b);

    for (std::size_t i = 0; i < m; ++i) {
      const SmcPart& y = ctx.smc_T[i];
      bool plus = y.plus && y.plus->dim() > 0;
      const AModule& ymod = plus ? *y.plus : *y.minus;
      int shift = plus ? 0 : 1;
      StalkHoms sh = hom_to_module(total, ymod, shift);
      ChainMap inc = block_inclusion(*a, ctx.S, total, i);
      RatMatrix inc_real = plus ? realize_alg_matrix(*a, inc.zero)
                                : realize_alg_matrix(*a, inc.minus);
      /* the inclusion-annihilated classes */
      StalkHoms sh_u = hom_to_module(ctx.u[i], ymod, shift);
      RatMatrix cond(sh.reps.size(), sh_u.src_dim * ymod.dim() == 0
                                         ? 1
                                         : sh_u.src_dim * ymod.dim());
      for (std::size_t t = 0; t < sh.reps.size(); ++t) {
        if (sh_u.src_dim == 0 || ymod.dim() == 0) continue;
        RatMatrix pre = inc_real * sh.reps[t];
        RatVec red = sh_u.null_space.reduce(flatten_matrix(pre));
        cond.set_row(t, red);
      }
      Subspace sols = left_kernel(cond);
      /* basis representatives of M_i, reduced against the null space */
      std::vector<RatVec> mi_flat;
      std::vector<RatMatrix> mi_reps;
      for (std::size_t t = 0; t < sols.dim(); ++t) {
        RatMatrix rep(sh.src_dim, ymod.dim());
        RatVec coeff = sols.basis().row(t);
        for (std::size_t k = 0; k < sh.reps.size(); ++k)
          if (coeff[k] != 0) rep = rep + sh.reps[k].scaled(coeff[k]);
        RatVec red = sh.null_space.reduce(flatten_matrix(rep));
        if (is_zero(red)) continue;
        mi_flat.push_back(red);
      }
      Subspace mi_span(sh.src_dim * ymod.dim() == 0 ? 0 : sh.src_dim * ymod.dim(),
                       mi_flat);
      for (std::size_t t = 0; t < mi_span.dim(); ++t)
        mi_reps.push_back(
            unflatten_matrix(mi_span.basis().row(t), sh.src_dim, ymod.dim()));

      /* ambiguity must annihilate M_i */
      for (std::size_t kk = 0; kk < ambiguity.dim(); ++kk) {
        RatVec coeff = ambiguity.basis().row(kk);
        ChainMap f{AlgMatrix::zero(*a, total.p_minus(), total.p_minus()),
                   AlgMatrix::zero(*a, total.p_zero(), total.p_zero())};
        for (std::size_t k = 0; k < coeff.size(); ++k)
          if (coeff[k] != 0) {
            AlgMatrix sm = ek.homk.chain_basis[k].minus;
            AlgMatrix sz = ek.homk.chain_basis[k].zero;
            for (auto& row : sm.entry)
              for (auto& x : row) x = scaled(x, coeff[k]);
            for (auto& row : sz.entry)
              for (auto& x : row) x = scaled(x, coeff[k]);
            f.minus = alg_add(f.minus, sm);
            f.zero = alg_add(f.zero, sz);
          }
        RatMatrix fr = shift == 0 ? realize_alg_matrix(*a, f.zero)
                                  : realize_alg_matrix(*a, f.minus);
        for (const auto& rep : mi_reps) {
          RatVec red = sh.null_space.reduce(flatten_matrix(fr * rep));
          if (!is_zero(red))
            throw CertificationFailed("reduce: M_i action is not B-well-defined");
        }
      }

      /* action matrices over the B basis */
      std::vector<RatMatrix> action;
      for (std::size_t s = 0; s < ctx.B->dim(); ++s) {
        RatMatrix fr = shift == 0 ? realize_alg_matrix(*a, b_chain[s].zero)
                                  : realize_alg_matrix(*a, b_chain[s].minus);
        RatMatrix act(mi_reps.size(), mi_reps.size());
        for (std::size_t t = 0; t < mi_reps.size(); ++t) {
          RatVec red = sh.null_space.reduce(flatten_matrix(fr * mi_reps[t]));
          if (!mi_span.contains(red))
            throw CertificationFailed("reduce: M_i is not closed under B");
          act.set_row(t, mi_span.coordinates(red));
        }
        action.push_back(std::move(act));
      }
      BModulePtr mi = std::make_shared<AModule>(ctx.B, std::move(action));
      /* certified dimension vector: dim(M_i e_k) = a_{m+k,i} d_{U_i} */
      DimVector dv = mi->dim_vector();
      for (std::size_t k = 0; k < n - m; ++k) {
        long expect = static_cast<long>(ctx.approx_mult[k][i] * ctx.d[i]);
        if (dv[k] != expect)
          throw CertificationFailed("reduce: M_i dimension vector mismatch");
      }
      ctx.M.push_back(mi);
    }
  }

  /* cross-check the projective indexing: Phi(X_j) is the top of P(j-m)_B */
  for (std::size_t j = m; j < n; ++j) {
    const SmcPart& x = ctx.smc_S[j];
    if (!(x.plus && x.plus->dim() > 0))
      throw CertificationFailed("reduce: simple of W_U is not a module");
    BModulePtr img = phi(ctx, *x.plus);
    BModulePtr top = b_simple(ctx, j - m);
    if (!modules_isomorphic(*img, *top))
      throw CertificationFailed("reduce: Phi(X_j) is not the top of P(j-m)_B");
  }
  return ctx;
}

bool w_u_membership(const ReductionContext& ctx, const AModule& m) {
  std::vector<AModulePtr> h0u(ctx.h0_parts.begin(), ctx.h0_parts.begin() + ctx.m());
  std::vector<AModulePtr> hm1u(ctx.hm1_parts.begin(), ctx.hm1_parts.begin() + ctx.m());
  AModulePtr h0 = AModule::direct_sum(ctx.A, h0u);
  AModulePtr hm1 = AModule::direct_sum(ctx.A, hm1u);
  return hom_dim(*h0, m) == 0 && hom_dim(m, *hm1) == 0;
}

BModulePtr phi(const ReductionContext& ctx, const AModule& m) {
  if (!w_u_membership(ctx, m)) throw NotInWU("phi: module is not in W_U");
  if (ctx.B->dim() == 0) return AModule::zero(ctx.B);
  auto homs = hom_space(*ctx.h0_total, m);
  std::size_t r = homs.size();
  std::vector<RatVec> flat;
  for (const auto& h : homs) flat.push_back(flatten_matrix(h));
  Subspace span(ctx.h0_total->dim() * m.dim(), flat);
  std::vector<RatMatrix> action;
  for (std::size_t s = 0; s < ctx.B->dim(); ++s) {
    /* f . b = f ∘ psi with psi the endomorphism lift of b */
    RatMatrix psi(ctx.h0_total->dim(), ctx.h0_total->dim());
    const RatVec& lift = ctx.b_lifts[s];
    for (std::size_t k = 0; k < lift.size(); ++k)
      if (lift[k] != 0) psi = psi + ctx.end_h0.hom_basis[k].scaled(lift[k]);
    RatMatrix act(r, r);
    for (std::size_t t = 0; t < r; ++t)
      act.set_row(t, span.coordinates(flatten_matrix(psi * homs[t])));
    action.push_back(std::move(act));
  }
  /* the ideal <e> must act as zero */
  {
    RatMatrix e_mat(ctx.h0_total->dim(), ctx.h0_total->dim());
    for (std::size_t k = 0; k < ctx.idem_e.size(); ++k)
      if (ctx.idem_e[k] != 0) e_mat = e_mat + ctx.end_h0.hom_basis[k].scaled(ctx.idem_e[k]);
    for (std::size_t t = 0; t < r; ++t)
      if (!(e_mat * homs[t]).is_zero())
        throw CertificationFailed("phi: the idempotent e acts nontrivially");
  }
  return std::make_shared<AModule>(ctx.B, std::move(action));
}

RatVec pi_map(const ReductionContext& ctx, const RatVec& theta) {
  return theta * ctx.pi;
}

BModulePtr m_module(const ReductionContext& ctx, std::size_t i) {
  return ctx.M.at(i);
}

BModulePtr b_projective(const ReductionContext& ctx, std::size_t k) {
  return projective_module(ctx.B, k);
}

BModulePtr b_simple(const ReductionContext& ctx, std::size_t k) {
  return simple_module(ctx.B, k);
}

ConstrainedAtlas constrained_atlas(const ReductionContext& ctx, std::size_t cap) {
  ConstrainedAtlas out;
  std::map<std::string, std::size_t> seen;
  std::deque<std::size_t> queue;
  auto add = [&](std::vector<TwoTerm> v) {
    std::string key = silting_key(v);
    auto it = seen.find(key);
    if (it != seen.end()) return it->second;
    out.vertices.push_back(v);
    out.smcs.push_back(smc_of_silting(v));
    seen[key] = out.vertices.size() - 1;
    queue.push_back(out.vertices.size() - 1);
    return out.vertices.size() - 1;
  };
  out.complete = true;
  add(ctx.S);
  while (!queue.empty()) {
    std::size_t vi = queue.front();
    queue.pop_front();
    std::vector<TwoTerm> v = out.vertices[vi];
    SmcDatum smc = out.smcs[vi];
    for (std::size_t j = ctx.m(); j < v.size(); ++j) {
      if (out.vertices.size() >= cap) {
        out.complete = false;
        break;
      }
      bool left = smc[j].plus && smc[j].plus->dim() > 0;
      TwoTerm rep = mutate(v, j, left ? MutDir::Left : MutDir::Right);
      std::vector<TwoTerm> next = v;
      next[j] = rep;
      add(std::move(next));
    }
    if (!out.complete) break;
  }
  if (!queue.empty()) out.complete = false;
  return out;
}

ConstrainedAtlas constrained_atlas_from(const std::vector<TwoTerm>& u,
                                        const SiltingAtlas& atlas) {
  ConstrainedAtlas out;
  out.complete = atlas.complete();
  std::vector<std::string> want;
  for (const auto& x : u) {
    std::string k;
    for (long c : x.g_vector()) k += std::to_string(c) + ",";
    want.push_back(k);
  }
  for (const auto& v : atlas.vertices()) {
    std::vector<std::size_t> upos(want.size());
    std::vector<bool> used(v.summands.size(), false);
    bool ok = true;
    for (std::size_t i = 0; i < want.size(); ++i) {
      bool found = false;
      for (std::size_t j = 0; j < v.summands.size(); ++j) {
        if (used[j]) continue;
        std::string k;
        for (long c : v.summands[j].g_vector()) k += std::to_string(c) + ",";
        if (k == want[i]) {
          used[j] = true;
          upos[i] = j;
          found = true;
          break;
        }
      }
      if (!found) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    std::vector<TwoTerm> perm;
    SmcDatum smc;
    for (std::size_t i = 0; i < want.size(); ++i) {
      perm.push_back(v.summands[upos[i]]);
      smc.push_back(v.smc[upos[i]]);
    }
    for (std::size_t j = 0; j < v.summands.size(); ++j)
      if (!used[j]) {
        perm.push_back(v.summands[j]);
        smc.push_back(v.smc[j]);
      }
    out.vertices.push_back(std::move(perm));
    out.smcs.push_back(std::move(smc));
  }
  return out;
}

std::optional<Quiver> path_algebra_certificate(const Algebra& b) {
  std::size_t r = b.num_idempotents();
  Subspace rad = jacobson_radical(b);
  std::vector<RatVec> rad2v;
  for (std::size_t i = 0; i < rad.dim(); ++i)
    for (std::size_t j = 0; j < rad.dim(); ++j)
      rad2v.push_back(b.multiply(rad.basis().row(i), rad.basis().row(j)));
  Subspace rad2(b.dim(), rad2v);

  Quiver q;
  for (std::size_t v = 0; v < r; ++v) q.vertices.push_back(std::to_string(v + 1));
  std::vector<RatVec> arrow_lifts;
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) {
      /* arrows i -> j span e_i (rad/rad^2) e_j */
      Subspace grown = rad2;
      for (std::size_t t = 0; t < rad.dim(); ++t) {
        RatVec v = b.multiply(b.multiply(b.idempotents()[i], rad.basis().row(t)),
                              b.idempotents()[j]);
        if (is_zero(v) || grown.contains(v)) continue;
        grown = grown.sum(Subspace(b.dim(), {v}));
        q.arrows.push_back({"x" + std::to_string(q.arrows.size() + 1), i, j});
        arrow_lifts.push_back(v);
      }
    }

  /* spanning check: products of idempotents and arrows fill b */
  std::vector<RatVec> gens = b.idempotents();
  gens.insert(gens.end(), arrow_lifts.begin(), arrow_lifts.end());
  Subspace span(b.dim(), gens);
  for (;;) {
    std::vector<RatVec> more;
    for (std::size_t i = 0; i < span.dim(); ++i) {
      more.push_back(span.basis().row(i));
      for (const auto& g : arrow_lifts)
        more.push_back(b.multiply(span.basis().row(i), g));
    }
    Subspace grown(b.dim(), more);
    if (grown.dim() == span.dim()) break;
    span = grown;
  }
  if (span.dim() != b.dim()) return std::nullopt;

  /* dimension check: paths of the quiver must count the corner dims */
  std::vector<std::vector<std::size_t>> path_count(r, std::vector<std::size_t>(r, 0));
  struct P {
    std::size_t src, tgt, len;
  };
  std::vector<P> frontier;
  for (std::size_t v = 0; v < r; ++v) {
    ++path_count[v][v];
    frontier.push_back({v, v, 0});
  }
  std::size_t total = r;
  while (!frontier.empty()) {
    std::vector<P> next;
    for (const auto& p : frontier)
      for (const auto& arr : q.arrows)
        if (arr.from == p.tgt) {
          if (total + 1 > b.dim() || p.len + 1 > b.dim()) return std::nullopt;
          ++path_count[p.src][arr.to];
          ++total;
          next.push_back({p.src, arr.to, p.len + 1});
        }
    frontier = next;
  }
  if (total != b.dim()) return std::nullopt;
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j)
      if (path_count[i][j] != b.corner_basis(i, j).size()) return std::nullopt;
  return q;
}

}  // namespace siltgeo
