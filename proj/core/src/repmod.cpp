#include "siltgeo/repmod.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <sstream>

#include "siltgeo/errors.hpp"

namespace siltgeo {

/* ------------------------------- AModule ------------------------------ */

AModule::AModule(AlgebraPtr owner, std::vector<RatMatrix> action, bool validate)
    : owner_(std::move(owner)), action_(std::move(action)) {
  const Algebra& a = *owner_;
  if (action_.size() != a.dim()) throw DimensionMismatch("module: action table size");
  dim_ = a.dim() == 0 ? 0 : action_[0].rows();
  for (const auto& m : action_)
    if (m.rows() != dim_ || m.cols() != dim_)
      throw DimensionMismatch("module: action matrix shape");
  if (!validate) return;
  /* the linear map a -> act(a) is an algebra map iff it respects products
     with a generating set; generator products span the algebra */
  RatMatrix id = RatMatrix::identity(dim_);
  if (a.dim() > 0 && act(a.unit()) != id) throw Error("module: unit does not act as identity");
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (const auto& g : a.generators()) {
      RatMatrix lhs = action_[i] * act(g);
      RatMatrix rhs = act(a.multiply(a.basis_element(i), g));
      if (lhs != rhs) throw Error("module: action violates structure constants");
    }
  }
}

RatMatrix AModule::act(const RatVec& a) const {
  RatMatrix m(dim_, dim_);
  for (std::size_t k = 0; k < a.size(); ++k)
    if (a[k] != 0) m = m + action_[k].scaled(a[k]);
  return m;
}

namespace {

const AModulePtr& module_memo(const std::string& key, const AlgebraPtr& keep,
                              const std::function<AModulePtr()>& compute) {
  static std::mutex mu;
  static std::map<std::string, AModulePtr> cache;
  static std::vector<AlgebraPtr> keepalive;
  {
    std::scoped_lock lock(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  AModulePtr value = compute();
  std::scoped_lock lock(mu);
  keepalive.push_back(keep);
  auto [it, fresh] = cache.emplace(key, std::move(value));
  return it->second;
}

std::string algebra_key(const AlgebraPtr& a, const char* tag, std::size_t i) {
  std::ostringstream os;
  os << static_cast<const void*>(a.get()) << "#" << tag << i;
  return os.str();
}

}  // namespace

AModulePtr AModule::zero(AlgebraPtr owner) {
  return module_memo(algebra_key(owner, "zero", 0), owner, [&] {
    std::vector<RatMatrix> act(owner->dim(), RatMatrix(0, 0));
    return std::make_shared<AModule>(owner, std::move(act), false);
  });
}

AModulePtr AModule::regular(AlgebraPtr owner) {
  return module_memo(algebra_key(owner, "reg", 0), owner, [&] {
    std::vector<RatMatrix> act;
    for (std::size_t k = 0; k < owner->dim(); ++k)
      act.push_back(owner->right_mult_matrix(owner->basis_element(k)));
    return std::make_shared<AModule>(owner, std::move(act));
  });
}

AModulePtr AModule::direct_sum(const AModule& a, const AModule& b) {
  if (a.owner() != b.owner()) throw OwnerMismatch("direct_sum: owners differ");
  std::vector<RatMatrix> act;
  for (std::size_t k = 0; k < a.owner()->dim(); ++k) {
    RatMatrix m(a.dim() + b.dim(), a.dim() + b.dim());
    for (std::size_t i = 0; i < a.dim(); ++i)
      for (std::size_t j = 0; j < a.dim(); ++j) m.at(i, j) = a.basis_action(k).at(i, j);
    for (std::size_t i = 0; i < b.dim(); ++i)
      for (std::size_t j = 0; j < b.dim(); ++j)
        m.at(a.dim() + i, a.dim() + j) = b.basis_action(k).at(i, j);
    act.push_back(std::move(m));
  }
  return std::make_shared<AModule>(a.owner(), std::move(act), false);
}

AModulePtr AModule::direct_sum(AlgebraPtr owner, const std::vector<AModulePtr>& parts) {
  AModulePtr acc = zero(owner);
  for (const auto& p : parts) acc = direct_sum(*acc, *p);
  return acc;
}

DimVector AModule::dim_vector() const {
  DimVector dv;
  for (const auto& e : owner_->idempotents())
    dv.push_back(static_cast<long>(rank(act(e))));
  return dv;
}

/* ------------------------------ hom spaces ---------------------------- */

namespace {

/* weight decomposition of a module: row bases of the images of the
   idempotent projectors, stacked into an invertible change of basis */
struct WeightSplit {
  RatMatrix to_weight;    /* x_weight = x * from? see below */
  RatMatrix from_weight;  /* inverse */
  std::vector<std::size_t> sizes;
  std::vector<std::size_t> offsets;
};

WeightSplit weight_split(const AModule& m) {
  const Algebra& a = *m.owner();
  WeightSplit w;
  std::vector<RatVec> rows;
  for (const auto& e : a.idempotents()) {
    Subspace img = row_space(m.act(e));
    w.offsets.push_back(rows.size());
    w.sizes.push_back(img.dim());
    for (std::size_t t = 0; t < img.dim(); ++t) rows.push_back(img.basis().row(t));
  }
  if (rows.size() != m.dim()) throw Error("weight_split: weights do not span");
  /* rows form the basis; from_weight maps weight coords to module coords */
  w.from_weight = RatMatrix::from_rows(m.dim(), rows);
  w.to_weight = inverse(w.from_weight);
  return w;
}

}  // namespace

std::vector<RatMatrix> hom_space(const AModule& m, const AModule& n) {
  if (m.owner() != n.owner()) throw OwnerMismatch("hom_space: owners differ");
  const Algebra& a = *m.owner();
  std::size_t dm = m.dim(), dn = n.dim();
  if (dm == 0 || dn == 0) return {};

  /* an intertwiner is block diagonal across the weight spaces, which deals
     with the idempotent generators structurally */
  WeightSplit wm = weight_split(m), wn = weight_split(n);
  std::size_t nblocks = wm.sizes.size();
  std::vector<std::size_t> block_offset(nblocks + 1, 0);
  for (std::size_t b = 0; b < nblocks; ++b)
    block_offset[b + 1] = block_offset[b] + wm.sizes[b] * wn.sizes[b];
  std::size_t unknowns = block_offset[nblocks];
  if (unknowns == 0) return {};

  std::vector<const RatVec*> arrow_gens;
  for (const auto& g : a.generators()) {
    bool is_idem = false;
    for (const auto& e : a.idempotents())
      if (g == e) is_idem = true;
    if (!is_idem) arrow_gens.push_back(&g);
  }

  /* conjugated actions in weight coordinates */
  auto conj = [](const WeightSplit& w, const RatMatrix& act) {
    return w.from_weight * act * w.to_weight;
  };

  RatMatrix sys(arrow_gens.size() * dm * dn, unknowns);
  std::size_t row = 0;
  for (const RatVec* g : arrow_gens) {
    RatMatrix am = conj(wm, m.act(*g)), an = conj(wn, n.act(*g));
    /* constraint (am F' - F' an)[i][j] = 0 over block unknowns */
    for (std::size_t i = 0; i < dm; ++i)
      for (std::size_t j = 0; j < dn; ++j) {
        bool nonzero = false;
        for (std::size_t b = 0; b < nblocks; ++b) {
          std::size_t moff = wm.offsets[b], noff = wn.offsets[b];
          for (std::size_t s = 0; s < wm.sizes[b]; ++s) {
            const Rat& c = am.at(i, moff + s);
            if (c == 0) continue;
            /* F'[moff+s][j] contributes when j is in block b of n */
            if (j >= noff && j < noff + wn.sizes[b]) {
              sys.at(row, block_offset[b] + s * wn.sizes[b] + (j - noff)) += c;
              nonzero = true;
            }
          }
          if (i >= moff && i < moff + wm.sizes[b]) {
            for (std::size_t t = 0; t < wn.sizes[b]; ++t) {
              const Rat& c = an.at(noff + t, j);
              if (c == 0) continue;
              sys.at(row, block_offset[b] + (i - moff) * wn.sizes[b] + t) -= c;
              nonzero = true;
            }
          }
        }
        if (nonzero) ++row;
      }
  }
  RatMatrix trimmed(row, unknowns);
  for (std::size_t r2 = 0; r2 < row; ++r2) trimmed.set_row(r2, sys.row(r2));
  Subspace k = kernel(trimmed);

  /* back to module coordinates, canonical basis of the flattened span */
  std::vector<RatVec> flats;
  for (std::size_t bidx = 0; bidx < k.dim(); ++bidx) {
    RatVec sol = k.basis().row(bidx);
    RatMatrix fprime(dm, dn);
    for (std::size_t b = 0; b < nblocks; ++b)
      for (std::size_t s = 0; s < wm.sizes[b]; ++s)
        for (std::size_t t = 0; t < wn.sizes[b]; ++t)
          fprime.at(wm.offsets[b] + s, wn.offsets[b] + t) =
              sol[block_offset[b] + s * wn.sizes[b] + t];
    RatMatrix f = wm.to_weight * fprime * wn.from_weight;
    RatVec flat(dm * dn);
    for (std::size_t i = 0; i < dm; ++i)
      for (std::size_t j = 0; j < dn; ++j) flat[i * dn + j] = f.at(i, j);
    flats.push_back(std::move(flat));
  }
  Subspace canonical(dm * dn, flats);
  std::vector<RatMatrix> basis;
  for (std::size_t bidx = 0; bidx < canonical.dim(); ++bidx) {
    RatVec flat = canonical.basis().row(bidx);
    RatMatrix f(dm, dn);
    for (std::size_t i = 0; i < dm; ++i)
      for (std::size_t j = 0; j < dn; ++j) f.at(i, j) = flat[i * dn + j];
    basis.push_back(std::move(f));
  }
  return basis;
}

std::size_t hom_dim(const AModule& m, const AModule& n) { return hom_space(m, n).size(); }

namespace {

RatVec flatten(const RatMatrix& m) {
  RatVec v(m.rows() * m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) v[i * m.cols() + j] = m.at(i, j);
  return v;
}

}  // namespace

EndAlgebra endomorphism_algebra(const AModule& m) {
  auto mod = std::make_shared<AModule>(m);  /* copy; modules are immutable */
  std::vector<RatMatrix> homs = hom_space(m, m);
  std::size_t r = homs.size();
  std::size_t dm = m.dim();
  if (r == 0) {
    auto alg = std::make_shared<Algebra>(std::vector<std::string>{},
                                         std::vector<std::vector<RatVec>>{}, RatVec{},
                                         std::vector<RatVec>{}, "End");
    return {alg, {}, mod};
  }
  std::vector<RatVec> flat;
  for (const auto& h : homs) flat.push_back(flatten(h));
  Subspace space(dm * dm, flat);
  /* b_i b_j = "apply j then i": row-vector matrices compose as M_j * M_i */
  std::vector<std::vector<RatVec>> mult(r, std::vector<RatVec>(r));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j)
      mult[i][j] = space.coordinates(flatten(homs[j] * homs[i]));
  RatVec unit = space.coordinates(flatten(RatMatrix::identity(dm)));
  std::vector<std::string> names;
  for (std::size_t i = 0; i < r; ++i) names.push_back("f" + std::to_string(i));
  auto alg = std::make_shared<Algebra>(std::move(names), std::move(mult), unit,
                                       std::vector<RatVec>{unit}, "End", false);
  return {alg, std::move(homs), mod};
}

std::vector<RatMatrix> rad_hom(const AModule& m, const AModule& n) {
  if (m.owner() != n.owner()) throw OwnerMismatch("rad_hom: owners differ");
  if (m.dim() == 0 || n.dim() == 0) return {};
  AModulePtr s = AModule::direct_sum(m, n);
  EndAlgebra e = endomorphism_algebra(*s);
  Subspace rad = jacobson_radical(*e.algebra);
  std::vector<RatVec> blocks;
  for (std::size_t i = 0; i < rad.dim(); ++i) {
    RatVec coords = rad.basis().row(i);
    RatMatrix big(s->dim(), s->dim());
    for (std::size_t k = 0; k < coords.size(); ++k)
      if (coords[k] != 0) big = big + e.hom_basis[k].scaled(coords[k]);
    /* the (m,n) block: rows in the m part, columns in the n part */
    RatMatrix blk(m.dim(), n.dim());
    for (std::size_t i2 = 0; i2 < m.dim(); ++i2)
      for (std::size_t j2 = 0; j2 < n.dim(); ++j2) blk.at(i2, j2) = big.at(i2, m.dim() + j2);
    blocks.push_back(flatten(blk));
  }
  Subspace blockspace(m.dim() * n.dim(), blocks);
  std::vector<RatMatrix> out;
  for (std::size_t i = 0; i < blockspace.dim(); ++i) {
    RatVec flat = blockspace.basis().row(i);
    RatMatrix f(m.dim(), n.dim());
    for (std::size_t i2 = 0; i2 < m.dim(); ++i2)
      for (std::size_t j2 = 0; j2 < n.dim(); ++j2) f.at(i2, j2) = flat[i2 * n.dim() + j2];
    out.push_back(std::move(f));
  }
  return out;
}

/* --------------------------- sub and quotient ------------------------- */

SubQuotient sub_quotient_of_subspace(const AModule& m, const Subspace& s) {
  const Algebra& a = *m.owner();
  /* stability check on generators */
  for (std::size_t i = 0; i < s.dim(); ++i)
    for (const auto& g : a.generators())
      if (!s.contains(s.basis().row(i) * m.act(g)))
        throw Error("sub_quotient: subspace not action-stable");

  SubQuotient out{s, nullptr, s.basis(), nullptr, RatMatrix()};
  std::size_t sd = s.dim(), md = m.dim();

  std::vector<RatMatrix> sub_act;
  for (std::size_t k = 0; k < a.dim(); ++k) {
    RatMatrix sk(sd, sd);
    for (std::size_t i = 0; i < sd; ++i)
      sk.set_row(i, s.coordinates(s.basis().row(i) * m.basis_action(k)));
    sub_act.push_back(std::move(sk));
  }
  out.sub = std::make_shared<AModule>(m.owner(), std::move(sub_act), false);

  std::vector<bool> is_pivot(md, false);
  for (auto p : s.pivots()) is_pivot[p] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t j = 0; j < md; ++j)
    if (!is_pivot[j]) free_cols.push_back(j);
  std::size_t qd = free_cols.size();

  out.proj = RatMatrix(md, qd);
  for (std::size_t i = 0; i < md; ++i) {
    RatVec e(md);
    e[i] = 1;
    RatVec red = s.reduce(e);
    for (std::size_t t = 0; t < qd; ++t) out.proj.at(i, t) = red[free_cols[t]];
  }
  std::vector<RatMatrix> q_act;
  for (std::size_t k = 0; k < a.dim(); ++k) {
    RatMatrix qk(qd, qd);
    for (std::size_t t = 0; t < qd; ++t) {
      RatVec e(md);
      e[free_cols[t]] = 1;
      qk.set_row(t, (e * m.basis_action(k)) * out.proj);
    }
    q_act.push_back(std::move(qk));
  }
  out.quot = std::make_shared<AModule>(m.owner(), std::move(q_act), false);
  return out;
}

SubQuotient sub_quotient(const AModule& m, const std::vector<RatVec>& generators) {
  const Algebra& a = *m.owner();
  Subspace s(m.dim(), generators);
  for (;;) {
    std::vector<RatVec> next;
    for (std::size_t i = 0; i < s.dim(); ++i) {
      RatVec v = s.basis().row(i);
      next.push_back(v);
      for (const auto& g : a.generators()) next.push_back(v * m.act(g));
    }
    Subspace s2(m.dim(), next);
    if (s2.dim() == s.dim()) break;
    s = s2;
  }
  return sub_quotient_of_subspace(m, s);
}

SubQuotient trace_submodule(const AModule& gen, const AModule& target) {
  std::vector<RatVec> rows;
  for (const auto& h : hom_space(gen, target))
    for (std::size_t i = 0; i < h.rows(); ++i) rows.push_back(h.row(i));
  return sub_quotient_of_subspace(target, Subspace(target.dim(), rows));
}

SubQuotient reject_submodule(const AModule& m, const AModule& cogen) {
  auto homs = hom_space(m, cogen);
  if (homs.empty())
    return sub_quotient_of_subspace(m, Subspace::full(m.dim()));
  RatMatrix stacked = homs[0];
  for (std::size_t i = 1; i < homs.size(); ++i) stacked = stacked.hstack(homs[i]);
  return sub_quotient_of_subspace(m, left_kernel(stacked));
}

AModulePtr nested_quotient(const AModule& m, const Subspace& big, const Subspace& small) {
  if (!big.contains(small)) throw Error("nested_quotient: not nested");
  SubQuotient bigq = sub_quotient_of_subspace(m, big);
  std::vector<RatVec> small_in_big;
  for (std::size_t i = 0; i < small.dim(); ++i)
    small_in_big.push_back(big.coordinates(small.basis().row(i)));
  SubQuotient inner = sub_quotient_of_subspace(*bigq.sub, Subspace(big.dim(), small_in_big));
  return inner.quot;
}

/* -------------------- bricks and indecomposability -------------------- */

bool is_brick(const AModule& m) {
  if (m.dim() == 0) return false;
  EndAlgebra e = endomorphism_algebra(m);
  return is_division_algebra(*e.algebra);
}

bool is_indecomposable(const AModule& m) {
  if (m.dim() == 0) return false;
  EndAlgebra e = endomorphism_algebra(m);
  return is_local_algebra(*e.algebra);
}

bool indec_isomorphic(const AModule& m, const AModule& n) {
  if (&m == &n) return true;
  if (m.dim() != n.dim()) return false;
  if (m.dim_vector() != n.dim_vector()) return false;
  std::size_t h = hom_dim(m, n);
  if (h == 0) return false;
  return rad_hom(m, n).size() < h;  /* between indecomposables rad = non-isos */
}

std::vector<std::pair<AModulePtr, std::size_t>> indecompose(const AModule& m) {
  std::vector<std::pair<AModulePtr, std::size_t>> out;
  if (m.dim() == 0) return out;
  EndAlgebra e = endomorphism_algebra(m);
  std::vector<RatVec> idems = primitive_idempotents(*e.algebra);
  std::vector<AModulePtr> pieces;
  for (const auto& coords : idems) {
    RatMatrix f(m.dim(), m.dim());
    for (std::size_t k = 0; k < coords.size(); ++k)
      if (coords[k] != 0) f = f + e.hom_basis[k].scaled(coords[k]);
    SubQuotient sq = sub_quotient_of_subspace(m, row_space(f));
    pieces.push_back(sq.sub);
  }
  for (const auto& p : pieces) {
    bool found = false;
    for (auto& [q, mult] : out)
      if (indec_isomorphic(*p, *q)) {
        ++mult;
        found = true;
        break;
      }
    if (!found) out.emplace_back(p, 1);
  }
  return out;
}

bool is_semibrick(const AModule& m) {
  if (m.dim() == 0) return true;  /* the empty semibrick */
  auto parts = indecompose(m);
  for (const auto& [p, mult] : parts) {
    if (mult != 1) return false;
    if (!is_brick(*p)) return false;
  }
  for (std::size_t i = 0; i < parts.size(); ++i)
    for (std::size_t j = 0; j < parts.size(); ++j) {
      if (i == j) continue;
      if (hom_dim(*parts[i].first, *parts[j].first) != 0) return false;
    }
  return true;
}

bool modules_isomorphic(const AModule& m, const AModule& n) {
  if (m.owner() != n.owner()) throw OwnerMismatch("modules_isomorphic");
  if (m.dim() != n.dim()) return false;
  if (m.dim() == 0) return true;
  if (m.dim_vector() != n.dim_vector()) return false;
  auto pm = indecompose(m), pn = indecompose(n);
  if (pm.size() != pn.size()) return false;
  std::vector<bool> used(pn.size(), false);
  for (const auto& [p, mult] : pm) {
    bool matched = false;
    for (std::size_t j = 0; j < pn.size(); ++j) {
      if (used[j]) continue;
      if (pn[j].second == mult && indec_isomorphic(*p, *pn[j].first)) {
        used[j] = true;
        matched = true;
        break;
      }
    }
    if (!matched) return false;
  }
  return true;
}

/* --------------- projectives, injectives, simple modules -------------- */

namespace {

Subspace projective_subspace(const Algebra& a, std::size_t i) {
  return row_space(a.left_mult_matrix(a.idempotents()[i]));
}

Subspace left_ideal_subspace(const Algebra& a, std::size_t i) {
  return row_space(a.right_mult_matrix(a.idempotents()[i]));
}

}  // namespace

AModulePtr projective_module(const AlgebraPtr& a, std::size_t i) {
  return module_memo(algebra_key(a, "proj", i), a, [&] {
    return sub_quotient_of_subspace(*AModule::regular(a), projective_subspace(*a, i)).sub;
  });
}

namespace {
AModulePtr simple_module_impl(const AlgebraPtr& a, std::size_t i);
AModulePtr injective_module_impl(const AlgebraPtr& a, std::size_t i);
}  // namespace

AModulePtr simple_module(const AlgebraPtr& a, std::size_t i) {
  return module_memo(algebra_key(a, "simple", i), a, [&]() -> AModulePtr {
    return simple_module_impl(a, i);
  });
}

namespace {
AModulePtr simple_module_impl(const AlgebraPtr& a, std::size_t i) {
  AModulePtr p = projective_module(a, i);
  Subspace rad = jacobson_radical(*a);
  std::vector<RatVec> radgen;
  for (std::size_t s = 0; s < p->dim(); ++s)
    for (std::size_t r = 0; r < rad.dim(); ++r) {
      RatVec e(p->dim());
      e[s] = 1;
      radgen.push_back(e * p->act(rad.basis().row(r)));
    }
  return sub_quotient(*p, radgen).quot;
}
}  // namespace

AModulePtr injective_module(const AlgebraPtr& a, std::size_t i) {
  return module_memo(algebra_key(a, "inj", i), a,
                     [&]() -> AModulePtr { return injective_module_impl(a, i); });
}

namespace {
AModulePtr injective_module_impl(const AlgebraPtr& a, std::size_t i) {
  Subspace ae = left_ideal_subspace(*a, i);
  std::size_t d = ae.dim();
  std::vector<RatMatrix> act;
  for (std::size_t k = 0; k < a->dim(); ++k) {
    RatMatrix mk(d, d);
    for (std::size_t u = 0; u < d; ++u) {
      RatVec col = a->multiply(a->basis_element(k), ae.basis().row(u));
      RatVec coords = ae.coordinates(col);
      for (std::size_t t = 0; t < d; ++t) mk.at(t, u) = coords[t];
    }
    act.push_back(std::move(mk));
  }
  return std::make_shared<AModule>(a, std::move(act));
}
}  // namespace

RatMatrix projective_map(const Algebra& a, const RatVec& elt, std::size_t from,
                         std::size_t to) {
  Subspace pf = projective_subspace(a, from), pt = projective_subspace(a, to);
  RatVec check = a.multiply(a.multiply(a.idempotents()[to], elt), a.idempotents()[from]);
  if (check != elt) throw Error("projective_map: element not in the required corner");
  RatMatrix m(pf.dim(), pt.dim());
  for (std::size_t s = 0; s < pf.dim(); ++s)
    m.set_row(s, pt.coordinates(a.multiply(elt, pf.basis().row(s))));
  return m;
}

RatMatrix injective_map(const Algebra& a, const RatVec& elt, std::size_t from,
                        std::size_t to) {
  Subspace af = left_ideal_subspace(a, from), at = left_ideal_subspace(a, to);
  RatMatrix m(af.dim(), at.dim());
  for (std::size_t u = 0; u < at.dim(); ++u) {
    RatVec coords = af.coordinates(a.multiply(at.basis().row(u), elt));
    for (std::size_t t = 0; t < af.dim(); ++t) m.at(t, u) = coords[t];
  }
  return m;
}

/* ----------------------------- Euler pairing --------------------------- */

Rat euler_pair(const RatVec& theta, const AModule& m) {
  DimVector dv = m.dim_vector();
  return euler_pair_dimvec(theta, dv);
}

Rat euler_pair_dimvec(const RatVec& theta, const DimVector& dv) {
  if (theta.size() != dv.size()) throw DimensionMismatch("euler_pair: index mismatch");
  Rat acc = 0;
  for (std::size_t i = 0; i < dv.size(); ++i) acc += theta[i] * dv[i];
  return acc;
}

}  // namespace siltgeo
