#include "siltgeo/siltfan.hpp"

#include <algorithm>
#include <atomic>
#include <deque>
#include <sstream>
#include <thread>

#include "siltgeo/errors.hpp"

namespace siltgeo {

namespace {

std::string gvec_string(const GVector& g) {
  std::string s;
  for (long c : g) s += std::to_string(c) + ",";
  return s;
}

}  // namespace

std::string silting_key(const std::vector<TwoTerm>& summands) {
  std::vector<std::string> keys;
  for (const auto& s : summands) keys.push_back(gvec_string(s.g_vector()));
  std::sort(keys.begin(), keys.end());
  std::string out;
  for (const auto& k : keys) out += k + "|";
  return out;
}

SiltingAtlas SiltingAtlas::enumerate(AlgebraPtr a, std::size_t cap) {
  SiltingAtlas atlas;
  atlas.algebra_ = a;
  const std::size_t n = a->num_idempotents();

  std::vector<TwoTerm> start;
  for (std::size_t i = 0; i < n; ++i) start.push_back(TwoTerm::projective(a, i));
  std::sort(start.begin(), start.end(), twoterm_less);

  std::deque<std::size_t> queue;
  /* intern summands by g-vector: presilting complexes with equal g-vectors
     are isomorphic, and sharing one presentation keeps the hom caches hot */
  std::map<std::string, TwoTerm> interned;
  auto intern = [&](const TwoTerm& t) -> TwoTerm {
    std::string k = gvec_string(t.g_vector());
    auto it = interned.find(k);
    if (it != interned.end()) return it->second;
    interned.emplace(k, t);
    return t;
  };
  auto add_vertex = [&](std::vector<TwoTerm> summands) -> std::size_t {
    std::string key = silting_key(summands);
    auto it = atlas.index_.find(key);
    if (it != atlas.index_.end()) return it->second;
    AtlasVertex v;
    v.summands = std::move(summands);
    v.smc = smc_of_silting(v.summands);
    for (const auto& s : v.summands) {
      v.h0s.push_back(h0(s));
      v.hm1s.push_back(hminus1_nu(s));
    }
    v.key = key;
    atlas.vertices_.push_back(std::move(v));
    atlas.index_[key] = atlas.vertices_.size() - 1;
    queue.push_back(atlas.vertices_.size() - 1);
    return atlas.vertices_.size() - 1;
  };

  atlas.complete_ = true;
  add_vertex(start);
  while (!queue.empty()) {
    std::size_t vi = queue.front();
    queue.pop_front();
    /* copy: vertices_ may reallocate while mutating */
    std::vector<TwoTerm> summands = atlas.vertices_[vi].summands;
    SmcDatum smc = atlas.vertices_[vi].smc;
    for (std::size_t j = 0; j < summands.size(); ++j) {
      bool left = smc[j].plus && smc[j].plus->dim() > 0;
      if (atlas.vertices_.size() >= cap) {
        atlas.complete_ = false;
        break;
      }
      TwoTerm replacement =
          intern(mutate(summands, j, left ? MutDir::Left : MutDir::Right));
      std::vector<TwoTerm> next = summands;
      next[j] = replacement;
      std::sort(next.begin(), next.end(), twoterm_less);
      std::size_t di = add_vertex(std::move(next));
      if (left) {
        AtlasArrow arr;
        arr.src = vi;
        arr.dst = di;
        arr.index = j;
        arr.label = smc[j].plus;
        DimVector dv = smc[j].plus->dim_vector();
        arr.label_class = dv;
        atlas.arrows_.push_back(std::move(arr));
      }
    }
    if (!atlas.complete_) break;
  }
  if (!queue.empty()) atlas.complete_ = false;

  /* presiltings: all summand subsets of the enumerated vertices */
  std::map<std::string, std::size_t> pseen;
  for (std::size_t vi = 0; vi < atlas.vertices_.size(); ++vi) {
    const auto& summands = atlas.vertices_[vi].summands;
    std::size_t k = summands.size();
    for (std::size_t mask = 0; mask < (std::size_t(1) << k); ++mask) {
      AtlasPresilting p;
      p.vertex = vi;
      for (std::size_t j = 0; j < k; ++j)
        if (mask & (std::size_t(1) << j)) {
          p.summands.push_back(summands[j]);
          p.positions.push_back(j);
        }
      p.key = silting_key(p.summands);
      if (pseen.count(p.key)) continue;
      pseen[p.key] = atlas.presiltings_.size();
      atlas.presiltings_.push_back(std::move(p));
    }
  }
  return atlas;
}

std::optional<std::size_t> SiltingAtlas::find_vertex(const std::string& key) const {
  auto it = index_.find(key);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::size_t> SiltingAtlas::bongartz_vertex(const AtlasPresilting& p) const {
  std::vector<std::string> want;
  for (const auto& s : p.summands) want.push_back(gvec_string(s.g_vector()));
  std::sort(want.begin(), want.end());
  for (std::size_t vi = 0; vi < vertices_.size(); ++vi) {
    const auto& v = vertices_[vi];
    /* does v contain p, and are all other parts plus-type? */
    std::vector<bool> used(v.summands.size(), false);
    bool ok = true;
    for (const auto& w : want) {
      bool found = false;
      for (std::size_t j = 0; j < v.summands.size(); ++j) {
        if (used[j]) continue;
        if (gvec_string(v.summands[j].g_vector()) == w) {
          used[j] = true;
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
    for (std::size_t j = 0; j < v.summands.size(); ++j) {
      if (used[j]) continue;
      if (!(v.smc[j].plus && v.smc[j].plus->dim() > 0)) {
        ok = false;
        break;
      }
    }
    if (ok) return vi;
  }
  return std::nullopt;
}

std::optional<std::size_t> SiltingAtlas::bongartz_vertex(
    const std::vector<TwoTerm>& u) const {
  AtlasPresilting p;
  p.summands = u;
  return bongartz_vertex(p);
}

std::optional<std::vector<TwoTerm>> bongartz_from_atlas(const SiltingAtlas& atlas,
                                                        const std::vector<TwoTerm>& u) {
  if (!atlas.complete()) return std::nullopt;
  auto bv = atlas.bongartz_vertex(u);
  if (!bv) return std::nullopt;
  const auto& v = atlas.vertices()[*bv];
  std::vector<bool> used(v.summands.size(), false);
  std::vector<TwoTerm> ordered;
  for (const auto& x : u) {
    std::string want = gvec_string(x.g_vector());
    for (std::size_t j = 0; j < v.summands.size(); ++j) {
      if (used[j]) continue;
      if (gvec_string(v.summands[j].g_vector()) == want) {
        used[j] = true;
        ordered.push_back(v.summands[j]);
        break;
      }
    }
  }
  if (ordered.size() != u.size()) return std::nullopt;
  std::vector<TwoTerm> extras;
  for (std::size_t j = 0; j < v.summands.size(); ++j)
    if (!used[j]) extras.push_back(v.summands[j]);
  std::sort(extras.begin(), extras.end(), twoterm_less);
  ordered.insert(ordered.end(), extras.begin(), extras.end());
  return ordered;
}

RatCone silting_cone(const SiltingAtlas& atlas, const AtlasPresilting& p) {
  std::vector<RatVec> rays;
  for (const auto& s : p.summands) {
    GVector g = s.g_vector();
    RatVec r;
    for (long c : g) r.push_back(Rat(c));
    rays.push_back(r);
  }
  return RatCone::from_rays(atlas.algebra()->num_idempotents(), rays);
}

GenFan gfan(const SiltingAtlas& atlas) {
  GenFan f;
  f.ambient = atlas.algebra()->num_idempotents();
  for (const auto& p : atlas.presiltings()) f.insert(silting_cone(atlas, p));
  std::sort(f.cones.begin(), f.cones.end(),
            [](const RatCone& a, const RatCone& b) { return a.key() < b.key(); });
  return f;
}

std::optional<Located> cone_locate(const SiltingAtlas& atlas, const RatVec& theta) {
  const std::size_t n = atlas.algebra()->num_idempotents();
  if (theta.size() != n) throw DimensionMismatch("cone_locate: theta length");
  for (std::size_t pi = 0; pi < atlas.presiltings().size(); ++pi) {
    const auto& p = atlas.presiltings()[pi];
    if (p.positions.size() != n) continue;  /* only solve once per silting */
    const auto& v = atlas.vertices()[p.vertex];
    RatMatrix g(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      GVector gv = v.summands[i].g_vector();
      for (std::size_t j = 0; j < n; ++j) g.at(i, j) = gv[j];
    }
    auto c = solve_left(g, theta);
    if (!c) continue;
    bool nonneg = true;
    for (const auto& x : *c)
      if (x < 0) {
        nonneg = false;
        break;
      }
    if (!nonneg) continue;
    /* the support subset gives the open cone containing theta */
    std::vector<std::size_t> supp;
    for (std::size_t i = 0; i < n; ++i)
      if ((*c)[i] > 0) supp.push_back(i);
    std::vector<TwoTerm> sub;
    for (auto i : supp) sub.push_back(v.summands[i]);
    std::string key = silting_key(sub);
    for (std::size_t qi = 0; qi < atlas.presiltings().size(); ++qi)
      if (atlas.presiltings()[qi].key == key) return Located{qi, *c};
    throw Error("cone_locate: subset missing from the presilting table");
  }
  return std::nullopt;
}

std::size_t BrickRegistry::id_of(const AModulePtr& brick) {
  for (std::size_t i = 0; i < bricks_.size(); ++i) {
    if (bricks_[i]->dim() != brick->dim()) continue;
    if (bricks_[i]->dim_vector() != brick->dim_vector()) continue;
    if (indec_isomorphic(*bricks_[i], *brick)) return i;
  }
  bricks_.push_back(brick);
  return bricks_.size() - 1;
}

namespace {

TorsionTriple triple_of_presilting(const SiltingAtlas& atlas, const AtlasPresilting& p,
                                   const AModule& m) {
  AlgebraPtr a = atlas.algebra();
  const std::size_t n = a->num_idempotents();

  const AtlasVertex& home = atlas.vertices()[p.vertex];
  std::vector<AModulePtr> h0s, hm1s;
  for (auto pos : p.positions) {
    h0s.push_back(home.h0s[pos]);
    hm1s.push_back(home.hm1s[pos]);
  }
  AModulePtr h0v = AModule::direct_sum(a, h0s);
  AModulePtr hm1v = AModule::direct_sum(a, hm1s);

  TorsionTriple out{Subspace(m.dim()), Subspace(m.dim()), nullptr, nullptr, nullptr,
                    {}, {}, {}};
  SubQuotient tq = trace_submodule(*h0v, m);
  SubQuotient rq = reject_submodule(m, *hm1v);
  out.t = tq.space;
  out.tbar = rq.space;
  if (!out.tbar.contains(out.t))
    throw Error("torsion triple: trace part not inside the reject part");
  out.t_mod = tq.sub;
  out.f_mod = rq.quot;
  out.w_mod = nested_quotient(m, out.tbar, out.t);

  if (out.w_mod->dim() > 0) {
    /* supports: solve [w] over the smc basis of the maximal completion */
    auto bv = atlas.bongartz_vertex(p);
    std::vector<TwoTerm> bongartz;
    SmcDatum smc;
    std::vector<bool> off(n, true);
    if (bv) {
      bongartz = atlas.vertices()[*bv].summands;
      smc = atlas.vertices()[*bv].smc;
    } else {
      bongartz = bongartz_completion(a, p.summands);
      smc = smc_of_silting(bongartz);
    }
    /* mark the positions of p inside the bongartz vertex */
    std::vector<bool> is_u(bongartz.size(), false);
    for (const auto& s : p.summands)
      for (std::size_t j = 0; j < bongartz.size(); ++j)
        if (!is_u[j] && twoterm_indec_isomorphic(s, bongartz[j])) {
          is_u[j] = true;
          break;
        }
    RatMatrix cls(n, n);
    for (std::size_t j = 0; j < n; ++j) {
      DimVector cv = smc[j].class_vector(n);
      for (std::size_t k = 0; k < n; ++k) cls.at(j, k) = cv[k];
    }
    DimVector wdv = out.w_mod->dim_vector();
    RatVec wvec;
    for (long c : wdv) wvec.push_back(Rat(c));
    auto coeffs = solve_left(cls, wvec);
    if (!coeffs) throw NegativeMultiplicity("w class not in the smc lattice");
    std::vector<std::pair<DimVector, AModulePtr>> pieces;
    for (std::size_t j = 0; j < n; ++j) {
      const Rat& c = (*coeffs)[j];
      if (c == 0) continue;
      if (c < 0 || denominator(c) != 1)
        throw NegativeMultiplicity("negative or fractional smc multiplicity");
      if (is_u[j])
        throw NegativeMultiplicity("w is supported on the presilting indices");
      AModulePtr brick = smc[j].plus->dim() > 0 ? smc[j].plus : smc[j].minus;
      pieces.emplace_back(smc[j].class_vector(n), brick);
    }
    std::sort(pieces.begin(), pieces.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (auto& [cv, brick] : pieces) {
      out.supp_classes.push_back(cv);
      out.supp_bricks.push_back(brick);
    }
  }
  return out;
}

void assign_supp_ids(TorsionTriple& t, BrickRegistry& reg) {
  t.supp_ids.clear();
  for (const auto& b : t.supp_bricks) t.supp_ids.push_back(reg.id_of(b));
  std::sort(t.supp_ids.begin(), t.supp_ids.end());
}

}  // namespace

TorsionTriple torsion_triple_at(const SiltingAtlas& atlas, std::size_t presilting,
                                const AModule& m, BrickRegistry& reg) {
  TorsionTriple t = triple_of_presilting(atlas, atlas.presiltings().at(presilting), m);
  assign_supp_ids(t, reg);
  return t;
}

TorsionTriple torsion_triple(const SiltingAtlas& atlas, const RatVec& theta,
                             const AModule& m, BrickRegistry& reg) {
  auto loc = cone_locate(atlas, theta);
  if (!loc) throw NotLocated("theta is not in an enumerated silting cone");
  return torsion_triple_at(atlas, loc->presilting, m, reg);
}

const MtfClass& MtfFan::class_of(const RatVec& theta) const {
  for (const auto& c : classes)
    if (c.closure.contains_in_relative_interior(theta)) return c;
  throw NotLocated("no M-TF class has theta in its relative interior");
}

MtfFan mtf_fan(const SiltingAtlas& atlas, const AModule& m, std::size_t threads) {
  if (!atlas.complete()) throw IncompleteAtlas("mtf_fan needs a complete atlas");
  const std::size_t n = atlas.algebra()->num_idempotents();
  const auto& ps = atlas.presiltings();

  /* triple on a relative interior point of every g-fan cone; bricks are
     attached first and ids assigned serially, so threading never touches
     the registry */
  std::vector<TorsionTriple> data(ps.size());
  if (threads <= 1) {
    for (std::size_t i = 0; i < ps.size(); ++i)
      data[i] = triple_of_presilting(atlas, ps[i], m);
  } else {
    std::vector<std::thread> pool;
    std::atomic<std::size_t> next{0};
    for (std::size_t t = 0; t < threads; ++t)
      pool.emplace_back([&] {
        for (;;) {
          std::size_t i = next.fetch_add(1);
          if (i >= ps.size()) break;
          data[i] = triple_of_presilting(atlas, ps[i], m);
        }
      });
    for (auto& th : pool) th.join();
  }
  BrickRegistry reg;
  for (auto& t : data) assign_supp_ids(t, reg);

  /* group cones by class data */
  std::vector<std::vector<std::size_t>> groups;
  for (std::size_t i = 0; i < ps.size(); ++i) {
    bool placed = false;
    for (auto& g : groups)
      if (data[g.front()].same_class(data[i])) {
        g.push_back(i);
        placed = true;
        break;
      }
    if (!placed) groups.push_back({i});
  }

  MtfFan out;
  out.fan.ambient = n;
  for (const auto& g : groups) {
    std::vector<RatVec> rays;
    for (auto i : g) {
      RatCone c = silting_cone(atlas, ps[i]);
      for (const auto& r : c.rays()) rays.push_back(r);
    }
    RatCone closure = RatCone::from_rays(n, rays);
    for (const auto& cls : out.classes)
      if (cls.closure == closure)
        throw NonConvexClass("two distinct classes share a closure");
    out.classes.push_back({closure, data[g.front()]});
    out.fan.insert(closure);
  }

  /* certification: the relative interior of each closure meets exactly the
     cones of its own group */
  for (std::size_t i = 0; i < ps.size(); ++i) {
    RatCone c = silting_cone(atlas, ps[i]);
    RatVec z = c.relative_interior_point();
    for (const auto& cls : out.classes) {
      if (!cls.closure.contains_in_relative_interior(z)) continue;
      if (!cls.data.same_class(data[i]))
        throw NonConvexClass("class closure overlaps a foreign cone");
    }
  }
  FanCheck ck = fan_check(out.fan);
  if (!ck.is_fan || !ck.is_complete)
    throw NonConvexClass("M-TF closures do not form a complete fan: " + ck.detail);
  std::sort(out.classes.begin(), out.classes.end(),
            [](const MtfClass& a, const MtfClass& b) {
              return a.closure.key() < b.closure.key();
            });
  out.fan.cones.clear();
  for (const auto& c : out.classes) out.fan.insert(c.closure);
  return out;
}

std::vector<RatCone> wall(const SiltingAtlas& atlas, const AModule& m) {
  if (!atlas.complete()) throw IncompleteAtlas("wall needs a complete atlas");
  if (m.dim() == 0) return {RatCone::full_space(atlas.algebra()->num_idempotents())};
  MtfFan f = mtf_fan(atlas, m);
  std::vector<RatCone> out;
  for (const auto& cls : f.classes)
    if (cls.data.t.dim() == 0 && cls.data.tbar.dim() == m.dim())
      out.push_back(cls.closure);
  return out;
}

}  // namespace siltgeo
