#include "siltgeo/cones.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "siltgeo/errors.hpp"

namespace siltgeo {

RatVec primitive_scale(const RatVec& v) {
  BigInt l = 1, g = 0;
  for (const auto& c : v) l = boost::multiprecision::lcm(l, denominator(c));
  RatVec w(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    Rat s = v[i] * l;
    w[i] = s;
    g = boost::multiprecision::gcd(g, numerator(s));
  }
  if (g == 0) return w;
  for (auto& c : w) c /= Rat(g);
  return w;
}

namespace {

Rat dot(const RatVec& a, const RatVec& b) {
  Rat acc = 0;
  for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
  return acc;
}

RatVec sign_normalize(const RatVec& v) {
  for (const auto& c : v) {
    if (c > 0) return v;
    if (c < 0) return scaled(v, Rat(-1));
  }
  return v;
}

/* Double description: V-representation of {x : n.x >= 0 for n in normals}.
   Maintains the exact lineality L and extreme rays R modulo L, with the
   combinatorial adjacency test on tight sets. */
struct DD {
  std::size_t ambient;
  std::vector<RatVec> rays;
  std::vector<std::set<std::size_t>> tight;  /* processed normal indices */
  std::vector<RatVec> lin;                   /* current lineality basis */
  std::vector<RatVec> processed;

  explicit DD(std::size_t n) : ambient(n) {
    for (std::size_t i = 0; i < n; ++i) {
      RatVec e(n);
      e[i] = 1;
      lin.push_back(e);
    }
  }

  void add_halfspace(const RatVec& h) {
    if (is_zero(h)) return;
    std::size_t hidx = processed.size();
    processed.push_back(h);
    /* does h cut the lineality? */
    std::size_t cut = lin.size();
    for (std::size_t i = 0; i < lin.size(); ++i)
      if (dot(h, lin[i]) != 0) {
        cut = i;
        break;
      }
    if (cut != lin.size()) {
      RatVec l0 = scaled(lin[cut], Rat(1) / dot(h, lin[cut]));  /* h.l0 = 1 */
      std::vector<RatVec> newlin;
      for (std::size_t i = 0; i < lin.size(); ++i) {
        if (i == cut) continue;
        newlin.push_back(lin[i] - scaled(l0, dot(h, lin[i])));
      }
      lin = std::move(newlin);
      for (std::size_t r = 0; r < rays.size(); ++r)
        rays[r] = rays[r] - scaled(l0, dot(h, rays[r]));
      /* existing rays now lie on h; l0 becomes the ray off the hyperplane */
      for (auto& t : tight) t.insert(hidx);
      std::set<std::size_t> t0;
      for (std::size_t k = 0; k + 1 < processed.size(); ++k) t0.insert(k);
      rays.push_back(l0);
      tight.push_back(std::move(t0));
      return;
    }
    /* partition by sign */
    std::vector<std::size_t> pos, neg, zer;
    std::vector<Rat> val(rays.size());
    for (std::size_t r = 0; r < rays.size(); ++r) {
      val[r] = dot(h, rays[r]);
      if (val[r] > 0)
        pos.push_back(r);
      else if (val[r] < 0)
        neg.push_back(r);
      else
        zer.push_back(r);
    }
    if (neg.empty()) {
      for (auto r : zer) tight[r].insert(hidx);
      return;
    }
    std::vector<RatVec> nrays;
    std::vector<std::set<std::size_t>> ntight;
    for (auto r : pos) {
      nrays.push_back(rays[r]);
      ntight.push_back(tight[r]);
    }
    for (auto r : zer) {
      nrays.push_back(rays[r]);
      auto t = tight[r];
      t.insert(hidx);
      ntight.push_back(std::move(t));
    }
    for (auto p : pos)
      for (auto n : neg) {
        /* adjacency: no third ray's tight set contains tight(p) ∩ tight(n) */
        std::set<std::size_t> common;
        std::set_intersection(tight[p].begin(), tight[p].end(), tight[n].begin(),
                              tight[n].end(), std::inserter(common, common.begin()));
        bool adjacent = true;
        for (std::size_t r3 = 0; r3 < rays.size(); ++r3) {
          if (r3 == p || r3 == n) continue;
          if (std::includes(tight[r3].begin(), tight[r3].end(), common.begin(),
                            common.end())) {
            adjacent = false;
            break;
          }
        }
        if (!adjacent) continue;
        RatVec comb = scaled(rays[n], val[p]) - scaled(rays[p], val[n]);
        if (is_zero(comb)) continue;
        comb = primitive_scale(comb);
        common.insert(hidx);
        nrays.push_back(std::move(comb));
        ntight.push_back(std::move(common));
      }
    rays = std::move(nrays);
    tight = std::move(ntight);
    /* dedup identical rays */
    std::map<std::string, std::size_t> seen;
    std::vector<RatVec> dr;
    std::vector<std::set<std::size_t>> dt;
    for (std::size_t r = 0; r < rays.size(); ++r) {
      RatVec p = primitive_scale(rays[r]);
      std::ostringstream os;
      for (const auto& c : p) os << rat_to_string(c) << ",";
      auto [it, fresh] = seen.emplace(os.str(), dr.size());
      if (fresh) {
        dr.push_back(p);
        dt.push_back(tight[r]);
      }
    }
    rays = std::move(dr);
    tight = std::move(dt);
  }
};

std::pair<std::vector<RatVec>, Subspace> dd_solve(std::size_t ambient,
                                                  const std::vector<RatVec>& normals) {
  DD dd(ambient);
  for (const auto& h : normals) dd.add_halfspace(h);
  Subspace lin(ambient, dd.lin);
  return {dd.rays, lin};
}

}  // namespace

RatCone make_canonical(std::size_t ambient, std::vector<RatVec> gen_rays,
                       std::vector<RatVec> gen_lin) {
  RatCone c;
  c.ambient_ = ambient;

  /* polar: rays of {n : n.r >= 0, n.l = 0} give the inequalities, its
     lineality gives the span equations.  Redundant generators do not
     change the polar. */
  std::vector<RatVec> polar_constraints;
  for (const auto& r : gen_rays) polar_constraints.push_back(r);
  for (const auto& l : gen_lin) {
    polar_constraints.push_back(l);
    polar_constraints.push_back(scaled(l, Rat(-1)));
  }
  auto [polar_rays, polar_lin] = dd_solve(ambient, polar_constraints);
  for (std::size_t i = 0; i < polar_lin.dim(); ++i)
    c.equations_.push_back(sign_normalize(primitive_scale(polar_lin.basis().row(i))));
  std::set<std::string> seen2;
  for (const auto& n : polar_rays) {
    RatVec red = polar_lin.reduce(n);
    if (is_zero(red)) continue;
    red = primitive_scale(red);
    std::ostringstream os;
    for (const auto& q : red) os << rat_to_string(q) << ",";
    if (seen2.insert(os.str()).second) c.ineqs_.push_back(red);
  }
  std::sort(c.ineqs_.begin(), c.ineqs_.end());

  /* canonical rays and lineality both come from the canonical
     H-representation; generators may hide lineality in opposite rays */
  std::vector<RatVec> hrep = c.ineqs_;
  for (const auto& e : c.equations_) {
    hrep.push_back(e);
    hrep.push_back(scaled(e, Rat(-1)));
  }
  auto [vrays, vlin] = dd_solve(ambient, hrep);
  for (std::size_t i = 0; i < vlin.dim(); ++i)
    c.lineality_.push_back(sign_normalize(primitive_scale(vlin.basis().row(i))));
  std::set<std::string> seen;
  for (const auto& r : vrays) {
    RatVec red = vlin.reduce(r);
    if (is_zero(red)) continue;
    red = primitive_scale(red);
    std::ostringstream os;
    for (const auto& q : red) os << rat_to_string(q) << ",";
    if (seen.insert(os.str()).second) c.rays_.push_back(red);
  }
  std::sort(c.rays_.begin(), c.rays_.end());
  return c;
}

RatCone RatCone::from_rays(std::size_t ambient, const std::vector<RatVec>& rays,
                           const std::vector<RatVec>& lineality) {
  return make_canonical(ambient, rays, lineality);
}

RatCone RatCone::from_inequalities(std::size_t ambient,
                                   const std::vector<RatVec>& normals) {
  auto [rays, lin] = dd_solve(ambient, normals);
  std::vector<RatVec> linrows;
  for (std::size_t i = 0; i < lin.dim(); ++i) linrows.push_back(lin.basis().row(i));
  return make_canonical(ambient, rays, linrows);
}

RatCone RatCone::full_space(std::size_t ambient) {
  return from_inequalities(ambient, {});
}

RatCone RatCone::zero_cone(std::size_t ambient) { return from_rays(ambient, {}); }

std::size_t RatCone::dim() const { return ambient_ - equations_.size(); }

std::vector<RatVec> RatCone::normals() const {
  std::vector<RatVec> out = ineqs_;
  for (const auto& e : equations_) {
    out.push_back(e);
    out.push_back(scaled(e, Rat(-1)));
  }
  return out;
}

bool RatCone::contains(const RatVec& p) const {
  if (p.size() != ambient_) throw AmbientMismatch("cone membership");
  for (const auto& e : equations_)
    if (dot(e, p) != 0) return false;
  for (const auto& n : ineqs_)
    if (dot(n, p) < 0) return false;
  return true;
}

bool RatCone::contains_in_relative_interior(const RatVec& p) const {
  if (!contains(p)) return false;
  for (const auto& n : ineqs_)
    if (dot(n, p) == 0) return false;
  return true;
}

RatVec RatCone::relative_interior_point() const {
  RatVec p(ambient_);
  for (const auto& r : rays_) p = p + r;
  return p;
}

Subspace RatCone::span() const {
  std::vector<RatVec> rows = rays_;
  rows.insert(rows.end(), lineality_.begin(), lineality_.end());
  return Subspace(ambient_, rows);
}

Subspace RatCone::lineality_space() const { return Subspace(ambient_, lineality_); }

std::string RatCone::key() const {
  std::ostringstream os;
  auto emit = [&](const std::vector<RatVec>& vs, char tag) {
    os << tag << ":";
    for (const auto& v : vs) {
      for (const auto& c : v) os << rat_to_string(c) << ",";
      os << ";";
    }
  };
  emit(rays_, 'r');
  emit(lineality_, 'l');
  return os.str();
}

RatCone intersect(const RatCone& a, const RatCone& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw AmbientMismatch("cone intersection");
  std::vector<RatVec> normals = a.normals();
  for (const auto& n : b.normals()) normals.push_back(n);
  return RatCone::from_inequalities(a.ambient_dim(), normals);
}

bool cone_contains(const RatCone& big, const RatCone& small) {
  for (const auto& r : small.rays())
    if (!big.contains(r)) return false;
  for (const auto& l : small.lineality())
    if (!big.contains(l) || !big.contains(scaled(l, Rat(-1)))) return false;
  return true;
}

bool is_face_of(const RatCone& f, const RatCone& big) {
  if (!cone_contains(big, f)) return false;
  RatVec z = f.relative_interior_point();
  if (f.rays().empty()) z = RatVec(f.ambient_dim());
  std::vector<RatVec> cuts = big.normals();
  for (const auto& n : big.inequalities())
    if (dot(n, z) == 0) {
      cuts.push_back(scaled(n, Rat(-1)));
    }
  /* f must equal big cut by the inequalities tight at z */
  return RatCone::from_inequalities(big.ambient_dim(), cuts) == f;
}

std::vector<RatCone> all_faces(const RatCone& c) {
  /* faces correspond to the ray subsets cut out by tight inequality sets */
  std::vector<RatCone> out;
  std::set<std::string> seen_sets;
  std::vector<std::vector<std::size_t>> queue;
  auto key_of = [](const std::vector<std::size_t>& rs) {
    std::string k;
    for (auto r : rs) k += std::to_string(r) + ",";
    return k;
  };
  auto face_of_set = [&](const std::vector<std::size_t>& rs) {
    std::vector<RatVec> rays;
    for (auto r : rs) rays.push_back(c.rays()[r]);
    return RatCone::from_rays(c.ambient_dim(), rays, c.lineality());
  };

  std::vector<std::size_t> full(c.rays().size());
  for (std::size_t i = 0; i < full.size(); ++i) full[i] = i;
  queue.push_back(full);
  seen_sets.insert(key_of(full));
  while (!queue.empty()) {
    std::vector<std::size_t> rs = queue.back();
    queue.pop_back();
    RatCone f = face_of_set(rs);
    out.push_back(f);
    for (const auto& n : c.inequalities()) {
      std::vector<std::size_t> child;
      bool cuts = false;
      for (auto r : rs) {
        if (dot(n, c.rays()[r]) == 0)
          child.push_back(r);
        else
          cuts = true;
      }
      if (!cuts) continue;
      std::string k = key_of(child);
      if (seen_sets.insert(k).second) queue.push_back(child);
    }
  }
  std::sort(out.begin(), out.end(),
            [](const RatCone& a, const RatCone& b) { return a.key() < b.key(); });
  return out;
}

/* -------------------------------- fans -------------------------------- */

bool GenFan::contains_cone(const RatCone& c) const {
  for (const auto& x : cones)
    if (x == c) return true;
  return false;
}

void GenFan::insert(const RatCone& c) {
  if (!contains_cone(c)) cones.push_back(c);
}

std::vector<RatCone> GenFan::maximal_cones() const {
  std::vector<RatCone> out;
  for (const auto& c : cones) {
    bool maximal = true;
    for (const auto& d : cones) {
      if (&c == &d || c == d) continue;
      if (cone_contains(d, c)) {
        maximal = false;
        break;
      }
    }
    if (maximal) out.push_back(c);
  }
  return out;
}

GenFan fan_from_cones(std::size_t ambient, const std::vector<RatCone>& cones) {
  GenFan f;
  f.ambient = ambient;
  for (const auto& c : cones)
    for (const auto& face : all_faces(c)) f.insert(face);
  std::sort(f.cones.begin(), f.cones.end(),
            [](const RatCone& a, const RatCone& b) { return a.key() < b.key(); });
  return f;
}

FanCheck fan_check(const GenFan& f) {
  FanCheck out;
  /* face closure */
  for (const auto& c : f.cones)
    for (const auto& face : all_faces(c))
      if (!f.contains_cone(face)) {
        out.detail = "missing face of a cone";
        return out;
      }
  /* pairwise intersections of maximal cones are common faces; then so are
     all pairwise intersections, by the face-lattice closure above */
  std::vector<RatCone> max = f.maximal_cones();
  for (std::size_t i = 0; i < max.size(); ++i)
    for (std::size_t j = i + 1; j < max.size(); ++j) {
      RatCone meet = intersect(max[i], max[j]);
      if (!is_face_of(meet, max[i]) || !is_face_of(meet, max[j])) {
        out.detail = "intersection is not a common face";
        return out;
      }
    }
  out.is_fan = true;

  if (f.cones.empty()) return out;
  if (f.ambient == 0) {
    out.is_complete = true;
    return out;
  }
  for (const auto& c : max)
    if (c.dim() != f.ambient) {
      out.detail = "maximal cone of lower dimension";
      return out;
    }
  /* boundary sharing: every facet of a maximal cone lies in another */
  for (const auto& c : max) {
    for (const auto& face : all_faces(c)) {
      if (face.dim() + 1 != c.dim()) continue;
      bool shared = false;
      for (const auto& d : max) {
        if (d == c) continue;
        if (cone_contains(d, face)) {
          shared = true;
          break;
        }
      }
      if (!shared) {
        out.detail = "unshared facet";
        return out;
      }
    }
  }
  out.is_complete = true;
  return out;
}

GenFan fan_image(const GenFan& f, const RatMatrix& map, bool require_all) {
  std::size_t dst = map.cols();
  GenFan out;
  out.ambient = dst;
  auto apply = [&](const RatCone& c) {
    std::vector<RatVec> rays, lin;
    for (const auto& r : c.rays()) rays.push_back(r * map);
    for (const auto& l : c.lineality()) lin.push_back(l * map);
    return RatCone::from_rays(dst, rays, lin);
  };
  for (const auto& sigma : f.cones) {
    RatCone img = apply(sigma);
    /* preimage cone of img */
    std::vector<RatVec> pre_normals;
    for (const auto& n : img.normals()) {
      RatVec v(map.rows());
      for (std::size_t i = 0; i < map.rows(); ++i) {
        Rat acc = 0;
        for (std::size_t j = 0; j < map.cols(); ++j) acc += map.at(i, j) * n[j];
        v[i] = acc;
      }
      pre_normals.push_back(v);
    }
    RatCone pre = RatCone::from_inequalities(map.rows(), pre_normals);
    bool saturated = true;
    for (const auto& tau : f.cones) {
      RatCone meet = intersect(tau, pre);
      if (!cone_contains(sigma, meet)) {
        saturated = false;
        break;
      }
    }
    if (!saturated) {
      if (require_all) throw SaturationViolated("cone image does not saturate");
      continue;
    }
    out.insert(img);
  }
  std::sort(out.cones.begin(), out.cones.end(),
            [](const RatCone& a, const RatCone& b) { return a.key() < b.key(); });
  return out;
}

}  // namespace siltgeo
