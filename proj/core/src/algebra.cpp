#include "siltgeo/algebra.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <tuple>

#include "siltgeo/errors.hpp"

namespace siltgeo {

std::size_t Quiver::vertex_index(const std::string& label) const {
  for (std::size_t i = 0; i < vertices.size(); ++i)
    if (vertices[i] == label) return i;
  throw ParseError("unknown vertex: " + label);
}

std::size_t Quiver::arrow_index(const std::string& name) const {
  for (std::size_t i = 0; i < arrows.size(); ++i)
    if (arrows[i].name == name) return i;
  throw ParseError("unknown arrow: " + name);
}

/* ---------------- incremental echelon over the path space ------------- */

namespace {

/* Rows keyed by leading index; enough structure for ideal spans that live
   in a large sparse path space. */
class Echelon {
 public:
  /* reduce v against the rows; returns the normal form.  Row leads are the
     smallest keys of their rows, so every hit removes one position and
     touches only larger ones. */
  std::map<std::size_t, Rat> reduce(std::map<std::size_t, Rat> v) const {
    for (;;) {
      bool hit = false;
      for (auto it = v.begin(); it != v.end(); ++it) {
        auto row = rows_.find(it->first);
        if (row == rows_.end()) continue;
        Rat c = it->second;
        for (const auto& [k, val] : row->second) {
          auto& slot = v[k];
          slot -= c * val;
          if (slot == 0) v.erase(k);
        }
        hit = true;
        break;  /* iterators into v are stale now */
      }
      if (!hit) return v;
    }
  }

  /* insert v (reduced first); true if it added a new pivot */
  bool insert(std::map<std::size_t, Rat> v) {
    v = reduce(std::move(v));
    if (v.empty()) return false;
    auto lead = v.begin()->first;
    Rat inv = Rat(1) / v.begin()->second;
    for (auto& [k, val] : v) val *= inv;
    /* back-substitute into existing rows */
    for (auto& [p, row] : rows_) {
      auto hit = row.find(lead);
      if (hit == row.end()) continue;
      Rat c = hit->second;
      for (const auto& [k, val] : v) {
        auto& slot = row[k];
        slot -= c * val;
        if (slot == 0) row.erase(k);
      }
    }
    rows_[lead] = std::move(v);
    return true;
  }

  bool is_pivot(std::size_t idx) const { return rows_.count(idx) != 0; }
  std::size_t size() const { return rows_.size(); }

 private:
  std::map<std::size_t, std::map<std::size_t, Rat>> rows_;
};

struct Path {
  std::size_t source, target;
  std::vector<std::size_t> arrows;
};

}  // namespace

/* ------------------------------ Algebra ------------------------------- */

Algebra::Algebra(std::vector<std::string> basis_names,
                 std::vector<std::vector<RatVec>> mult_table, RatVec unit,
                 std::vector<RatVec> idempotents, std::string name, bool validate_input)
    : dim_(basis_names.size()),
      name_(std::move(name)),
      basis_names_(std::move(basis_names)),
      mult_(std::move(mult_table)),
      unit_(std::move(unit)),
      idempotents_(std::move(idempotents)) {
  if (validate_input) validate();
  build_corners();
  build_generators();
}

void Algebra::build_generators() {
  if (dim_ == 0) return;
  std::vector<RatVec> gens = idempotents_;
  Subspace rad = jacobson_radical(*this);
  std::vector<RatVec> rad2;
  for (std::size_t i = 0; i < rad.dim(); ++i)
    for (std::size_t j = 0; j < rad.dim(); ++j)
      rad2.push_back(multiply(rad.basis().row(i), rad.basis().row(j)));
  Subspace rad2s(dim_, rad2);
  Subspace seen = rad2s;
  for (std::size_t i = 0; i < rad.dim(); ++i) {
    RatVec v = rad.basis().row(i);
    if (seen.contains(v)) continue;
    gens.push_back(v);
    seen = seen.sum(Subspace(dim_, {v}));
  }
  /* verify the products of generators span everything; otherwise keep the
     full basis (non-basic or non-split algebras) */
  std::vector<RatVec> closure = gens;
  Subspace span(dim_, closure);
  for (;;) {
    std::vector<RatVec> more;
    for (std::size_t i = 0; i < span.dim(); ++i) more.push_back(span.basis().row(i));
    std::size_t before = span.dim();
    std::vector<RatVec> prods = more;
    for (const auto& x : more)
      for (const auto& g : gens) prods.push_back(multiply(x, g));
    span = Subspace(dim_, prods);
    if (span.dim() == before) break;
  }
  if (span.dim() == dim_) {
    generators_ = gens;
  } else {
    generators_.clear();
    for (std::size_t k = 0; k < dim_; ++k) generators_.push_back(basis_element(k));
  }
}

void Algebra::validate() const {
  if (mult_.size() != dim_) throw Error("algebra: bad table height");
  for (const auto& row : mult_) {
    if (row.size() != dim_) throw Error("algebra: bad table width");
    for (const auto& v : row)
      if (v.size() != dim_) throw Error("algebra: bad product length");
  }
  if (unit_.size() != dim_) throw Error("algebra: bad unit length");
  /* associativity on the basis, via structure constants */
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j) {
      RatVec lhs(dim_), rhs(dim_);
      for (std::size_t k = 0; k < dim_; ++k) {
        std::fill(lhs.begin(), lhs.end(), Rat(0));
        std::fill(rhs.begin(), rhs.end(), Rat(0));
        for (std::size_t s = 0; s < dim_; ++s) {
          const Rat& cij = mult_[i][j][s];
          if (cij != 0)
            for (std::size_t t = 0; t < dim_; ++t)
              if (mult_[s][k][t] != 0) lhs[t] += cij * mult_[s][k][t];
          const Rat& cjk = mult_[j][k][s];
          if (cjk != 0)
            for (std::size_t t = 0; t < dim_; ++t)
              if (mult_[i][s][t] != 0) rhs[t] += cjk * mult_[i][s][t];
        }
        if (lhs != rhs) throw Error("algebra: multiplication not associative");
      }
    }
  /* unitality */
  for (std::size_t i = 0; i < dim_; ++i) {
    RatVec b(dim_);
    b[i] = 1;
    if (multiply(unit_, b) != b || multiply(b, unit_) != b)
      throw Error("algebra: unit fails");
  }
  /* idempotent family: orthogonal, idempotent, sums to the unit */
  RatVec total(dim_);
  for (std::size_t s = 0; s < idempotents_.size(); ++s) {
    const RatVec& e = idempotents_[s];
    if (multiply(e, e) != e) throw Error("algebra: non-idempotent in family");
    for (std::size_t t = 0; t < idempotents_.size(); ++t) {
      if (s == t) continue;
      if (!siltgeo::is_zero(multiply(e, idempotents_[t])))
        throw Error("algebra: idempotents not orthogonal");
    }
    total = total + e;
  }
  if (dim_ > 0 && total != unit_) throw Error("algebra: idempotents do not sum to 1");
}

void Algebra::build_corners() {
  std::size_t r = idempotents_.size();
  corners_.assign(r, std::vector<std::vector<RatVec>>(r));
  corner_spaces_.assign(r, std::vector<Subspace>(r, Subspace(dim_)));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) {
      std::vector<RatVec> span;
      for (std::size_t k = 0; k < dim_; ++k) {
        RatVec b(dim_);
        b[k] = 1;
        RatVec v = multiply(multiply(idempotents_[i], b), idempotents_[j]);
        if (!siltgeo::is_zero(v)) span.push_back(v);
      }
      Subspace s(dim_, span);
      for (std::size_t k = 0; k < s.dim(); ++k)
        corners_[i][j].push_back(s.basis().row(k));
      corner_spaces_[i][j] = std::move(s);
    }
}

const Subspace& Algebra::corner_subspace(std::size_t i, std::size_t j) const {
  return corner_spaces_.at(i).at(j);
}

RatVec Algebra::multiply(const RatVec& a, const RatVec& b) const {
  if (a.size() != dim_ || b.size() != dim_) throw DimensionMismatch("algebra multiply");
  RatVec out(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (b[j] == 0) continue;
      Rat c = a[i] * b[j];
      const RatVec& prod = mult_[i][j];
      for (std::size_t k = 0; k < dim_; ++k)
        if (prod[k] != 0) out[k] += c * prod[k];
    }
  }
  return out;
}

RatMatrix Algebra::left_mult_matrix(const RatVec& a) const {
  RatMatrix m(dim_, dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    RatVec b(dim_);
    b[i] = 1;
    m.set_row(i, multiply(a, b));
  }
  return m;
}

RatMatrix Algebra::right_mult_matrix(const RatVec& a) const {
  RatMatrix m(dim_, dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    RatVec b(dim_);
    b[i] = 1;
    m.set_row(i, multiply(b, a));
  }
  return m;
}

RatVec Algebra::basis_element(std::size_t i) const {
  RatVec b(dim_);
  b.at(i) = 1;
  return b;
}

bool Algebra::is_idempotent(const RatVec& a) const { return multiply(a, a) == a; }

std::optional<RatVec> Algebra::try_invert(const RatVec& a) const {
  auto x = solve_left(left_mult_matrix(a), unit_);
  if (!x) return std::nullopt;
  if (multiply(*x, a) != unit_) return std::nullopt;
  return x;
}

const std::vector<RatVec>& Algebra::corner_basis(std::size_t i, std::size_t j) const {
  return corners_.at(i).at(j);
}

/* ----------------------------- from_quiver ---------------------------- */

AlgebraPtr Algebra::from_quiver(const Quiver& q, std::size_t path_cap) {
  const std::size_t nv = q.vertices.size();
  {
    std::set<std::string> names;
    for (const auto& a : q.arrows) {
      if (a.from >= nv || a.to >= nv) throw ParseError("arrow endpoint out of range");
      if (!names.insert(a.name).second) throw ParseError("duplicate arrow name: " + a.name);
    }
  }
  std::size_t max_rel_len = 0;
  for (const auto& rel : q.relations) {
    if (rel.empty()) throw MalformedRelation("empty relation");
    std::size_t src = nv, tgt = nv;
    for (const auto& term : rel) {
      if (term.arrows.empty()) throw MalformedRelation("relation term has no arrows");
      if (term.coef == 0) throw MalformedRelation("zero coefficient in relation");
      std::size_t s = q.arrows.at(term.arrows.front()).from;
      std::size_t t = q.arrows.at(term.arrows.back()).to;
      for (std::size_t k = 0; k + 1 < term.arrows.size(); ++k)
        if (q.arrows.at(term.arrows[k]).to != q.arrows.at(term.arrows[k + 1]).from)
          throw MalformedRelation("non-composable path in relation");
      if (src == nv) src = s, tgt = t;
      if (s != src || t != tgt) throw MalformedRelation("relation terms not parallel");
      max_rel_len = std::max(max_rel_len, term.arrows.size());
    }
  }

  const std::size_t window = path_cap + 1 + max_rel_len;
  const std::size_t kPathLimit = 200000;

  /* enumerate paths of length <= window, trivial paths first, by length */
  std::vector<Path> paths;
  std::map<std::vector<std::size_t>, std::size_t> seq_index;  /* nonempty seqs */
  std::vector<std::size_t> trivial(nv);
  for (std::size_t v = 0; v < nv; ++v) {
    trivial[v] = paths.size();
    paths.push_back({v, v, {}});
  }
  std::size_t level_begin = 0, level_end = paths.size();
  for (std::size_t len = 1; len <= window && level_begin < level_end; ++len) {
    for (std::size_t p = level_begin; p < level_end; ++p) {
      for (std::size_t a = 0; a < q.arrows.size(); ++a) {
        if (q.arrows[a].from != paths[p].target) continue;
        Path np{paths[p].source, q.arrows[a].to, paths[p].arrows};
        np.arrows.push_back(a);
        seq_index[np.arrows] = paths.size();
        paths.push_back(std::move(np));
        if (paths.size() > kPathLimit)
          throw InfiniteDimensional("path count exceeds enumeration limit");
      }
    }
    level_begin = level_end;
    level_end = paths.size();
  }

  auto path_of = [&](const std::vector<std::size_t>& seq) -> std::size_t {
    if (seq.empty()) throw Error("internal: trivial path lookup by sequence");
    auto it = seq_index.find(seq);
    if (it == seq_index.end()) return paths.size();  /* beyond window */
    return it->second;
  };

  /* ideal span inside the window */
  Echelon ideal;
  for (const auto& rel : q.relations) {
    std::size_t rel_src = q.arrows.at(rel.front().arrows.front()).from;
    std::size_t rel_tgt = q.arrows.at(rel.front().arrows.back()).to;
    for (std::size_t u = 0; u < paths.size(); ++u) {
      if (paths[u].target != rel_src) continue;
      for (std::size_t w = 0; w < paths.size(); ++w) {
        if (paths[w].source != rel_tgt) continue;
        if (paths[u].arrows.size() + max_rel_len + paths[w].arrows.size() > window) continue;
        std::map<std::size_t, Rat> vec;
        bool in_window = true;
        for (const auto& term : rel) {
          std::vector<std::size_t> seq = paths[u].arrows;
          seq.insert(seq.end(), term.arrows.begin(), term.arrows.end());
          seq.insert(seq.end(), paths[w].arrows.begin(), paths[w].arrows.end());
          std::size_t idx = path_of(seq);
          if (idx == paths.size()) {
            in_window = false;
            break;
          }
          vec[idx] += term.coef;
          if (vec[idx] == 0) vec.erase(idx);
        }
        if (in_window && !vec.empty()) ideal.insert(std::move(vec));
      }
    }
  }

  /* surviving paths; anything alive past path_cap means not finite (or the
     cap is too small to certify otherwise) */
  std::vector<std::size_t> basis_paths;
  for (std::size_t p = 0; p < paths.size(); ++p) {
    if (ideal.is_pivot(p)) continue;
    if (paths[p].arrows.size() > path_cap)
      throw InfiniteDimensional("basis path survives beyond path_cap");
    basis_paths.push_back(p);
  }
  std::vector<std::size_t> basis_pos(paths.size(), paths.size());
  for (std::size_t k = 0; k < basis_paths.size(); ++k) basis_pos[basis_paths[k]] = k;
  const std::size_t dim = basis_paths.size();

  /* reduce an arbitrary composable arrow sequence to basis coordinates */
  std::map<std::vector<std::size_t>, RatVec> memo;
  std::function<RatVec(std::size_t, const std::vector<std::size_t>&)> reduce_seq =
      [&](std::size_t source, const std::vector<std::size_t>& seq) -> RatVec {
    RatVec out(dim);
    if (seq.empty()) {
      out[basis_pos[trivial[source]]] = 1;
      return out;
    }
    if (auto it = memo.find(seq); it != memo.end()) return it->second;
    std::size_t idx = path_of(seq);
    if (idx != paths.size()) {
      std::map<std::size_t, Rat> v;
      v[idx] = 1;
      auto red = ideal.reduce(std::move(v));
      for (const auto& [k, c] : red) {
        if (basis_pos[k] == paths.size())
          throw InfiniteDimensional("reduction left a non-basis path");
        out[basis_pos[k]] += c;
      }
      memo[seq] = out;
      return out;
    }
    /* longer than the window: rewrite the length-`window` prefix, which is
       certified to reduce to strictly shorter paths, then recurse */
    std::vector<std::size_t> prefix(seq.begin(), seq.begin() + window);
    std::vector<std::size_t> rest(seq.begin() + window, seq.end());
    RatVec pre = reduce_seq(source, prefix);
    for (std::size_t k = 0; k < dim; ++k) {
      if (pre[k] == 0) continue;
      std::vector<std::size_t> s2 = paths[basis_paths[k]].arrows;
      s2.insert(s2.end(), rest.begin(), rest.end());
      RatVec sub = reduce_seq(paths[basis_paths[k]].source, s2);
      for (std::size_t t = 0; t < dim; ++t) out[t] += pre[k] * sub[t];
    }
    memo[seq] = out;
    return out;
  };

  /* structure constants by concatenation */
  std::vector<std::vector<RatVec>> mult(dim, std::vector<RatVec>(dim, RatVec(dim)));
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) {
      const Path& p = paths[basis_paths[i]];
      const Path& r = paths[basis_paths[j]];
      if (p.target != r.source) continue;
      std::vector<std::size_t> seq = p.arrows;
      seq.insert(seq.end(), r.arrows.begin(), r.arrows.end());
      mult[i][j] = reduce_seq(p.source, seq);
    }

  RatVec unit(dim);
  std::vector<RatVec> idems;
  for (std::size_t v = 0; v < nv; ++v) {
    RatVec e(dim);
    e[basis_pos[trivial[v]]] = 1;
    unit = unit + e;
    idems.push_back(e);
  }

  std::vector<std::string> names;
  for (auto bp : basis_paths) {
    const Path& p = paths[bp];
    if (p.arrows.empty())
      names.push_back("e" + q.vertices[p.source]);
    else {
      std::string s;
      for (std::size_t k = 0; k < p.arrows.size(); ++k) {
        if (k) s += "*";
        s += q.arrows[p.arrows[k]].name;
      }
      names.push_back(s);
    }
  }

  auto out = std::make_shared<Algebra>(std::move(names), std::move(mult),
                                       std::move(unit), std::move(idems));
  const_cast<Algebra&>(*out).origin_ = q;
  return out;
}

/* --------------------------- Jacobson radical ------------------------- */

Subspace jacobson_radical(const Algebra& a) {
  std::size_t n = a.dim();
  /* t_k = tr(L_{b_k}); rad = left kernel of G_{ij} = tr(L_{b_i b_j}) */
  RatVec traces(n);
  for (std::size_t k = 0; k < n; ++k) {
    RatMatrix L = a.left_mult_matrix(a.basis_element(k));
    Rat t = 0;
    for (std::size_t i = 0; i < n; ++i) t += L.at(i, i);
    traces[k] = t;
  }
  RatMatrix gram(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      RatVec prod = a.multiply(a.basis_element(i), a.basis_element(j));
      Rat g = 0;
      for (std::size_t k = 0; k < n; ++k)
        if (prod[k] != 0) g += prod[k] * traces[k];
      gram.at(i, j) = g;
    }
  return left_kernel(gram);
}

/* ------------------------------ quotients ----------------------------- */

Subspace ideal_closure(const Algebra& a, const std::vector<RatVec>& gens) {
  Subspace w(a.dim(), gens);
  for (;;) {
    std::vector<RatVec> next;
    for (std::size_t i = 0; i < w.dim(); ++i) {
      RatVec v = w.basis().row(i);
      next.push_back(v);
      for (std::size_t k = 0; k < a.dim(); ++k) {
        next.push_back(a.multiply(a.basis_element(k), v));
        next.push_back(a.multiply(v, a.basis_element(k)));
      }
    }
    Subspace w2(a.dim(), next);
    if (w2.dim() == w.dim()) return w2;
    w = w2;
  }
}

RawQuotient raw_quotient(const Algebra& a, const Subspace& ideal) {
  std::size_t n = a.dim();
  std::vector<bool> is_pivot(n, false);
  for (auto p : ideal.pivots()) is_pivot[p] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t j = 0; j < n; ++j)
    if (!is_pivot[j]) free_cols.push_back(j);
  std::size_t q = free_cols.size();

  auto project_coords = [&](const RatVec& v) {
    RatVec red = ideal.reduce(v);
    RatVec out(q);
    for (std::size_t t = 0; t < q; ++t) out[t] = red[free_cols[t]];
    return out;
  };

  RawQuotient out;
  out.projection = RatMatrix(n, q);
  for (std::size_t i = 0; i < n; ++i) out.projection.set_row(i, project_coords(a.basis_element(i)));
  for (auto c : free_cols) {
    out.basis_names.push_back(a.basis_names()[c]);
    out.lifts.push_back(a.basis_element(c));
  }
  out.mult.assign(q, std::vector<RatVec>(q));
  for (std::size_t i = 0; i < q; ++i)
    for (std::size_t j = 0; j < q; ++j)
      out.mult[i][j] = project_coords(a.multiply(out.lifts[i], out.lifts[j]));
  out.unit = project_coords(a.unit());
  return out;
}

namespace {

AlgebraPtr make_algebra_with_idempotents(RawQuotient rq, std::string name);

/* ------------- polynomials over Q (dense, low degree first) ----------- */

using Poly = RatVec;

std::size_t pdeg(const Poly& p) {
  std::size_t d = p.size();
  while (d > 0 && p[d - 1] == 0) --d;
  return d == 0 ? 0 : d - 1;
}
Poly ptrim(Poly p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
  if (p.empty()) p.push_back(0);
  return p;
}
Poly pmul(const Poly& a, const Poly& b) {
  Poly c(a.size() + b.size(), Rat(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  return ptrim(c);
}
/* (quotient, remainder) with b nonzero */
std::pair<Poly, Poly> pdivmod(Poly a, const Poly& b) {
  a = ptrim(a);
  Poly bb = ptrim(b);
  std::size_t db = pdeg(bb);
  if (bb.size() == 1 && bb[0] == 0) throw Error("poly division by zero");
  Poly quo(std::max<std::size_t>(pdeg(a) >= db ? pdeg(a) - db + 1 : 1, 1), Rat(0));
  while (!(a.size() == 1 && a[0] == 0) && pdeg(a) >= db) {
    std::size_t da = pdeg(a);
    if (a[da] == 0) {
      a = ptrim(a);
      continue;
    }
    Rat c = a[da] / bb[db];
    quo[da - db] += c;
    for (std::size_t i = 0; i <= db; ++i) a[da - db + i] -= c * bb[i];
    a = ptrim(a);
    if (da == 0) break;
  }
  return {ptrim(quo), ptrim(a)};
}
bool pis_zero(const Poly& p) {
  Poly t = ptrim(p);
  return t.size() == 1 && t[0] == 0;
}
Poly psub(const Poly& a, const Poly& b) {
  Poly c(std::max(a.size(), b.size()), Rat(0));
  for (std::size_t i = 0; i < a.size(); ++i) c[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) c[i] -= b[i];
  return ptrim(c);
}
/* extended gcd: returns (g, u, v) monic with u a + v b = g */
std::tuple<Poly, Poly, Poly> pxgcd(Poly a, Poly b) {
  Poly u0{Rat(1)}, v0{Rat(0)}, u1{Rat(0)}, v1{Rat(1)};
  a = ptrim(a);
  b = ptrim(b);
  while (!pis_zero(b)) {
    auto [q, r] = pdivmod(a, b);
    Poly u2 = psub(u0, pmul(q, u1));
    Poly v2 = psub(v0, pmul(q, v1));
    a = b;
    b = r;
    u0 = u1;
    v0 = v1;
    u1 = u2;
    v1 = v2;
  }
  Rat lead = a[pdeg(a)];
  if (lead != 0 && lead != 1) {
    for (auto& c : a) c /= lead;
    for (auto& c : u0) c /= lead;
    for (auto& c : v0) c /= lead;
  }
  return {ptrim(a), ptrim(u0), ptrim(v0)};
}

Rat peval(const Poly& p, const Rat& x) {
  Rat acc = 0;
  for (std::size_t i = p.size(); i-- > 0;) acc = acc * x + p[i];
  return acc;
}

/* Rational roots of p, each with multiplicity.  Divisor enumeration is
   trial division bounded at 10^6; eigenvalues in this pipeline are tiny
   (idempotent spectra), so the early candidates 0, ±1, ±2 do the work. */
std::vector<std::pair<Rat, std::size_t>> rational_roots(Poly p) {
  p = ptrim(p);
  std::vector<std::pair<Rat, std::size_t>> roots;
  auto strip_root = [&](const Rat& r) {
    std::size_t mult = 0;
    for (;;) {
      if (pdeg(p) == 0) break;
      if (peval(p, r) != 0) break;
      auto [q, rem] = pdivmod(p, Poly{-r, Rat(1)});
      p = q;
      ++mult;
    }
    if (mult) roots.emplace_back(r, mult);
  };
  for (int c : {0, 1, -1, 2, -2, 3, -3}) strip_root(Rat(c));
  if (pdeg(p) == 0) return roots;
  /* clear denominators, enumerate p/q over small divisors */
  BigInt lcm = 1;
  for (const auto& c : p) lcm = boost::multiprecision::lcm(lcm, denominator(c));
  std::vector<BigInt> ic(p.size());
  for (std::size_t i = 0; i < p.size(); ++i)
    ic[i] = numerator(p[i] * lcm);  /* integral */
  BigInt a0 = ic[0], an = ic[pdeg(p)];
  if (a0 == 0) return roots;  /* zero root already stripped */
  auto divisors = [](BigInt n) {
    std::vector<BigInt> ds;
    if (n < 0) n = -n;
    for (BigInt d = 1; d * d <= n && d <= 1000000; ++d)
      if (n % d == 0) {
        ds.push_back(d);
        ds.push_back(n / d);
      }
    return ds;
  };
  for (const BigInt& pp : divisors(a0))
    for (const BigInt& qq : divisors(an)) {
      for (int sign : {1, -1}) {
        Rat cand(sign * pp, qq);
        if (peval(p, cand) == 0) strip_root(cand);
        if (pdeg(p) == 0) return roots;
      }
    }
  return roots;
}

/* ---------------- idempotent machinery on a semisimple algebra -------- */

/* evaluate a polynomial at an algebra element, with p(x)^0 = unit */
RatVec poly_at(const Algebra& alg, const Poly& p, const RatVec& x, const RatVec& unit) {
  RatVec acc(alg.dim());
  RatVec pw = unit;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] != 0)
      for (std::size_t k = 0; k < alg.dim(); ++k) acc[k] += p[i] * pw[k];
    if (i + 1 < p.size()) pw = alg.multiply(pw, x);
  }
  return acc;
}

/* minimal polynomial of x in the unital corner (eAe, e) */
Poly min_poly(const Algebra& alg, const RatVec& x, const RatVec& e) {
  std::vector<RatVec> powers{e};
  for (;;) {
    Subspace span(alg.dim(), powers);
    RatVec next = alg.multiply(powers.back(), x);
    if (span.contains(next)) {
      RatVec red = next;
      /* express next in the powers via a dense solve */
      RatMatrix m(powers.size(), alg.dim());
      for (std::size_t i = 0; i < powers.size(); ++i) m.set_row(i, powers[i]);
      auto sol = solve_left(m, next);
      if (!sol) throw Error("min_poly: dependence lost");
      Poly mu(powers.size() + 1, Rat(0));
      mu[powers.size()] = 1;
      for (std::size_t i = 0; i < powers.size(); ++i) mu[i] = -(*sol)[i];
      return mu;
    }
    powers.push_back(next);
    if (powers.size() > alg.dim() + 1) throw Error("min_poly: no dependence found");
  }
}

/* Try to write e = e1 + e2 with orthogonal nonzero idempotents, using the
   spectrum of candidate elements of the corner eAe.  Returns e1 on
   success. */
std::optional<RatVec> try_split_idempotent(const Algebra& alg, const RatVec& e) {
  std::vector<RatVec> corner;  /* basis of eAe */
  {
    std::vector<RatVec> span;
    for (std::size_t k = 0; k < alg.dim(); ++k)
      span.push_back(alg.multiply(alg.multiply(e, alg.basis_element(k)), e));
    Subspace s(alg.dim(), span);
    for (std::size_t i = 0; i < s.dim(); ++i) corner.push_back(s.basis().row(i));
  }
  if (corner.size() <= 1) return std::nullopt;

  /* Center elements first: in a split semisimple corner they have fully
     rational spectra, so they separate the central blocks.  Inside a simple
     block the corner basis and its small sums/products provide zero
     divisors; RREF-canonical endomorphism bases do in practice. */
  std::vector<RatVec> candidates;
  {
    RatMatrix coef(corner.size(), corner.size() * alg.dim());
    for (std::size_t i = 0; i < corner.size(); ++i) {
      RatVec big(corner.size() * alg.dim());
      for (std::size_t j = 0; j < corner.size(); ++j) {
        RatVec d = alg.multiply(corner[i], corner[j]) - alg.multiply(corner[j], corner[i]);
        for (std::size_t k = 0; k < alg.dim(); ++k) big[j * alg.dim() + k] = d[k];
      }
      coef.set_row(i, big);
    }
    Subspace central = left_kernel(coef);
    for (std::size_t i = 0; i < central.dim(); ++i) {
      RatVec x = central.basis().row(i);
      RatVec z(alg.dim());
      for (std::size_t j = 0; j < corner.size(); ++j) z = z + scaled(corner[j], x[j]);
      candidates.push_back(z);
    }
  }
  for (const auto& b : corner) candidates.push_back(b);
  for (std::size_t i = 0; i < corner.size(); ++i)
    for (std::size_t j = 0; j < corner.size(); ++j) {
      if (i == j) continue;
      if (i < j) candidates.push_back(corner[i] + corner[j]);
      candidates.push_back(alg.multiply(corner[i], corner[j]));
    }
  for (const RatVec& c : candidates) {
    Poly mu = min_poly(alg, c, e);
    if (pdeg(mu) < 2) continue;
    for (const auto& [lambda, mult] : rational_roots(mu)) {
      /* split mu = (x-lambda)^mult * h */
      Poly g{Rat(1)};
      Poly lin{-lambda, Rat(1)};
      for (std::size_t t = 0; t < mult; ++t) g = pmul(g, lin);
      auto [h, rem] = pdivmod(mu, g);
      if (!pis_zero(rem)) throw Error("idempotent split: division failure");
      if (pdeg(h) == 0) continue;  /* single eigenvalue, no split here */
      auto [gcd, u, v] = pxgcd(g, h);
      if (pdeg(gcd) != 0) continue;  /* not coprime; try another candidate */
      /* (u g)(c) is 1 on the h-block, 0 on the g-block */
      Poly ug = pmul(u, g);
      auto [q2, r2] = pdivmod(ug, mu);
      RatVec e1 = poly_at(alg, r2, c, e);
      /* divide by gcd scalar: g,h were not normalized jointly */
      if (siltgeo::is_zero(e1) || e1 == e) continue;
      if (!alg.is_idempotent(e1)) continue;
      return e1;
    }
  }
  return std::nullopt;
}

/* full primitive decomposition inside a SEMISIMPLE algebra */
std::vector<RatVec> primitive_decomposition_semisimple(const Algebra& ss) {
  std::vector<RatVec> done;
  std::vector<RatVec> work;
  if (ss.dim() == 0) return done;
  work.push_back(ss.unit());
  while (!work.empty()) {
    RatVec e = work.back();
    work.pop_back();
    auto split = try_split_idempotent(ss, e);
    if (!split) {
      /* primitive iff the corner is a division algebra; a corner of
         dimension > 1 that resists splitting is treated as non-split */
      std::vector<RatVec> span;
      for (std::size_t k = 0; k < ss.dim(); ++k)
        span.push_back(ss.multiply(ss.multiply(e, ss.basis_element(k)), e));
      Subspace corner(ss.dim(), span);
      if (corner.dim() > 1)
        throw NonSplitSemisimple("semisimple block of dimension " +
                                 std::to_string(corner.dim()) +
                                 " admits no rational splitting");
      done.push_back(e);
      continue;
    }
    RatVec e1 = *split;
    RatVec e2 = e - e1;
    /* e = e1 + e2 need not be orthogonal if e1 came from a non-central
       element; enforce by passing to e2' = e - e1 and checking */
    if (!ss.is_idempotent(e2) || !siltgeo::is_zero(ss.multiply(e1, e2)) ||
        !siltgeo::is_zero(ss.multiply(e2, e1))) {
      /* recenter: replace e1 by the corner idempotent e1' = e1 (it lies in
         eAe and commutes with e), orthogonalize inside the corner */
      throw Error("idempotent split produced non-orthogonal parts");
    }
    work.push_back(e1);
    work.push_back(e2);
  }
  return done;
}

/* Newton lifting of an idempotent along a nil ideal: x <- 3x^2 - 2x^3 */
RatVec lift_idempotent(const Algebra& a, RatVec x) {
  for (std::size_t iter = 0; iter <= a.dim() + 2; ++iter) {
    if (a.is_idempotent(x)) return x;
    RatVec x2 = a.multiply(x, x);
    RatVec x3 = a.multiply(x2, x);
    for (std::size_t k = 0; k < x.size(); ++k) x[k] = 3 * x2[k] - 2 * x3[k];
  }
  throw Error("idempotent lifting did not converge");
}

AlgebraPtr make_algebra_with_idempotents(RawQuotient rq, std::string name) {
  std::size_t q = rq.basis_names.size();
  if (q == 0)
    return std::make_shared<Algebra>(std::vector<std::string>{},
                                     std::vector<std::vector<RatVec>>{}, RatVec{},
                                     std::vector<RatVec>{}, std::move(name));
  Algebra tmp(rq.basis_names, rq.mult, rq.unit, {rq.unit}, name);
  auto idems = primitive_idempotents(tmp);
  return std::make_shared<Algebra>(std::move(rq.basis_names), std::move(rq.mult),
                                   std::move(rq.unit), std::move(idems),
                                   std::move(name));
}

}  // namespace

std::vector<RatVec> primitive_idempotents(const Algebra& a) {
  if (a.dim() == 0) return {};
  Subspace rad = jacobson_radical(a);
  RawQuotient ss_data = raw_quotient(a, rad);
  Algebra ss(ss_data.basis_names, ss_data.mult, ss_data.unit, {ss_data.unit});
  std::vector<RatVec> bars = primitive_decomposition_semisimple(ss);

  /* lift to a, then orthogonalize sequentially inside corners */
  std::vector<RatVec> lifted;
  RatVec partial(a.dim());
  for (const RatVec& bar : bars) {
    /* a preimage of bar */
    RatVec x(a.dim());
    for (std::size_t t = 0; t < bar.size(); ++t)
      if (bar[t] != 0) x = x + scaled(ss_data.lifts[t], bar[t]);
    /* push into the corner complementary to what is already lifted */
    RatVec u = x - a.multiply(partial, x) - a.multiply(x, partial) +
               a.multiply(a.multiply(partial, x), partial);
    RatVec f = lift_idempotent(a, u);
    lifted.push_back(f);
    partial = partial + f;
  }
  if (partial != a.unit()) throw Error("primitive idempotents do not sum to 1");
  return lifted;
}

bool is_division_algebra(const Algebra& a) {
  if (a.dim() == 0) return false;
  Subspace rad = jacobson_radical(a);
  if (rad.dim() != 0) return false;
  if (a.dim() == 1) return true;
  /* semisimple already; division iff no nontrivial idempotent turns up */
  auto split = try_split_idempotent(a, a.unit());
  return !split.has_value();
}

bool is_local_algebra(const Algebra& a) {
  if (a.dim() == 0) return false;
  Subspace rad = jacobson_radical(a);
  if (rad.dim() + 1 == a.dim()) return true;  /* quotient is Q */
  RawQuotient rq = raw_quotient(a, rad);
  Algebra ss(rq.basis_names, rq.mult, rq.unit, {rq.unit});
  if (ss.dim() == 1) return true;
  auto split = try_split_idempotent(ss, ss.unit());
  return !split.has_value();
}

QuotientResult quotient_by_ideal(const Algebra& a, const std::vector<RatVec>& gens) {
  Subspace ideal = ideal_closure(a, gens);
  if (a.dim() > 0 && ideal.contains(a.unit()))
    throw IdealIsWholeAlgebra("quotient by the whole algebra");
  RawQuotient rq = raw_quotient(a, ideal);
  RatMatrix proj = rq.projection;
  auto alg = make_algebra_with_idempotents(std::move(rq), a.name() + "/I");
  return {alg, proj};
}

QuotientResult quotient_by_ideal_with_idempotents(const Algebra& a,
                                                  const std::vector<RatVec>& gens,
                                                  const std::vector<RatVec>& lifted_idems) {
  Subspace ideal = ideal_closure(a, gens);
  if (a.dim() > 0 && ideal.contains(a.unit()))
    throw IdealIsWholeAlgebra("quotient by the whole algebra");
  RawQuotient rq = raw_quotient(a, ideal);
  std::vector<RatVec> idems;
  for (const auto& e : lifted_idems) {
    RatVec img = e * rq.projection;
    if (!siltgeo::is_zero(img)) idems.push_back(img);
  }
  RatMatrix proj = rq.projection;
  auto alg = std::make_shared<Algebra>(rq.basis_names, rq.mult, rq.unit, idems,
                                       a.name() + "/I");
  return {alg, proj};
}

}  // namespace siltgeo
