#include "siltgeo/io.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <nlohmann/json.hpp>
#include <sstream>

#include "siltgeo/errors.hpp"

namespace siltgeo {

/* --------------------------- TOML subset ------------------------------ */

namespace {

std::string strip(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::string drop_comment(const std::string& line) {
  bool in_str = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    if (line[i] == '"') in_str = !in_str;
    if (line[i] == '#' && !in_str) return line.substr(0, i);
  }
  return line;
}

struct ValueParser {
  const std::string& s;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }

  TomlValue parse() {
    skip_ws();
    if (pos >= s.size()) throw ParseError("toml: empty value");
    TomlValue v;
    if (s[pos] == '"') {
      ++pos;
      std::size_t end = s.find('"', pos);
      if (end == std::string::npos) throw ParseError("toml: unterminated string");
      v.kind = TomlValue::Kind::Str;
      v.str = s.substr(pos, end - pos);
      pos = end + 1;
      return v;
    }
    if (s[pos] == '[') {
      ++pos;
      v.kind = TomlValue::Kind::Arr;
      skip_ws();
      if (pos < s.size() && s[pos] == ']') {
        ++pos;
        return v;
      }
      for (;;) {
        v.arr.push_back(parse());
        skip_ws();
        if (pos < s.size() && s[pos] == ',') {
          ++pos;
          skip_ws();
          if (pos < s.size() && s[pos] == ']') {  /* trailing comma */
            ++pos;
            return v;
          }
          continue;
        }
        if (pos < s.size() && s[pos] == ']') {
          ++pos;
          return v;
        }
        throw ParseError("toml: malformed array");
      }
    }
    /* bare integer */
    std::size_t start = pos;
    if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start) throw ParseError("toml: unsupported value near '" + s.substr(pos) + "'");
    v.kind = TomlValue::Kind::Int;
    v.num = std::stol(s.substr(start, pos - start));
    return v;
  }
};

}  // namespace

const TomlValue* TomlTable::find(const std::string& key) const {
  for (const auto& [k, v] : entries)
    if (k == key) return &v;
  return nullptr;
}

std::vector<const TomlTable*> TomlDoc::all(const std::string& path) const {
  std::vector<const TomlTable*> out;
  for (const auto& [p, t] : tables)
    if (p == path) out.push_back(&t);
  return out;
}

const TomlTable* TomlDoc::first(const std::string& path) const {
  auto v = all(path);
  return v.empty() ? nullptr : v.front();
}

TomlDoc parse_toml(const std::string& text) {
  TomlDoc doc;
  doc.tables.emplace_back("", TomlTable{});
  std::size_t current = 0;

  std::istringstream in(text);
  std::string line, pending;
  int depth = 0;
  std::size_t lineno = 0, pending_line = 0;
  auto fail = [&](const std::string& what, std::size_t at, std::size_t col) {
    throw ParseError("line " + std::to_string(at) + ", column " +
                     std::to_string(col + 1) + ": " + what);
  };
  auto flush_pending = [&](const std::string& full, std::size_t at) {
    std::size_t eq = full.find('=');
    if (eq == std::string::npos) fail("expected key = value", at, 0);
    std::string key = strip(full.substr(0, eq));
    std::string val = strip(full.substr(eq + 1));
    ValueParser vp{val};
    try {
      TomlValue v = vp.parse();
      vp.skip_ws();
      if (vp.pos != val.size()) fail("trailing junk after the value of " + key, at, eq + 1 + vp.pos);
      doc.tables[current].second.entries.emplace_back(key, v);
    } catch (const ParseError& e) {
      if (std::string(e.what()).rfind("line ", 0) == 0) throw;
      fail(e.what(), at, eq + 1 + vp.pos);
    }
  };

  while (std::getline(in, line)) {
    ++lineno;
    line = strip(drop_comment(line));
    if (line.empty() && pending.empty()) continue;
    if (!pending.empty()) {
      pending += " " + line;
      for (char c : line) {
        if (c == '[') ++depth;
        if (c == ']') --depth;
      }
      if (depth > 0) continue;
      flush_pending(pending, pending_line);
      pending.clear();
      continue;
    }
    if (line.size() >= 4 && line.substr(0, 2) == "[[" &&
        line.substr(line.size() - 2) == "]]") {
      doc.tables.emplace_back(strip(line.substr(2, line.size() - 4)), TomlTable{});
      current = doc.tables.size() - 1;
      continue;
    }
    if (line.front() == '[' && line.back() == ']') {
      doc.tables.emplace_back(strip(line.substr(1, line.size() - 2)), TomlTable{});
      current = doc.tables.size() - 1;
      continue;
    }
    /* value may span lines when it is an array */
    std::size_t eq = line.find('=');
    if (eq == std::string::npos) fail("expected key = value", lineno, 0);
    depth = 0;
    for (char c : line) {
      if (c == '[') ++depth;
      if (c == ']') --depth;
    }
    if (depth > 0) {
      pending = line;
      pending_line = lineno;
      continue;
    }
    flush_pending(line, lineno);
  }
  if (!pending.empty()) fail("unterminated array", pending_line, 0);
  return doc;
}

/* --------------------------- input schemas ---------------------------- */

Quiver parse_quiver_toml(const std::string& text) {
  TomlDoc doc = parse_toml(text);
  const TomlTable* qt = doc.first("quiver");
  if (!qt) throw ParseError("quiver file: missing [quiver]");
  Quiver q;
  const TomlValue* verts = qt->find("vertices");
  if (!verts || verts->kind != TomlValue::Kind::Arr)
    throw ParseError("quiver file: vertices must be an array");
  for (const auto& v : verts->arr) {
    if (v.kind != TomlValue::Kind::Str) throw ParseError("quiver: vertex labels are strings");
    q.vertices.push_back(v.str);
  }
  for (const TomlTable* at : doc.all("quiver.arrows")) {
    const TomlValue* name = at->find("name");
    const TomlValue* from = at->find("from");
    const TomlValue* to = at->find("to");
    if (!name || !from || !to) throw ParseError("quiver arrow: needs name/from/to");
    q.arrows.push_back({name->str, q.vertex_index(from->str), q.vertex_index(to->str)});
  }
  if (const TomlValue* rels = qt->find("relations")) {
    if (rels->kind != TomlValue::Kind::Arr)
      throw ParseError("quiver: relations must be an array");
    for (const auto& r : rels->arr) {
      if (r.kind != TomlValue::Kind::Str) throw ParseError("quiver: relations are strings");
      /* parse rel expression into path terms */
      Quiver::Relation rel;
      std::size_t pos = 0;
      const std::string& e = r.str;
      auto skip = [&] {
        while (pos < e.size() && std::isspace(static_cast<unsigned char>(e[pos]))) ++pos;
      };
      Rat sign = 1;
      bool first = true;
      while (true) {
        skip();
        if (pos >= e.size()) break;
        if (!first || e[pos] == '+' || e[pos] == '-') {
          if (e[pos] == '+') {
            sign = 1;
            ++pos;
          } else if (e[pos] == '-') {
            sign = -1;
            ++pos;
          } else if (!first)
            throw MalformedRelation("relation: expected + or - in '" + e + "'");
        }
        first = false;
        skip();
        /* optional coefficient */
        Rat coef = 1;
        if (pos < e.size() && std::isdigit(static_cast<unsigned char>(e[pos]))) {
          std::size_t start = pos;
          while (pos < e.size() &&
                 (std::isdigit(static_cast<unsigned char>(e[pos])) || e[pos] == '/'))
            ++pos;
          coef = rat_from_string(e.substr(start, pos - start));
          skip();
          if (pos < e.size() && e[pos] == '*') {
            ++pos;
            skip();
          }
        }
        /* path: names joined by '*' */
        std::vector<std::size_t> arrows;
        for (;;) {
          skip();
          std::size_t start = pos;
          while (pos < e.size() && (std::isalnum(static_cast<unsigned char>(e[pos])) ||
                                    e[pos] == '_'))
            ++pos;
          if (start == pos) throw MalformedRelation("relation: expected a name in '" + e + "'");
          arrows.push_back(q.arrow_index(e.substr(start, pos - start)));
          skip();
          if (pos < e.size() && e[pos] == '*') {
            ++pos;
            continue;
          }
          break;
        }
        rel.push_back({sign * coef, arrows});
      }
      if (rel.empty()) throw MalformedRelation("empty relation");
      q.relations.push_back(rel);
    }
  }
  return q;
}

RatVec parse_element_expression(const Algebra& a, const std::string& e) {
  const Quiver* q = a.origin_quiver();
  RatVec out(a.dim());
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < e.size() && std::isspace(static_cast<unsigned char>(e[pos]))) ++pos;
  };
  skip();
  if (pos < e.size() && e[pos] == '0' && strip(e) == "0") return out;

  auto name_to_element = [&](const std::string& name) -> RatVec {
    /* trivial path e<label>, an arrow name, or a basis name */
    for (std::size_t k = 0; k < a.dim(); ++k)
      if (a.basis_names()[k] == name) return a.basis_element(k);
    if (q && name.size() > 1 && name[0] == 'e') {
      std::string label = name.substr(1);
      for (std::size_t v = 0; v < q->vertices.size(); ++v)
        if (q->vertices[v] == label) return a.idempotents()[v];
    }
    throw ParseError("unknown algebra element: " + name);
  };

  Rat sign = 1;
  bool first = true;
  while (true) {
    skip();
    if (pos >= e.size()) break;
    if (!first || e[pos] == '+' || e[pos] == '-') {
      if (e[pos] == '+') {
        sign = 1;
        ++pos;
      } else if (e[pos] == '-') {
        sign = -1;
        ++pos;
      } else if (!first)
        throw ParseError("element: expected + or - in '" + e + "'");
    }
    first = false;
    skip();
    Rat coef = 1;
    if (pos < e.size() && std::isdigit(static_cast<unsigned char>(e[pos]))) {
      std::size_t start = pos;
      while (pos < e.size() &&
             (std::isdigit(static_cast<unsigned char>(e[pos])) || e[pos] == '/'))
        ++pos;
      coef = rat_from_string(e.substr(start, pos - start));
      skip();
      if (pos < e.size() && e[pos] == '*') {
        ++pos;
        skip();
      }
    }
    RatVec term;
    bool have_term = false;
    for (;;) {
      skip();
      std::size_t start = pos;
      while (pos < e.size() &&
             (std::isalnum(static_cast<unsigned char>(e[pos])) || e[pos] == '_'))
        ++pos;
      if (start == pos) {
        if (have_term) break;
        /* pure scalar term: coef * unit */
        term = a.unit();
        have_term = true;
        break;
      }
      RatVec factor = name_to_element(e.substr(start, pos - start));
      term = have_term ? a.multiply(term, factor) : factor;
      have_term = true;
      skip();
      if (pos < e.size() && e[pos] == '*') {
        ++pos;
        continue;
      }
      break;
    }
    out = out + scaled(term, sign * coef);
  }
  return out;
}

std::vector<TwoTerm> parse_complexes_toml(const std::string& text,
                                          const AlgebraPtr& a) {
  TomlDoc doc = parse_toml(text);
  const Quiver* q = a->origin_quiver();
  auto vertex_of = [&](const std::string& label) -> std::size_t {
    if (q) return q->vertex_index(label);
    return static_cast<std::size_t>(std::stoul(label)) - 1;
  };
  std::vector<TwoTerm> out;
  for (const TomlTable* ct : doc.all("complex")) {
    std::vector<std::size_t> p_minus, p_zero;
    if (const TomlValue* pm = ct->find("p_minus"))
      for (const auto& v : pm->arr) p_minus.push_back(vertex_of(v.str));
    if (const TomlValue* pz = ct->find("p_zero"))
      for (const auto& v : pz->arr) p_zero.push_back(vertex_of(v.str));
    AlgMatrix d = AlgMatrix::zero(*a, p_zero, p_minus);
    if (const TomlValue* diff = ct->find("diff")) {
      if (diff->arr.size() != p_zero.size())
        throw ParseError("complex: diff row count must match p_zero");
      for (std::size_t r = 0; r < diff->arr.size(); ++r) {
        if (diff->arr[r].arr.size() != p_minus.size())
          throw ParseError("complex: diff column count must match p_minus");
        for (std::size_t c = 0; c < p_minus.size(); ++c)
          d.entry[r][c] = parse_element_expression(*a, diff->arr[r].arr[c].str);
      }
    } else if (!p_zero.empty() && !p_minus.empty()) {
      throw ParseError("complex: diff required when both degrees are nonempty");
    }
    out.emplace_back(a, p_minus, p_zero, d);
  }
  return out;
}

/* ------------------------------ emitters ------------------------------ */

namespace {

Json vec_json(const RatVec& v) {
  Json a = Json::array();
  const BigInt big = BigInt(1) << 60;
  for (const auto& c : v) {
    if (denominator(c) == 1 && numerator(c) < big && numerator(c) > -big)
      a.push_back(numerator(c).convert_to<long>());
    else
      a.push_back(rat_to_string(c));
  }
  return a;
}

Json vecs_json(const std::vector<RatVec>& vs) {
  Json a = Json::array();
  for (const auto& v : vs) a.push_back(vec_json(v));
  return a;
}

Json dimvec_json(const DimVector& v) {
  Json a = Json::array();
  for (long c : v) a.push_back(c);
  return a;
}

Json gvec_json(const GVector& v) {
  Json a = Json::array();
  for (long c : v) a.push_back(c);
  return a;
}

}  // namespace

Json cone_json(const RatCone& c) {
  Json j;
  j["rays"] = vecs_json(c.rays());
  j["normals"] = vecs_json(c.normals());
  j["lineality"] = vecs_json(c.lineality());
  return j;
}

Json fan_json(const GenFan& f) {
  Json j;
  j["ambient_dim"] = f.ambient;
  Json cones = Json::array();
  for (const auto& c : f.cones) cones.push_back(cone_json(c));
  j["cones"] = cones;
  return j;
}

Json atlas_json(const SiltingAtlas& atlas) {
  Json j;
  j["algebra_dim"] = atlas.algebra()->dim();
  j["rank"] = atlas.algebra()->num_idempotents();
  j["complete"] = atlas.complete();
  Json verts = Json::array();
  for (const auto& v : atlas.vertices()) {
    Json g = Json::array();
    for (const auto& s : v.summands) g.push_back(gvec_json(s.g_vector()));
    verts.push_back(std::move(g));
  }
  j["vertices"] = verts;
  Json arrows = Json::array();
  for (const auto& arr : atlas.arrows()) {
    Json e;
    e["src"] = arr.src;
    e["dst"] = arr.dst;
    e["index"] = arr.index;
    e["label"] = dimvec_json(arr.label_class);
    arrows.push_back(std::move(e));
  }
  j["arrows"] = arrows;
  return j;
}

std::string atlas_dot(const SiltingAtlas& atlas) {
  std::ostringstream os;
  os << "digraph exchange {\n";
  for (std::size_t v = 0; v < atlas.vertices().size(); ++v) {
    os << "  v" << v << " [label=\"";
    const auto& summands = atlas.vertices()[v].summands;
    for (std::size_t s = 0; s < summands.size(); ++s) {
      if (s) os << " ";
      GVector g = summands[s].g_vector();
      os << "(";
      for (std::size_t k = 0; k < g.size(); ++k) {
        if (k) os << ",";
        os << g[k];
      }
      os << ")";
    }
    os << "\"];\n";
  }
  for (const auto& arr : atlas.arrows()) {
    os << "  v" << arr.src << " -> v" << arr.dst << " [label=\"";
    for (std::size_t k = 0; k < arr.label_class.size(); ++k) {
      if (k) os << ",";
      os << arr.label_class[k];
    }
    os << "\"];\n";
  }
  os << "}\n";
  return os.str();
}

Json interval_report(IntervalContext& ctx) {
  Json j;
  j["algebra"] = {{"dim", ctx.red.A->dim()},
                  {"rank", ctx.red.A->num_idempotents()}};
  Json ug = Json::array();
  for (const auto& x : ctx.red.u) ug.push_back(gvec_json(x.g_vector()));
  j["u_g_vectors"] = ug;

  /* reduction data */
  {
    Json red;
    red["dim_B"] = ctx.red.B->dim();
    red["rank_B"] = ctx.red.B->num_idempotents();
    if (auto cert = path_algebra_certificate(*ctx.red.B)) {
      Json qj;
      qj["vertices"] = cert->vertices;
      Json arrows = Json::array();
      for (const auto& arr : cert->arrows) {
        Json e;
        e["name"] = arr.name;
        e["from"] = cert->vertices[arr.from];
        e["to"] = cert->vertices[arr.to];
        arrows.push_back(std::move(e));
      }
      qj["arrows"] = arrows;
      red["quiver"] = qj;
    }
    Json pi = Json::array();
    for (std::size_t i = 0; i < ctx.red.pi.rows(); ++i) pi.push_back(vec_json(ctx.red.pi.row(i)));
    red["pi"] = pi;
    Json dvals = Json::array();
    for (auto d : ctx.red.d) dvals.push_back(d);
    red["d"] = dvals;
    Json mods = Json::array();
    for (const auto& m : ctx.red.M) mods.push_back(dimvec_json(m->dim_vector()));
    red["M_dim_vectors"] = mods;
    {
      Json mult = Json::array();
      for (std::size_t i = 0; i < ctx.red.B->dim(); ++i) {
        Json row = Json::array();
        for (std::size_t k = 0; k < ctx.red.B->dim(); ++k)
          row.push_back(vec_json(ctx.red.B->multiply(ctx.red.B->basis_element(i),
                                                     ctx.red.B->basis_element(k))));
        mult.push_back(std::move(row));
      }
      red["B_structure_constants"] = mult;
    }
    {
      Json acts = Json::array();
      for (const auto& m : ctx.red.M) {
        Json per = Json::array();
        for (std::size_t k = 0; k < ctx.red.B->dim(); ++k) {
          Json mat = Json::array();
          const RatMatrix& a = m->basis_action(k);
          for (std::size_t r = 0; r < a.rows(); ++r) mat.push_back(vec_json(a.row(r)));
          per.push_back(std::move(mat));
        }
        acts.push_back(std::move(per));
      }
      red["M_actions"] = acts;
    }
    j["reduction"] = red;
  }

  {
    ConvexitySplit cs = strong_convexity_split(ctx);
    Json s;
    s["sincere"] = cs.sincere;
    Json idx = Json::array();
    for (auto i : cs.lineality_indices) idx.push_back(i + 1);
    s["lineality_indices"] = idx;
    j["strong_convexity"] = s;
  }

  if (!ctx.reduction_complete) {
    j["complete"] = false;
    return j;
  }
  j["complete"] = true;
  j["dcu"] = cone_json(ctx.dcu);

  Json facets = Json::array();
  for (const auto& f : ctx.facets) {
    Json e;
    e["i"] = f.i_F + 1;
    e["eps"] = f.eps;
    e["label_dimvec"] = dimvec_json(f.label_class);
    e["normal"] = vec_json(f.normal);
    facets.push_back(std::move(e));
  }
  j["facets"] = facets;

  {
    auto by_I = faces_by_I(ctx);
    Json faces = Json::array();
    for (const auto& [I, idxs] : by_I) {
      Json e;
      Json iset = Json::array();
      for (auto i : I) iset.push_back(i + 1);
      e["I"] = iset;
      Json fl = Json::array();
      for (auto fi : idxs) {
        Json fj;
        fj["dim"] = ctx.faces[fi].dim();
        fj["rays"] = vecs_json(ctx.faces[fi].rays());
        fj["lineality"] = vecs_json(ctx.faces[fi].lineality());
        fl.push_back(std::move(fj));
      }
      e["faces"] = fl;
      faces.push_back(std::move(e));
    }
    j["faces_by_I"] = faces;
  }

  {
    Json fans = Json::array();
    std::vector<std::set<std::size_t>> subsets;
    std::size_t m = ctx.m();
    for (std::size_t mask = 0; mask < (std::size_t(1) << m); ++mask) {
      std::set<std::size_t> I;
      for (std::size_t i = 0; i < m; ++i)
        if (mask & (std::size_t(1) << i)) I.insert(i);
      subsets.push_back(I);
    }
    std::sort(subsets.begin(), subsets.end(),
              [](const auto& a, const auto& b) {
                if (a.size() != b.size()) return a.size() < b.size();
                return a < b;
              });
    for (const auto& I : subsets) {
      Json e;
      Json iset = Json::array();
      for (auto i : I) iset.push_back(i + 1);
      e["I"] = iset;
      GenFan si = sigma_I(ctx, I);
      e["sigma_I"] = fan_json(si);
      FanCheck ck = fan_check(si);
      e["sigma_I_fan"] = ck.is_fan;
      e["sigma_I_complete"] = ck.is_complete;
      SigmaMIResult mi = sigma_MI(ctx, I);
      e["sigma_MI_equals_sigma_I"] = mi.equals_sigma_I;
      fans.push_back(std::move(e));
    }
    j["fans_by_I"] = fans;
  }

  {
    /* rho on the basis vectors and their negatives */
    Json table = Json::array();
    std::size_t nb = ctx.n() - ctx.m();
    std::vector<RatVec> samples;
    for (std::size_t k = 0; k < nb; ++k) {
      RatVec e(nb, Rat(0));
      e[k] = 1;
      samples.push_back(e);
      e[k] = -1;
      samples.push_back(e);
    }
    if (nb >= 2) {
      RatVec e(nb, Rat(0));
      e[0] = 1;
      e[1] = -1;
      samples.push_back(e);
    }
    for (const auto& xi : samples) {
      Json row;
      row["xi"] = vec_json(xi);
      RatVec r = rho(ctx, xi);
      row["rho"] = vec_json(r);
      row["pi_of_rho"] = vec_json(pi_map(ctx.red, r));
      table.push_back(std::move(row));
    }
    j["rho_samples"] = table;
  }
  return j;
}

std::string json_to_string(const Json& j) { return j.dump(2) + "\n"; }

/* -------------------------------- SVG --------------------------------- */

namespace {

double approx(const Rat& r) {
  return numerator(r).convert_to<double>() / denominator(r).convert_to<double>();
}

}  // namespace

std::string fan_svg(const GenFan& f) {
  if (f.ambient != 2) throw Error("fan_svg: only two-dimensional fans are drawn");
  std::ostringstream os;
  const double S = 160.0, C = 200.0;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"400\" height=\"400\" "
        "viewBox=\"0 0 400 400\">\n";
  auto pt = [&](double x, double y) {
    std::ostringstream p;
    p.setf(std::ios::fixed);
    p.precision(2);
    p << (C + S * x) << "," << (C - S * y);
    return p.str();
  };
  /* shaded maximal cones */
  int shade = 0;
  for (const auto& cone : f.maximal_cones()) {
    std::vector<std::pair<double, double>> dirs;
    for (const auto& r : cone.rays()) {
      double x = approx(r[0]), y = approx(r[1]);
      double n = std::sqrt(x * x + y * y);
      dirs.push_back({x / n, y / n});
    }
    for (const auto& l : cone.lineality()) {
      double x = approx(l[0]), y = approx(l[1]);
      double n = std::sqrt(x * x + y * y);
      dirs.push_back({x / n, y / n});
      dirs.push_back({-x / n, -y / n});
    }
    if (dirs.size() >= 2) {
      os << "  <polygon points=\"" << pt(0, 0);
      for (const auto& [x, y] : dirs) os << " " << pt(x, y);
      os << "\" fill=\"#8888ff\" fill-opacity=\"0." << (2 + (shade++ % 3))
         << "\" stroke=\"none\"/>\n";
    }
  }
  /* rays */
  std::set<std::string> drawn;
  for (const auto& cone : f.cones) {
    auto draw_dir = [&](double x, double y) {
      double n = std::sqrt(x * x + y * y);
      std::ostringstream line;
      line.setf(std::ios::fixed);
      line.precision(2);
      line << "  <line x1=\"" << C << "\" y1=\"" << C << "\" x2=\""
           << (C + S * x / n) << "\" y2=\"" << (C - S * y / n)
           << "\" stroke=\"black\" stroke-width=\"2\"/>\n";
      if (drawn.insert(line.str()).second) os << line.str();
    };
    for (const auto& r : cone.rays()) draw_dir(approx(r[0]), approx(r[1]));
    for (const auto& l : cone.lineality()) {
      draw_dir(approx(l[0]), approx(l[1]));
      draw_dir(-approx(l[0]), -approx(l[1]));
    }
  }
  os << "</svg>\n";
  return os.str();
}

std::string slice_svg(const RatCone& cone, const RatVec& plane, const Rat& level) {
  /* vertices: rays scaled onto the affine hyperplane */
  std::vector<RatVec> verts;
  for (const auto& r : cone.rays()) {
    Rat v = 0;
    for (std::size_t k = 0; k < r.size(); ++k) v += plane[k] * r[k];
    if (v <= 0) continue;  /* unbounded direction: not on the slice */
    verts.push_back(scaled(r, level / v));
  }
  if (verts.empty()) throw Error("slice_svg: the plane misses the cone");
  /* edges: 2-dimensional faces contribute segments between their rays */
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (const auto& face : all_faces(cone)) {
    if (face.dim() != 2) continue;
    std::vector<std::size_t> on;
    for (std::size_t i = 0; i < verts.size(); ++i)
      if (face.contains(verts[i])) on.push_back(i);
    if (on.size() == 2) edges.emplace_back(on[0], on[1]);
  }
  /* deterministic generic projection: two fixed direction vectors keep
     distinct rational vertices apart in practice */
  std::size_t n = plane.size();
  std::ostringstream os;
  os.setf(std::ios::fixed);
  os.precision(2);
  double minx = 1e9, maxx = -1e9, miny = 1e9, maxy = -1e9;
  std::vector<std::pair<double, double>> pts;
  for (const auto& v : verts) {
    double x = 0, y = 0;
    for (std::size_t k = 0; k < n; ++k) {
      x += approx(v[k]) / double(k + 1);
      y += approx(v[k]) / double((k + 2) * (k + 2) - 1);
    }
    pts.push_back({x, y});
    minx = std::min(minx, x);
    maxx = std::max(maxx, x);
    miny = std::min(miny, y);
    maxy = std::max(maxy, y);
  }
  double w = std::max(1e-9, maxx - minx), h = std::max(1e-9, maxy - miny);
  double s = 360.0 / std::max(w, h);
  auto X = [&](double x) { return 20 + s * (x - minx); };
  auto Y = [&](double y) { return 380 - s * (y - miny); };
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"400\" height=\"400\" "
        "viewBox=\"0 0 400 400\">\n";
  for (const auto& [i, j] : edges)
    os << "  <line x1=\"" << X(pts[i].first) << "\" y1=\"" << Y(pts[i].second)
       << "\" x2=\"" << X(pts[j].first) << "\" y2=\"" << Y(pts[j].second)
       << "\" stroke=\"black\" stroke-width=\"1.5\"/>\n";
  for (std::size_t i = 0; i < pts.size(); ++i) {
    os << "  <circle cx=\"" << X(pts[i].first) << "\" cy=\"" << Y(pts[i].second)
       << "\" r=\"3\" fill=\"black\"/>\n";
    os << "  <text x=\"" << X(pts[i].first) + 5 << "\" y=\"" << Y(pts[i].second) - 5
       << "\" font-size=\"10\">(";
    for (std::size_t k = 0; k < verts[i].size(); ++k) {
      if (k) os << ",";
      os << rat_to_string(verts[i][k]);
    }
    os << ")</text>\n";
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace siltgeo
