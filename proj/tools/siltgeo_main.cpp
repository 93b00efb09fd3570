#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <nlohmann/json.hpp>
#include <sstream>

#include "siltgeo/errors.hpp"
#include "siltgeo/io.hpp"
#include "siltgeo/verify.hpp"

using namespace siltgeo;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitDiff = 1;
constexpr int kExitInput = 2;
constexpr int kExitCapability = 3;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError("cannot write " + path);
  out << content;
}

std::pair<RatVec, Rat> parse_plane(const std::string& spec) {
  std::size_t eq = spec.find('=');
  if (eq == std::string::npos) throw ParseError("plane: expected c1,...,cn=level");
  Rat level = rat_from_string(spec.substr(eq + 1));
  RatVec coeffs;
  std::string head = spec.substr(0, eq);
  std::istringstream in(head);
  std::string tok;
  while (std::getline(in, tok, ',')) coeffs.push_back(rat_from_string(tok));
  return {coeffs, level};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact interval-neighborhood computations for bound quiver algebras"};
  std::string algebra_path, command;
  std::string u_path, out_path, dot_path, svg_path, plane_spec;
  std::size_t cap = 10000, path_cap = 12, threads = 1;
  if (const char* env = std::getenv("SILTGEO_CAP")) cap = std::strtoul(env, nullptr, 10);

  app.add_option("algebra", algebra_path, "quiver algebra TOML file")->required();
  app.add_option("command", command, "enumerate | interval | verify-paper")->required();
  app.add_option("--U", u_path, "presilting complex TOML file");
  app.add_option("--cap", cap, "enumeration cap");
  app.add_option("--path-cap", path_cap, "path length cap for the quiver algebra");
  app.add_option("--out", out_path, "output JSON path");
  app.add_option("--dot", dot_path, "exchange quiver DOT path");
  app.add_option("--svg", svg_path, "SVG output path");
  app.add_option("--plane", plane_spec, "affine slice plane, e.g. \"2,1,1,0=1\"");
  app.add_option("--threads", threads, "worker threads for fan evaluation");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) ? kExitInput : kExitOk;
  }

  try {
    if (command == "verify-paper") {
      VerifyResult r = verify_paper();
      std::cout << r.report;
      if (!out_path.empty()) write_file(out_path, r.report);
      return r.ok ? kExitOk : kExitDiff;
    }

    AlgebraPtr a = Algebra::from_quiver(parse_quiver_toml(read_file(algebra_path)),
                                        path_cap);

    if (command == "enumerate") {
      SiltingAtlas atlas = SiltingAtlas::enumerate(a, cap);
      Json j = atlas_json(atlas);
      std::string text = json_to_string(j);
      if (!out_path.empty())
        write_file(out_path, text);
      else
        std::cout << text;
      if (!dot_path.empty()) write_file(dot_path, atlas_dot(atlas));
      if (!atlas.complete())
        std::cerr << "note: enumeration stopped at the cap; atlas flagged incomplete\n";
      return kExitOk;
    }

    if (command == "interval") {
      if (u_path.empty()) throw ParseError("interval: --U is required");
      std::vector<TwoTerm> u = parse_complexes_toml(read_file(u_path), a);
      for (const auto& x : u)
        if (!is_indec_complex(x))
          throw NotSilting("interval: every [[complex]] block must be indecomposable");
      for (std::size_t i = 0; i < u.size(); ++i)
        for (std::size_t j = i + 1; j < u.size(); ++j)
          if (twoterm_indec_isomorphic(u[i], u[j]))
            throw NotSilting("interval: summands must be pairwise non-isomorphic");
      {
        TwoTerm total = TwoTerm::zero_complex(a);
        for (const auto& x : u) total = TwoTerm::direct_sum(total, x);
        if (!is_presilting(total)) throw NotSilting("interval: U is not presilting");
      }
      IntervalContext ctx = make_interval_context(a, u, cap);
      ctx.threads = threads;
      if (!ctx.reduction_complete)
        throw IncompleteReduction(
            "the reduced algebra is not certified brick finite at this cap; "
            "retry with a larger --cap");
      Json j = interval_report(ctx);
      std::string text = json_to_string(j);
      if (!out_path.empty())
        write_file(out_path, text);
      else
        std::cout << text;
      if (!svg_path.empty()) {
        if (plane_spec.empty()) throw ParseError("--svg needs --plane");
        auto [coeffs, level] = parse_plane(plane_spec);
        write_file(svg_path, slice_svg(ctx.dcu, coeffs, level));
      }
      return kExitOk;
    }

    throw ParseError("unknown command: " + command);
  } catch (const ParseError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const NotSilting& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const MalformedRelation& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const InfiniteDimensional& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::invalid_argument& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const Error& e) {
    std::cerr << "capability error: " << e.what() << "\n";
    return kExitCapability;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCapability;
  }
}
