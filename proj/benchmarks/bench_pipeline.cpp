#include <benchmark/benchmark.h>

#include "siltgeo/interval.hpp"

using namespace siltgeo;

namespace {

AlgebraPtr linear_algebra(std::size_t n) {
  Quiver q;
  for (std::size_t v = 1; v <= n; ++v) q.vertices.push_back(std::to_string(v));
  for (std::size_t v = 1; v < n; ++v)
    q.arrows.push_back({"a" + std::to_string(v), v - 1, v});
  return Algebra::from_quiver(q);
}

void BM_enumerate(benchmark::State& state) {
  auto a = linear_algebra(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    SiltingAtlas atlas = SiltingAtlas::enumerate(a);
    benchmark::DoNotOptimize(atlas.vertices().size());
  }
}

void BM_mtf_fan(benchmark::State& state) {
  auto a = linear_algebra(3);
  SiltingAtlas atlas = SiltingAtlas::enumerate(a);
  AModulePtr m = projective_module(a, 0);
  for (auto _ : state) {
    MtfFan f = mtf_fan(atlas, *m);
    benchmark::DoNotOptimize(f.classes.size());
  }
}

void BM_facet_table(benchmark::State& state) {
  auto a = linear_algebra(4);
  SiltingAtlas atlas = SiltingAtlas::enumerate(a);
  const AtlasPresilting* two = nullptr;
  for (const auto& p : atlas.presiltings())
    if (p.summands.size() == 2) {
      two = &p;
      break;
    }
  std::vector<std::size_t> d_u;
  for (const auto& x : two->summands) d_u.push_back(division_dim(x));
  for (auto _ : state) {
    ConstrainedAtlas ca = constrained_atlas_from(two->summands, atlas);
    FacetTable ft = facet_table(a, two->summands, d_u, ca);
    benchmark::DoNotOptimize(ft.facets.size());
  }
}

}  // namespace

BENCHMARK(BM_enumerate)->Arg(2)->Arg(3);
BENCHMARK(BM_mtf_fan);
BENCHMARK(BM_facet_table);

BENCHMARK_MAIN();
