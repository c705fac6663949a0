#include <benchmark/benchmark.h>

#include "vfts/generate.hpp"
#include "vfts/polygon_spanner.hpp"
#include "vfts/verify.hpp"

using namespace vfts;

namespace {

std::vector<WeightedPoint> rd_points(int n, std::uint64_t seed) {
  GenerateOptions opts;
  opts.mode = "rd";
  opts.n = n;
  opts.seed = seed;
  return generate_instance(opts).points;
}

void BM_BuildEuclidean(benchmark::State& state) {
  auto pts = rd_points(static_cast<int>(state.range(0)), 1);
  for (auto _ : state) {
    auto g = build_vftswp_rd(pts, 2, 0.5);
    benchmark::DoNotOptimize(g.edge_count());
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_BuildEuclidean)->RangeMultiplier(2)->Range(64, 2048)->Complexity();

void BM_BuildSimplePolygon(benchmark::State& state) {
  GenerateOptions opts;
  opts.mode = "polygon";
  opts.shape = "convex-20";
  opts.n = static_cast<int>(state.range(0));
  opts.seed = 2;
  auto inst = generate_instance(opts);
  auto dom = inst.require_domain();
  for (auto _ : state) {
    auto g = build_vftswp_simple_polygon(dom.outer(), inst.points, 1, 0.5, true);
    benchmark::DoNotOptimize(g.edge_count());
  }
}
BENCHMARK(BM_BuildSimplePolygon)->Arg(20)->Arg(40)->Arg(80);

void BM_BuildDomain(benchmark::State& state) {
  GenerateOptions opts;
  opts.mode = "domain";
  opts.shape = "square-hole";
  opts.n = static_cast<int>(state.range(0));
  opts.seed = 3;
  auto inst = generate_instance(opts);
  auto dom = inst.require_domain();
  for (auto _ : state) {
    auto g = build_vftswp_domain(dom, inst.points, 1, 0.5, true);
    benchmark::DoNotOptimize(g.edge_count());
  }
}
BENCHMARK(BM_BuildDomain)->Arg(20)->Arg(40);

void BM_GeodesicQuery(benchmark::State& state) {
  auto dom = shape_domain("square-2holes");
  GeodesicEngine eng{dom};
  Vec2 a{0.05, 0.05}, b{0.95, 0.95};
  for (auto _ : state) benchmark::DoNotOptimize(eng.distance(a, b));
}
BENCHMARK(BM_GeodesicQuery);

void BM_SampledVerify(benchmark::State& state) {
  auto pts = rd_points(200, 4);
  auto g = build_vftswp_rd(pts, 2, 0.5);
  for (auto _ : state) {
    auto rep = fault_stretch_check(g, pts, 2, 6.25, euclidean_metric(), false, 20, 5);
    benchmark::DoNotOptimize(rep.pass);
  }
}
BENCHMARK(BM_SampledVerify);

}  // namespace

BENCHMARK_MAIN();
