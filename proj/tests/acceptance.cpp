// Acceptance gate: one pass/fail line per criterion, exit 1 on any failure.
#include <cmath>
#include <cstdio>
#include <limits>
#include <random>
#include <string>
#include <vector>

#include "vfts/generate.hpp"
#include "vfts/polygon_spanner.hpp"
#include "vfts/verify.hpp"

using namespace vfts;

namespace {

bool all_ok = true;
double global_min_slack = std::numeric_limits<double>::infinity();
std::vector<std::string> structural_violations;

void report(int idx, const char* what, bool ok, const std::string& detail) {
  std::printf("%s criterion %d: %s (%s)\n", ok ? "PASS" : "FAIL", idx, what, detail.c_str());
  if (!ok) all_ok = false;
}

void note_report(const FaultReport& rep) {
  if (rep.min_slack < global_min_slack) global_min_slack = rep.min_slack;
}

std::vector<WeightedPoint> rd_instance(int n, std::uint64_t seed) {
  GenerateOptions opts;
  opts.mode = "rd";
  opts.n = n;
  opts.seed = seed;
  return generate_instance(opts).points;
}

InstanceFile region_instance(const std::string& mode, const std::string& shape, int n,
                             std::uint64_t seed) {
  GenerateOptions opts;
  opts.mode = mode;
  opts.shape = shape;
  opts.n = n;
  opts.seed = seed;
  return generate_instance(opts);
}

// 1. Euclidean stretch after up to k faults, exhaustive.
void criterion1() {
  int instances = 0, failures = 0;
  double worst = 0.0;
  for (int k : {1, 2}) {
    for (double eps : {0.25, 0.5}) {
      for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        auto pts = rd_instance(20, 1000 * k + seed + (eps > 0.3 ? 100 : 0));
        auto g = build_vftswp_rd(pts, k, eps);
        double t = (2.0 + eps) * (2.0 + eps);
        auto rep = fault_stretch_check(g, pts, k, t, euclidean_metric(), true);
        note_report(rep);
        ++instances;
        if (!rep.pass) ++failures;
        worst = std::max(worst, rep.max_stretch / t);

        auto cl = cluster(pts, k, eps);
        for (auto& v : check_clustering(cl, pts, k, eps)) structural_violations.push_back(v);
        for (auto& v : check_graph(g, pts, euclidean_metric()))
          structural_violations.push_back(v);
      }
    }
  }
  char buf[128];
  std::snprintf(buf, sizeof buf, "%d/%d instances within bound, worst stretch ratio %.4f",
                instances - failures, instances, worst);
  report(1, "Euclidean stretch (2+eps)^2 under k faults", failures == 0, buf);
}

// 2. Edge count scales linearly: |E|/(k n) stable across n.
void criterion2() {
  double lo = 1e18, hi = 0.0;
  for (int n : {100, 200, 400}) {
    double sum = 0.0;
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
      auto pts = rd_instance(n, 77 * n + seed);
      auto g = build_vftswp_rd(pts, 2, 0.5);
      sum += size_report(g, 2, 0.5).edges_per_kn;
    }
    double mean = sum / 5.0;
    lo = std::min(lo, mean);
    hi = std::max(hi, mean);
  }
  char buf[128];
  std::snprintf(buf, sizeof buf, "|E|/(k n) mean ranges %.3f..%.3f, ratio %.3f", lo, hi,
                hi / lo);
  report(2, "Euclidean spanner size is O(k n)", hi <= 2.0 * lo, buf);
}

// 3 + 4. Geodesic stretch in a 20-gon (unrefined and refined) and in a domain
// with one hole (refined).
void criteria34() {
  int fail3 = 0, fail4 = 0, total3 = 0, total4 = 0;
  double worst3 = 0.0, worst4 = 0.0;
  const double eps = 0.5;

  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    auto inst = region_instance("polygon", "convex-20", 20, seed);
    auto dom = inst.require_domain();
    GeodesicEngine eng{dom};
    auto metric = geodesic_metric(eng);

    BuildTrace tr_u;
    auto gu = build_vftswp_simple_polygon(dom.outer(), inst.points, 1, eps, false, &tr_u);
    double tu = 12.0 + 15.0 * eps;
    auto ru = fault_stretch_check(gu, inst.points, 1, tu, metric, true);
    note_report(ru);
    ++total3;
    if (!ru.pass) ++fail3;
    worst3 = std::max(worst3, ru.max_stretch / tu);

    BuildTrace tr_r;
    auto gr = build_vftswp_simple_polygon(dom.outer(), inst.points, 1, eps, true, &tr_r);
    double tref = 4.0 + 14.0 * eps;
    auto rr = fault_stretch_check(gr, inst.points, 1, tref, metric, true);
    note_report(rr);
    ++total4;
    if (!rr.pass) ++fail4;
    worst4 = std::max(worst4, rr.max_stretch / tref);

    for (const auto* tr : {&tr_u, &tr_r}) {
      for (auto& v : check_balance(*tr)) structural_violations.push_back(v);
      for (auto& v : check_projection_optimality(dom, inst.points, *tr))
        structural_violations.push_back(v);
    }
    for (auto& v : check_graph(gr, inst.points, metric)) structural_violations.push_back(v);
  }

  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    auto inst = region_instance("domain", "square-hole", 20, 50 + seed);
    auto dom = inst.require_domain();
    GeodesicEngine eng{dom};
    auto metric = geodesic_metric(eng);
    BuildTrace trace;
    auto g = build_vftswp_domain(dom, inst.points, 1, eps, true, &trace);
    double t = 4.0 + 14.0 * eps;
    auto rep = fault_stretch_check(g, inst.points, 1, t, metric, true);
    note_report(rep);
    ++total4;
    if (!rep.pass) ++fail4;
    worst4 = std::max(worst4, rep.max_stretch / t);

    for (auto& v : check_balance(trace)) structural_violations.push_back(v);
    for (auto& v : check_projection_optimality(dom, inst.points, trace))
      structural_violations.push_back(v);
    for (auto& v : check_decomposition(decompose_domain(dom), 1))
      structural_violations.push_back(v);
    for (auto& v : check_graph(g, inst.points, metric)) structural_violations.push_back(v);
  }

  char b3[128], b4[128];
  std::snprintf(b3, sizeof b3, "%d/%d instances within 19.5, worst ratio %.4f",
                total3 - fail3, total3, worst3);
  std::snprintf(b4, sizeof b4, "%d/%d instances within 11.0, worst ratio %.4f",
                total4 - fail4, total4, worst4);
  report(3, "geodesic stretch, unrefined projections", fail3 == 0, b3);
  report(4, "geodesic stretch, refined projections (polygon + 1-hole domain)", fail4 == 0,
         b4);
}

// 5. Shortest-path engine vs the independent visibility oracle.
void criterion5() {
  std::vector<PolygonalDomain> regions{
      PolygonalDomain{shape_polygon("convex-8")}, PolygonalDomain{shape_polygon("lshape")},
      PolygonalDomain{shape_polygon("ushape")},   PolygonalDomain{shape_polygon("comb-4")},
      PolygonalDomain{shape_polygon("random-14", 9)},
      shape_domain("square-hole"),                shape_domain("square-2holes"),
  };
  int bad = 0, pairs_total = 0;
  double worst_rel = 0.0;
  std::uint64_t seed = 500;
  for (const auto& dom : regions) {
    GeodesicEngine eng{dom};
    GenerateOptions opts;
    opts.mode = dom.hole_count() ? "domain" : "polygon";
    opts.n = 15;
    opts.seed = seed++;
    // reuse the seeded generator's rejection sampler via a custom instance
    InstanceFile inst;
    {
      std::mt19937_64 rng(opts.seed);
      std::uniform_real_distribution<double> u(0.0, 1.0);
      while (static_cast<int>(inst.points.size()) < opts.n) {
        Vec2 p{u(rng), u(rng)};
        if (dom.in_free_space(p) && !dom.on_boundary(p, 1e-6))
          inst.points.emplace_back(p, 0.0, static_cast<int>(inst.points.size()));
      }
    }
    int pairs = 0;
    for (std::size_t i = 0; i < inst.points.size() && pairs < 100; ++i) {
      for (std::size_t j = i + 1; j < inst.points.size() && pairs < 100; ++j, ++pairs) {
        Vec2 a = inst.points[i].xy(), b = inst.points[j].xy();
        double d = eng.distance(a, b);
        double o = visibility_oracle_distance(dom, a, b);
        double rel = std::abs(d - o) / (1.0 + o);
        worst_rel = std::max(worst_rel, rel);
        if (rel > 1e-9) ++bad;
      }
    }
    pairs_total += pairs;
  }
  char buf[128];
  std::snprintf(buf, sizeof buf, "%d pairs over 7 regions, worst relative gap %.2e",
                pairs_total, worst_rel);
  report(5, "shortest-path engine matches the visibility oracle", bad == 0, buf);
}

void criterion6() {
  char buf[128];
  std::snprintf(buf, sizeof buf, "%zu violations recorded", structural_violations.size());
  for (std::size_t i = 0; i < structural_violations.size() && i < 5; ++i)
    std::printf("  violation: %s\n", structural_violations[i].c_str());
  report(6, "structural invariants (clustering, balance, decomposition, projections)",
         structural_violations.empty(), buf);
}

void criterion7() {
  char buf[128];
  std::snprintf(buf, sizeof buf, "min graph-minus-metric slack %.3e", global_min_slack);
  report(7, "spanner paths never undercut the metric", global_min_slack >= -1e-9, buf);
}

}  // namespace

int main() {
  criterion1();
  criterion2();
  criteria34();
  criterion5();
  criterion6();
  criterion7();
  return all_ok ? 0 : 1;
}
