// Command-line driver: generate instances, build spanners, verify fault
// tolerance, print size statistics, and render SVG figures.

#include <iostream>
#include <set>
#include <string>

#include <CLI11.hpp>

#include "vfts/generate.hpp"
#include "vfts/instance_io.hpp"
#include "vfts/polygon_spanner.hpp"
#include "vfts/svg.hpp"
#include "vfts/verify.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitInputError = 2;

vfts::SpannerGraph build_spanner(const vfts::InstanceFile& inst, int k, double eps,
                                 bool refine) {
  if (inst.mode == "rd") return vfts::build_vftswp_rd(inst.points, k, eps);
  if (inst.mode == "polygon")
    return vfts::build_vftswp_simple_polygon(inst.require_domain().outer(), inst.points, k,
                                             eps, refine);
  return vfts::build_vftswp_domain(inst.require_domain(), inst.points, k, eps, refine);
}

double default_bound(const std::string& mode, double eps, bool refine) {
  if (mode == "rd") return (2.0 + eps) * (2.0 + eps);
  return refine ? 4.0 + 14.0 * eps : 12.0 + 15.0 * eps;
}

void print_size_report(const vfts::SizeReport& rep) {
  std::cout << "edges: " << rep.edge_count << "\n"
            << "max_degree: " << rep.max_degree << "\n"
            << "edges_per_kn: " << rep.edges_per_kn << "\n"
            << "normalized_size: " << rep.normalized << "\n";
}

void print_fault_report(const vfts::FaultReport& rep) {
  std::cout << "mode: " << (rep.exhaustive ? "exhaustive" : "sampled") << "\n";
  if (!rep.exhaustive)
    std::cout << "seed: " << rep.seed << "\ntrials: " << rep.trials << "\n";
  std::cout << "t_bound: " << rep.t_bound << "\n"
            << "max_stretch: " << rep.max_stretch << "\n"
            << "pairs_checked: " << rep.pairs_checked << "\n"
            << "min_slack: " << rep.min_slack << "\n";
  if (rep.witness) {
    std::cout << "witness: pair (" << rep.witness->p << ", " << rep.witness->q
              << ") removed {";
    for (std::size_t i = 0; i < rep.witness->removed.size(); ++i)
      std::cout << (i ? ", " : "") << rep.witness->removed[i];
    std::cout << "} stretch " << rep.witness->stretch << "\n";
  }
  std::cout << "pass: " << (rep.pass ? "true" : "false") << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fault-tolerant spanners for weighted points"};
  app.require_subcommand(1);

  // gen
  auto* gen = app.add_subcommand("gen", "Generate a seeded instance");
  vfts::GenerateOptions gopt;
  std::string gen_out;
  gen->add_option("--mode", gopt.mode, "rd | polygon | domain")->default_val("rd");
  gen->add_option("--n", gopt.n, "number of points")->default_val(20);
  gen->add_option("--d", gopt.d, "dimension (rd mode)")->default_val(2);
  gen->add_option("--shape", gopt.shape, "polygon/domain shape name")
      ->default_val("convex-8");
  gen->add_option("--seed", gopt.seed, "random seed")->default_val(0);
  gen->add_option("--wmin", gopt.weight_min, "minimum weight")->default_val(0.0);
  gen->add_option("--wmax", gopt.weight_max, "maximum weight")->default_val(1.0);
  gen->add_option("-o,--out", gen_out, "output path")->required();

  // build
  auto* build = app.add_subcommand("build", "Build a spanner for an instance");
  std::string build_inst, build_out;
  int k = 1;
  double eps = 0.5;
  bool refine = false;
  build->add_option("instance", build_inst, "instance file")->required();
  build->add_option("-o,--out", build_out, "output spanner file")->required();
  build->add_option("--k", k, "tolerated vertex failures")->default_val(1);
  build->add_option("--eps", eps, "stretch parameter")->default_val(0.5);
  build->add_flag("--refine", refine, "refined projections (geodesic modes)");

  // verify
  auto* verify = app.add_subcommand("verify", "Check fault-tolerant stretch");
  std::string ver_inst, ver_span;
  double t_bound = 0.0;
  bool exhaustive = false;
  int trials = 2000;
  std::uint64_t seed = 0;
  verify->add_option("instance", ver_inst, "instance file")->required();
  verify->add_option("spanner", ver_span, "spanner file")->required();
  verify->add_option("--t-bound", t_bound, "stretch bound (default per mode)");
  auto* exh = verify->add_flag("--exhaustive", exhaustive, "check every removal set");
  verify->add_option("--trials", trials, "sampled trials")->excludes(exh);
  verify->add_option("--seed", seed, "sampling seed");

  // stats
  auto* stats = app.add_subcommand("stats", "Print spanner size statistics");
  std::string st_span;
  int st_holes = 0;
  stats->add_option("spanner", st_span, "spanner file")->required();
  stats->add_option("--holes", st_holes, "hole count for normalization")->default_val(0);

  // render
  auto* render = app.add_subcommand("render", "Render an instance as SVG");
  std::string r_inst, r_span, r_out;
  std::vector<int> r_removed;
  render->add_option("instance", r_inst, "instance file")->required();
  render->add_option("--spanner", r_span, "spanner file to overlay");
  render->add_option("--removed", r_removed, "vertex ids drawn as removed");
  render->add_option("-o,--out", r_out, "output SVG path")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (gen->parsed()) {
      vfts::InstanceFile inst = vfts::generate_instance(gopt);
      vfts::save_text(gen_out, vfts::serialize_instance(inst));
      std::cout << "wrote " << gen_out << " (" << inst.points.size() << " points)\n";
      return kExitPass;
    }

    if (build->parsed()) {
      vfts::InstanceFile inst = vfts::load_instance(build_inst);
      vfts::SpannerGraph g = build_spanner(inst, k, eps, refine);
      vfts::SpannerFile::Params params;
      params.k = k;
      params.eps = eps;
      params.mode = inst.mode;
      params.refine = refine;
      params.t_base = 2.0 + eps;
      vfts::SpannerFile sp =
          vfts::SpannerFile::from_graph(g, params, vfts::instance_hash(inst));
      vfts::save_text(build_out, vfts::serialize_spanner(sp));
      int holes =
          inst.domain ? static_cast<int>(inst.domain->hole_count()) : 0;
      print_size_report(vfts::size_report(g, k, eps, holes));
      return kExitPass;
    }

    if (verify->parsed()) {
      vfts::InstanceFile inst = vfts::load_instance(ver_inst);
      vfts::SpannerFile sp = vfts::load_spanner(ver_span);
      if (sp.instance_hash != vfts::instance_hash(inst))
        throw vfts::InvalidInput("spanner file does not match this instance (hash)");
      if (sp.n != static_cast<int>(inst.points.size()))
        throw vfts::InvalidInput("spanner/instance size mismatch");
      vfts::SpannerGraph g = sp.to_graph();
      double bound = t_bound > 0.0
                         ? t_bound
                         : default_bound(inst.mode, sp.params.eps, sp.params.refine);
      std::optional<vfts::GeodesicEngine> engine;
      vfts::BaseMetric metric;
      if (inst.mode == "rd") {
        metric = vfts::euclidean_metric();
      } else {
        engine.emplace(inst.require_domain());
        metric = vfts::geodesic_metric(*engine);
      }
      vfts::FaultReport rep = vfts::fault_stretch_check(
          g, inst.points, sp.params.k, bound, metric, exhaustive, trials, seed);
      print_fault_report(rep);
      return rep.pass ? kExitPass : kExitVerifyFail;
    }

    if (stats->parsed()) {
      vfts::SpannerFile sp = vfts::load_spanner(st_span);
      print_size_report(
          vfts::size_report(sp.to_graph(), sp.params.k, sp.params.eps, st_holes));
      return kExitPass;
    }

    if (render->parsed()) {
      vfts::InstanceFile inst = vfts::load_instance(r_inst);
      std::optional<vfts::SpannerGraph> g;
      if (!r_span.empty()) g = vfts::load_spanner(r_span).to_graph();
      std::set<int> removed(r_removed.begin(), r_removed.end());
      vfts::save_text(r_out, vfts::render_svg(inst, g ? &*g : nullptr,
                                              removed.empty() ? nullptr : &removed));
      std::cout << "wrote " << r_out << "\n";
      return kExitPass;
    }
  } catch (const vfts::InvalidInput& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}
