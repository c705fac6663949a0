#include "vfts/generate.hpp"

#include <cmath>
#include <numbers>
#include <random>

namespace vfts {

namespace {

constexpr int kMaxDraws = 1000000;

int parse_count(const std::string& name, const std::string& prefix, int lo) {
  int n = 0;
  try {
    n = std::stoi(name.substr(prefix.size()));
  } catch (...) {
    throw InvalidInput("bad shape name: " + name);
  }
  if (n < lo) throw InvalidInput(prefix + "N needs N >= " + std::to_string(lo));
  return n;
}

SimplePolygon regular_ngon(int n, Vec2 center, double radius) {
  std::vector<Vec2> verts;
  for (int i = 0; i < n; ++i) {
    double a = 2.0 * std::numbers::pi * i / n;
    verts.emplace_back(center.x + radius * std::cos(a), center.y + radius * std::sin(a));
  }
  return SimplePolygon(std::move(verts));
}

SimplePolygon comb_polygon(int teeth) {
  // teeth on top of a horizontal bar, all inside the unit box
  std::vector<Vec2> verts;
  verts.emplace_back(0.0, 0.0);
  verts.emplace_back(1.0, 0.0);
  const double pitch = 1.0 / (2 * teeth);
  for (int i = teeth - 1; i >= 0; --i) {
    double x1 = (2 * i + 2) * pitch, x0 = (2 * i + 1) * pitch;
    verts.emplace_back(x1, 1.0);
    verts.emplace_back(x0, 1.0);
    verts.emplace_back(x0, 0.4);
    verts.emplace_back(x0 - pitch, 0.4);
  }
  return SimplePolygon(std::move(verts));
}

SimplePolygon star_polygon(int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> radius(0.15, 0.48);
  std::vector<Vec2> verts;
  for (int i = 0; i < n; ++i) {
    double a = 2.0 * std::numbers::pi * i / n;
    double r = radius(rng);
    verts.emplace_back(0.5 + r * std::cos(a), 0.5 + r * std::sin(a));
  }
  return SimplePolygon(std::move(verts));
}

}  // namespace

SimplePolygon shape_polygon(const std::string& name, std::uint64_t seed) {
  if (name.rfind("convex-", 0) == 0)
    return regular_ngon(parse_count(name, "convex-", 3), {0.5, 0.5}, 0.48);
  if (name == "lshape")
    return SimplePolygon({{0, 0}, {1, 0}, {1, 0.5}, {0.5, 0.5}, {0.5, 1}, {0, 1}});
  if (name == "ushape")
    return SimplePolygon({{0, 0},
                          {1, 0},
                          {1, 1},
                          {0.7, 1},
                          {0.7, 0.3},
                          {0.3, 0.3},
                          {0.3, 1},
                          {0, 1}});
  if (name.rfind("comb-", 0) == 0) return comb_polygon(parse_count(name, "comb-", 2));
  if (name.rfind("random-", 0) == 0)
    return star_polygon(parse_count(name, "random-", 5), seed);
  throw InvalidInput("unknown polygon shape: " + name);
}

PolygonalDomain shape_domain(const std::string& name, std::uint64_t seed) {
  SimplePolygon square({{0, 0}, {1, 0}, {1, 1}, {0, 1}});
  if (name == "square-hole") {
    SimplePolygon hole({{0.25, 0.25}, {0.75, 0.25}, {0.75, 0.75}, {0.25, 0.75}});
    return PolygonalDomain(square, {hole});
  }
  if (name == "square-2holes") {
    SimplePolygon h1({{0.1, 0.3}, {0.35, 0.3}, {0.35, 0.7}, {0.1, 0.7}});
    SimplePolygon h2({{0.6, 0.2}, {0.9, 0.2}, {0.9, 0.6}, {0.6, 0.6}});
    return PolygonalDomain(square, {h1, h2});
  }
  return PolygonalDomain(shape_polygon(name, seed));
}

InstanceFile generate_instance(const GenerateOptions& opts) {
  if (opts.n < 0) throw InvalidInput("n must be non-negative");
  if (opts.weight_min < 0.0 || opts.weight_max < opts.weight_min)
    throw InvalidInput("weight range must satisfy 0 <= min <= max");

  InstanceFile inst;
  inst.mode = opts.mode;
  std::mt19937_64 rng(opts.seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_real_distribution<double> weight(opts.weight_min, opts.weight_max);

  if (opts.mode == "rd") {
    if (opts.d < 1) throw InvalidInput("dimension must be positive");
    inst.d = opts.d;
    for (int i = 0; i < opts.n; ++i) {
      std::vector<double> coords;
      for (int c = 0; c < opts.d; ++c) coords.push_back(unit(rng));
      inst.points.emplace_back(std::move(coords), weight(rng), i);
    }
    return inst;
  }

  if (opts.mode != "polygon" && opts.mode != "domain")
    throw InvalidInput("unknown mode: " + opts.mode);
  inst.d = 2;
  PolygonalDomain dom = opts.mode == "polygon"
                            ? PolygonalDomain(shape_polygon(opts.shape, opts.seed))
                            : shape_domain(opts.shape, opts.seed);
  if (opts.mode == "polygon" && dom.hole_count() != 0)
    throw InvalidInput("polygon mode cannot use a shape with holes");

  int draws = 0;
  for (int i = 0; i < opts.n; ++i) {
    Vec2 p;
    do {
      if (++draws > kMaxDraws)
        throw InvalidInput("rejection sampling failed after 10^6 draws");
      p = {unit(rng), unit(rng)};
    } while (!dom.in_free_space(p) || dom.on_boundary(p, 1e-6));
    inst.points.emplace_back(p, weight(rng), i);
  }
  inst.domain = std::move(dom);
  return inst;
}

}  // namespace vfts
