#include "vfts/instance_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace vfts {

using json = nlohmann::ordered_json;

namespace {

json ring_to_json(const SimplePolygon& p) {
  json out = json::array();
  for (const auto& v : p.vertices()) out.push_back(json::array({v.x, v.y}));
  return out;
}

SimplePolygon ring_from_json(const json& j) {
  std::vector<Vec2> verts;
  for (const auto& v : j) verts.emplace_back(v.at(0).get<double>(), v.at(1).get<double>());
  return SimplePolygon(std::move(verts));
}

json parse_json(const std::string& text, const char* what) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw InvalidInput(std::string("malformed ") + what + " file");
  return j;
}

}  // namespace

PolygonalDomain InstanceFile::require_domain() const {
  if (!domain) throw InvalidInput("instance has no polygon");
  return *domain;
}

SpannerGraph SpannerFile::to_graph() const {
  SpannerGraph g(n);
  for (const auto& e : edges) g.add_edge(e.u, e.v, e.base_length);
  return g;
}

SpannerFile SpannerFile::from_graph(const SpannerGraph& g, const Params& params,
                                    const std::string& hash) {
  SpannerFile sp;
  sp.params = params;
  sp.n = g.vertex_count();
  sp.edges = g.sorted_edges();
  sp.instance_hash = hash;
  return sp;
}

std::string serialize_instance(const InstanceFile& inst) {
  json j;
  j["version"] = inst.version;
  j["mode"] = inst.mode;
  j["d"] = inst.d;
  json pts = json::array();
  for (const auto& p : inst.points) {
    json row = json::array();
    for (double c : p.coords) row.push_back(c);
    row.push_back(p.weight);
    pts.push_back(std::move(row));
  }
  j["points"] = std::move(pts);
  if (inst.domain) {
    json poly;
    poly["outer"] = ring_to_json(inst.domain->outer());
    json holes = json::array();
    for (const auto& h : inst.domain->holes()) holes.push_back(ring_to_json(h));
    poly["holes"] = std::move(holes);
    j["polygon"] = std::move(poly);
  }
  return j.dump(2) + "\n";
}

InstanceFile parse_instance(const std::string& text) {
  json j = parse_json(text, "instance");
  InstanceFile inst;
  try {
    inst.version = j.at("version").get<int>();
    inst.mode = j.at("mode").get<std::string>();
    inst.d = j.at("d").get<int>();
    if (inst.version != 1) throw InvalidInput("unsupported instance version");
    if (inst.mode != "rd" && inst.mode != "polygon" && inst.mode != "domain")
      throw InvalidInput("unknown instance mode: " + inst.mode);
    if (inst.d < 1) throw InvalidInput("dimension must be positive");
    int id = 0;
    for (const auto& row : j.at("points")) {
      if (static_cast<int>(row.size()) != inst.d + 1)
        throw InvalidInput("point row must hold d coordinates plus a weight");
      std::vector<double> coords;
      for (int c = 0; c < inst.d; ++c) coords.push_back(row.at(c).get<double>());
      inst.points.emplace_back(std::move(coords), row.at(inst.d).get<double>(), id++);
    }
    if (j.contains("polygon")) {
      const auto& poly = j.at("polygon");
      SimplePolygon outer = ring_from_json(poly.at("outer"));
      std::vector<SimplePolygon> holes;
      if (poly.contains("holes"))
        for (const auto& h : poly.at("holes")) holes.push_back(ring_from_json(h));
      inst.domain = PolygonalDomain(std::move(outer), std::move(holes));
    }
    if (inst.mode != "rd" && !inst.domain)
      throw InvalidInput("polygon/domain instance needs a polygon section");
    if (inst.mode == "polygon" && inst.domain->hole_count() != 0)
      throw InvalidInput("polygon instance must not carry holes");
    if (inst.mode != "rd" && inst.d != 2)
      throw InvalidInput("geodesic instances are planar");
  } catch (const json::exception& e) {
    throw InvalidInput(std::string("instance file: ") + e.what());
  }
  return inst;
}

std::string serialize_spanner(const SpannerFile& sp) {
  json j;
  j["version"] = sp.version;
  json params;
  params["k"] = sp.params.k;
  params["eps"] = sp.params.eps;
  params["mode"] = sp.params.mode;
  params["refine"] = sp.params.refine;
  params["t_base"] = sp.params.t_base;
  params["seed"] = sp.params.seed;
  j["params"] = std::move(params);
  j["n"] = sp.n;
  json edges = json::array();
  for (const auto& e : sp.edges) edges.push_back(json::array({e.u, e.v, e.base_length}));
  j["edges"] = std::move(edges);
  j["instance_hash"] = sp.instance_hash;
  return j.dump(2) + "\n";
}

SpannerFile parse_spanner(const std::string& text) {
  json j = parse_json(text, "spanner");
  SpannerFile sp;
  try {
    sp.version = j.at("version").get<int>();
    if (sp.version != 1) throw InvalidInput("unsupported spanner version");
    const auto& params = j.at("params");
    sp.params.k = params.at("k").get<int>();
    sp.params.eps = params.at("eps").get<double>();
    sp.params.mode = params.at("mode").get<std::string>();
    sp.params.refine = params.at("refine").get<bool>();
    sp.params.t_base = params.at("t_base").get<double>();
    sp.params.seed = params.at("seed").get<std::uint64_t>();
    sp.n = j.at("n").get<int>();
    std::pair<int, int> prev{-1, -1};
    for (const auto& row : j.at("edges")) {
      SpannerGraph::Edge e{row.at(0).get<int>(), row.at(1).get<int>(),
                           row.at(2).get<double>()};
      if (e.u >= e.v) throw InvalidInput("edge records need u < v");
      if (e.u < 0 || e.v >= sp.n) throw InvalidInput("edge endpoint out of range");
      if (std::pair<int, int>{e.u, e.v} <= prev)
        throw InvalidInput("edges must be sorted lexicographically");
      prev = {e.u, e.v};
      sp.edges.push_back(e);
    }
    sp.instance_hash = j.at("instance_hash").get<std::string>();
  } catch (const json::exception& e) {
    throw InvalidInput(std::string("spanner file: ") + e.what());
  }
  return sp;
}

std::string instance_hash(const InstanceFile& inst) {
  const std::string text = serialize_instance(inst);
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ull;
  }
  std::ostringstream os;
  os << std::hex << h;
  return os.str();
}

InstanceFile load_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_instance(buf.str());
}

SpannerFile load_spanner(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_spanner(buf.str());
}

void save_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InvalidInput("cannot write " + path);
  out << text;
}

}  // namespace vfts
