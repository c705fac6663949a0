#include "vfts/svg.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

namespace vfts {

namespace {

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

void ring_path(std::ostringstream& os, const SimplePolygon& p, double ymax) {
  const auto& v = p.vertices();
  for (std::size_t i = 0; i < v.size(); ++i)
    os << (i == 0 ? "M " : "L ") << num(v[i].x) << ' ' << num(ymax - v[i].y) << ' ';
  os << "Z ";
}

}  // namespace

std::string render_svg(const InstanceFile& inst, const SpannerGraph* spanner,
                       const std::set<int>* removed) {
  if (inst.mode != "rd" && !inst.domain) throw InvalidInput("instance has no polygon");
  if (inst.mode == "rd" && inst.d != 2)
    throw InvalidInput("only planar instances can be rendered");

  double xmin = 0.0, xmax = 1.0, ymin = 0.0, ymax = 1.0;
  auto grow = [&](const Vec2& p) {
    xmin = std::min(xmin, p.x);
    xmax = std::max(xmax, p.x);
    ymin = std::min(ymin, p.y);
    ymax = std::max(ymax, p.y);
  };
  for (const auto& p : inst.points) grow(p.xy());
  if (inst.domain)
    for (const auto& v : inst.domain->outer().vertices()) grow(v);

  const double pad = 0.05 * std::max(xmax - xmin, ymax - ymin) + 0.01;
  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\""
     << num(xmin - pad) << ' ' << num(-pad) << ' ' << num(xmax - xmin + 2 * pad) << ' '
     << num(ymax - ymin + 2 * pad) << "\" width=\"640\" height=\"640\">\n";

  if (inst.domain) {
    os << "<path fill=\"#f3f3f3\" stroke=\"#222222\" stroke-width=\"0.004\" "
          "fill-rule=\"evenodd\" d=\"";
    std::ostringstream d;
    ring_path(d, inst.domain->outer(), ymax);
    os << d.str() << "\"/>\n";
    for (const auto& h : inst.domain->holes()) {
      std::ostringstream hd;
      ring_path(hd, h, ymax);
      os << "<path fill=\"#c9c9c9\" stroke=\"#222222\" stroke-width=\"0.004\" d=\""
         << hd.str() << "\"/>\n";
    }
  }

  if (spanner) {
    os << "<g stroke=\"#1f6fb2\" stroke-width=\"0.004\">\n";
    for (const auto& e : spanner->sorted_edges()) {
      Vec2 a = inst.points[e.u].xy(), b = inst.points[e.v].xy();
      os << "<line x1=\"" << num(a.x) << "\" y1=\"" << num(ymax - a.y) << "\" x2=\""
         << num(b.x) << "\" y2=\"" << num(ymax - b.y) << "\"/>\n";
    }
    os << "</g>\n";
  }

  for (const auto& p : inst.points) {
    Vec2 v = p.xy();
    double r = 0.008 + 0.015 * p.weight;
    bool out = removed && removed->count(p.id);
    os << "<circle cx=\"" << num(v.x) << "\" cy=\"" << num(ymax - v.y) << "\" r=\""
       << num(r) << "\" fill=\"" << (out ? "#bbbbbb" : "#d1495b") << "\"/>\n";
    if (out) {
      double s = r * 1.4;
      os << "<g stroke=\"#333333\" stroke-width=\"0.005\">"
         << "<line x1=\"" << num(v.x - s) << "\" y1=\"" << num(ymax - v.y - s) << "\" x2=\""
         << num(v.x + s) << "\" y2=\"" << num(ymax - v.y + s) << "\"/>"
         << "<line x1=\"" << num(v.x - s) << "\" y1=\"" << num(ymax - v.y + s) << "\" x2=\""
         << num(v.x + s) << "\" y2=\"" << num(ymax - v.y - s) << "\"/></g>\n";
    }
  }

  os << "</svg>\n";
  return os.str();
}

}  // namespace vfts
