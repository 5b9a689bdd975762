#include "sqz/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace sqz {

namespace {

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.4f", v + 0.0);  // normalize -0
  return buf;
}

}  // namespace

std::string svg_regions(const std::vector<RegionLayer>& layers) {
  double x0 = -1, x1 = 1, y0 = -1, y1 = 1;
  bool first = true;
  for (const RegionLayer& layer : layers) {
    for (const auto& poly : layer.region.polygons()) {
      for (const Point2& v : poly.vertices()) {
        double x = v.x.to_double(), y = v.y.to_double();
        if (first || x < x0) x0 = x;
        if (first || x > x1) x1 = x;
        if (first || y < y0) y0 = y;
        if (first || y > y1) y1 = y;
        first = false;
      }
    }
  }
  double pad = 0.05 * std::max(x1 - x0, y1 - y0) + 0.1;
  x0 -= pad; x1 += pad; y0 -= pad; y1 += pad;
  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << fmt(x0) << " "
      << fmt(-y1) << " " << fmt(x1 - x0) << " " << fmt(y1 - y0) << "\">\n";
  // y flips so that the mathematical orientation points up.
  for (const RegionLayer& layer : layers) {
    out << "  <g fill=\"" << layer.color << "\" fill-opacity=\"0.45\" stroke=\""
        << layer.color << "\" stroke-width=\"" << fmt(0.01 * (x1 - x0))
        << "\" data-label=\"" << layer.label << "\">\n";
    for (const auto& poly : layer.region.polygons()) {
      out << "    <polygon points=\"";
      bool sep = false;
      for (const Point2& v : poly.vertices()) {
        if (sep) out << " ";
        out << fmt(v.x.to_double()) << "," << fmt(-v.y.to_double());
        sep = true;
      }
      out << "\"/>\n";
    }
    out << "  </g>\n";
  }
  out << "</svg>\n";
  return out.str();
}

namespace {

// RP^1 drawn as a circle: direction angle in [0, pi) doubled to [0, 2pi).
double circle_angle(const ProjPoint& p) {
  if (p.is_infinity()) return M_PI;  // slope infinity: direction angle pi/2
  double a = std::atan2(p.y().to_double(), p.x().to_double());
  if (a < 0) a += M_PI;
  return 2.0 * a;
}

}  // namespace

std::string svg_arcs(const std::vector<ArcLayer>& layers) {
  const double R = 100.0;
  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"-130 -130 260 260\">\n";
  out << "  <circle cx=\"0\" cy=\"0\" r=\"" << fmt(R)
      << "\" fill=\"none\" stroke=\"#cccccc\" stroke-width=\"1\"/>\n";
  int ring = 0;
  for (const ArcLayer& layer : layers) {
    double r = R - 6.0 * ring;
    ring = (ring + 1) % 4;
    double a0 = circle_angle(layer.arc.p());
    double a1 = circle_angle(layer.arc.q());
    double span = a1 - a0;
    if (span <= 0) span += 2.0 * M_PI;
    double sx = r * std::cos(a0), sy = -r * std::sin(a0);
    double ex = r * std::cos(a1), ey = -r * std::sin(a1);
    int large = span > M_PI ? 1 : 0;
    // Counterclockwise in math coordinates = sweep 0 with flipped y.
    out << "  <path d=\"M " << fmt(sx) << " " << fmt(sy) << " A " << fmt(r) << " "
        << fmt(r) << " 0 " << large << " 0 " << fmt(ex) << " " << fmt(ey)
        << "\" fill=\"none\" stroke=\"" << layer.color
        << "\" stroke-width=\"4\" data-label=\"" << layer.label << "\"/>\n";
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace sqz
