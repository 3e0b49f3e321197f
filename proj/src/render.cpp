#include "ipd/render.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace ipd {

namespace {

std::string node_id(const ValueInterval& v) {
  return "\"i" + std::to_string(v.lo) + "_" + std::to_string(v.hi) + "\"";
}

}  // namespace

std::string poset_to_dot(const IntervalPoset& poset) {
  std::vector<ValueInterval> nodes = poset.intervals();
  std::stable_sort(nodes.begin(), nodes.end(),
                   [](const ValueInterval& a, const ValueInterval& b) { return a.length() > b.length(); });

  std::string out = "digraph interval_poset {\n";
  out += "  graph [ordering=out];\n";
  out += "  node [shape=plaintext];\n";
  for (const auto& v : nodes) out += "  " + node_id(v) + " [label=\"" + to_string(v) + "\"];\n";
  for (const auto& e : hasse_edges(poset)) out += "  " + node_id(e.parent) + " -> " + node_id(e.child) + ";\n";
  out += "}\n";
  return out;
}

namespace {

constexpr double kSize = 320.0;
constexpr double kRadius = 120.0;
constexpr double kLabelRadius = 140.0;

struct Point {
  double x;
  double y;
};

Point on_circle(int vertex, int m, double radius) {
  const double angle = std::numbers::pi / 2 - 2 * std::numbers::pi * (vertex - 1) / m;
  return {kSize / 2 + radius * std::cos(angle), kSize / 2 - radius * std::sin(angle)};
}

std::string fmt(double value) {
  char buf[32];
  // Avoid "-0.00".
  if (std::fabs(value) < 0.005) value = 0.0;
  std::snprintf(buf, sizeof buf, "%.2f", value);
  return buf;
}

}  // namespace

std::string dissection_to_svg(const Dissection& d) {
  const int m = d.vertex_count();
  if (m < 3) throw std::invalid_argument("dissection_to_svg needs m >= 3");

  std::string out = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + fmt(kSize) + "\" height=\"" +
         fmt(kSize) + "\" viewBox=\"0 0 " + fmt(kSize) + " " + fmt(kSize) + "\">\n";

  out += "  <polygon class=\"outline\" fill=\"none\" stroke=\"black\" stroke-width=\"1.5\" points=\"";
  for (int v = 1; v <= m; ++v) {
    const Point p = on_circle(v, m, kRadius);
    if (v > 1) out += ' ';
    out += fmt(p.x) + "," + fmt(p.y);
  }
  out += "\"/>\n";

  for (const auto& c : d.diagonals()) {
    const Point a = on_circle(c.u, m, kRadius);
    const Point b = on_circle(c.v, m, kRadius);
    out += "  <line class=\"diagonal\" x1=\"" + fmt(a.x) + "\" y1=\"" + fmt(a.y) + "\" x2=\"" + fmt(b.x) +
           "\" y2=\"" + fmt(b.y) + "\" stroke=\"black\"/>\n";
  }

  for (int v = 1; v <= m; ++v) {
    const Point p = on_circle(v, m, kRadius);
    const Point l = on_circle(v, m, kLabelRadius);
    out += "  <circle class=\"vertex\" cx=\"" + fmt(p.x) + "\" cy=\"" + fmt(p.y) + "\" r=\"3\"/>\n";
    out += "  <text x=\"" + fmt(l.x) + "\" y=\"" + fmt(l.y) +
           "\" text-anchor=\"middle\" dominant-baseline=\"middle\" font-size=\"12\">" + std::to_string(v) +
           "</text>\n";
  }
  out += "</svg>\n";
  return out;
}

}  // namespace ipd
