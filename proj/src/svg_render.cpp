#include "mpoly/svg_render.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>
#include <vector>

namespace mpoly {

namespace {

struct Point {
  double x = 0.0;
  double y = 0.0;
};

std::string fmt(double value) {
  char buffer[32];
  std::snprintf(buffer, sizeof buffer, "%.2f", value);
  return buffer;
}

}  // namespace

std::string render_svg(const Labeling& labeling, const RenderStyle& style) {
  if (!labeling.is_complete()) {
    throw std::invalid_argument("cannot render an incomplete labeling");
  }
  const int n = labeling.n();
  const double cx = style.canvas / 2.0, cy = style.canvas / 2.0;

  // Vertex 1 on top, clockwise; SVG's y axis points down.
  std::vector<Point> position(static_cast<std::size_t>(2 * n + 1));
  position[0] = {cx, cy};
  for (int i = 1; i <= n; ++i) {
    const double angle = 2.0 * std::numbers::pi * (i - 1) / n;
    position[static_cast<std::size_t>(NodeId::vertex(i).slot(n))] = {
        cx + style.ring_radius * std::sin(angle),
        cy - style.ring_radius * std::cos(angle)};
  }
  for (int i = 1; i <= n; ++i) {
    const Point a =
        position[static_cast<std::size_t>(NodeId::vertex(i).slot(n))];
    const Point b = position[static_cast<std::size_t>(
        NodeId::vertex(wrap_index(i + 1, n)).slot(n))];
    position[static_cast<std::size_t>(NodeId::midpoint(i).slot(n))] = {
        (a.x + b.x) / 2.0, (a.y + b.y) / 2.0};
  }

  std::ostringstream svg;
  svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\""
      << fmt(style.canvas) << "\" height=\"" << fmt(style.canvas)
      << "\" viewBox=\"0 0 " << fmt(style.canvas) << ' ' << fmt(style.canvas)
      << "\">\n";
  svg << "<rect width=\"" << fmt(style.canvas) << "\" height=\""
      << fmt(style.canvas) << "\" fill=\"white\"/>\n";

  for (const Line& line : lines(n)) {
    const Point from =
        position[static_cast<std::size_t>(line.nodes[0].slot(n))];
    const Point to =
        position[static_cast<std::size_t>(line.nodes[2].slot(n))];
    svg << "<line x1=\"" << fmt(from.x) << "\" y1=\"" << fmt(from.y)
        << "\" x2=\"" << fmt(to.x) << "\" y2=\"" << fmt(to.y)
        << "\" stroke=\"black\" stroke-width=\"" << fmt(style.stroke_width)
        << "\"/>\n";
  }

  auto draw_node = [&](NodeId node) {
    const Point at = position[static_cast<std::size_t>(node.slot(n))];
    svg << "<circle cx=\"" << fmt(at.x) << "\" cy=\"" << fmt(at.y)
        << "\" r=\"" << fmt(style.node_radius)
        << "\" fill=\"white\" stroke=\"black\" stroke-width=\""
        << fmt(style.stroke_width) << "\"/>\n";
    svg << "<text x=\"" << fmt(at.x) << "\" y=\"" << fmt(at.y)
        << "\" font-family=\"sans-serif\" font-size=\"" << fmt(style.font_size)
        << "\" text-anchor=\"middle\" dominant-baseline=\"central\">"
        << labeling.at(node) << "</text>\n";
  };
  draw_node(NodeId::center());
  for (int i = 1; i <= n; ++i) draw_node(NodeId::vertex(i));
  for (int i = 1; i <= n; ++i) draw_node(NodeId::midpoint(i));

  svg << "</svg>\n";
  return svg.str();
}

}  // namespace mpoly
