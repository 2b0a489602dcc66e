#include "pedalwords/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <vector>

namespace pedalwords::svg {

namespace {

double to_double(const Rational& r) { return r.convert_to<double>(); }

Point project_onto_line(const Point& p, const Point& a, const Point& b) {
  const double dx = b.x - a.x;
  const double dy = b.y - a.y;
  const double u = ((p.x - a.x) * dx + (p.y - a.y) * dy) / (dx * dx + dy * dy);
  return {a.x + u * dx, a.y + u * dy};
}

std::string fmt(double value) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6f", value);
  return buf;
}

}  // namespace

TrianglePoints embed_triangle(const pedal::SortedTriple& p) {
  const double angle_b = std::numbers::pi * to_double(p.b());
  const double angle_c = std::numbers::pi * to_double(p.c());
  const double tan_b = std::tan(angle_b);
  const double tan_c = std::tan(angle_c);
  const double apex_x = tan_c / (tan_b + tan_c);
  return {Point{0.0, 0.0}, Point{1.0, 0.0}, Point{apex_x, apex_x * tan_b}};
}

TrianglePoints altitude_feet(const TrianglePoints& t) {
  return {project_onto_line(t[0], t[1], t[2]), project_onto_line(t[1], t[2], t[0]),
          project_onto_line(t[2], t[0], t[1])};
}

std::string render_svg(const RenderSpec& spec) {
  if (spec.iterations < 0 || spec.iterations > kMaxIterations) {
    throw DomainError("iterations must be in 0.." + std::to_string(kMaxIterations));
  }

  // Exact orbit first; it alone decides degeneracy and supplies the labels.
  std::vector<pedal::SortedTriple> orbit = {spec.triple};
  for (int k = 0; k < spec.iterations; ++k) {
    if (orbit.back().a() == Rational(1, 2)) {
      throw DegenerateError("pedal iterate " + std::to_string(k) +
                            " is right-angled; iterate " + std::to_string(k + 1) +
                            " is degenerate");
    }
    orbit.push_back(pedal::pedal_step(orbit.back()));
  }

  std::vector<TrianglePoints> triangles = {embed_triangle(spec.triple)};
  for (int k = 0; k < spec.iterations; ++k) {
    triangles.push_back(altitude_feet(triangles.back()));
  }

  double min_x = 0.0, max_x = 1.0, min_y = 0.0, max_y = 0.0;
  for (const TrianglePoints& t : triangles) {
    for (const Point& v : t) {
      min_x = std::min(min_x, v.x);
      max_x = std::max(max_x, v.x);
      min_y = std::min(min_y, v.y);
      max_y = std::max(max_y, v.y);
    }
  }

  const double margin = 20.0;
  const double label_height = 18.0;
  const double label_block = label_height * static_cast<double>(orbit.size()) + margin;
  const double draw_width = spec.canvas_width - 2.0 * margin;
  const double draw_height = spec.canvas_height - 2.0 * margin - label_block;
  const double scale =
      std::min(draw_width / (max_x - min_x), draw_height / (max_y - min_y));
  const auto px = [&](const Point& v) -> Point {
    return {margin + (v.x - min_x) * scale, margin + (max_y - v.y) * scale};
  };

  std::string out;
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" +
         fmt(spec.canvas_width) + "\" height=\"" + fmt(spec.canvas_height) + "\" viewBox=\"0 0 " +
         fmt(spec.canvas_width) + " " + fmt(spec.canvas_height) + "\">\n";
  for (std::size_t k = 0; k < triangles.size(); ++k) {
    const std::string& fill =
        spec.fills.empty() ? std::string("none") : spec.fills[k % spec.fills.size()];
    out += "  <polygon points=\"";
    for (std::size_t i = 0; i < 3; ++i) {
      const Point v = px(triangles[k][i]);
      if (i > 0) out += ' ';
      out += fmt(v.x) + "," + fmt(v.y);
    }
    out += "\" fill=\"" + fill + "\" stroke=\"" + spec.stroke + "\" stroke-width=\"1\"/>\n";
  }
  const double label_x = margin;
  double label_y = margin + (max_y - min_y) * scale + margin + label_height;
  for (std::size_t k = 0; k < orbit.size(); ++k) {
    out += "  <text x=\"" + fmt(label_x) + "\" y=\"" + fmt(label_y) +
           "\" font-family=\"monospace\" font-size=\"14\">P^" + std::to_string(k) + " = " +
           pedal::format_triple(orbit[k]) + "</text>\n";
    label_y += label_height;
  }
  out += "</svg>\n";
  return out;
}

}  // namespace pedalwords::svg
