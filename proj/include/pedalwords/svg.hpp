#pragma once

#include <array>
#include <string>
#include <vector>

#include "pedalwords/pedal.hpp"

namespace pedalwords::svg {

struct Point {
  double x;
  double y;
};

using TrianglePoints = std::array<Point, 3>;

inline constexpr int kMaxIterations = 16;

// Drawing request: iterated pedal triangles of one similarity class. All
// drawing decisions (degeneracy, labels) come from exact arithmetic; floating
// point is confined to coordinate emission.
struct RenderSpec {
  pedal::SortedTriple triple;
  int iterations = 0;  // 0..kMaxIterations
  double canvas_width = 840.0;
  double canvas_height = 640.0;
  std::string stroke = "#333333";
  std::vector<std::string> fills = {"#ffffff", "#d9d9d9"};
};

// Canonical embedding of a similarity class: the side opposite the largest
// angle lies on the x-axis with unit length, angle b*pi at (0,0) and c*pi at
// (1,0); the apex (angle a*pi) lies above.
TrianglePoints embed_triangle(const pedal::SortedTriple& p);

// Feet of the three altitudes: vertex i projects onto the (possibly extended)
// opposite side. Joining them gives the pedal triangle of t.
TrianglePoints altitude_feet(const TrianglePoints& t);

// Standalone SVG 1.1 document, byte-deterministic for fixed inputs.
// DegenerateError names the failing iterate when the exact orbit hits a right
// triangle before all requested iterations are constructed.
std::string render_svg(const RenderSpec& spec);

}  // namespace pedalwords::svg
