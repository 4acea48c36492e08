#pragma once

// SVG view of one-dimensional cycles in R^2. Coordinates are converted to
// doubles here and nowhere else.

#include "tropint/cycles.hpp"

#include <cstdio>

namespace tropint::svg {

struct BoundingBox {
  Rational x0 = -5, y0 = -5, x1 = 5, y1 = 5;
};

struct Segment {
  RatVector a, b;
  Integer weight;
};

/// Each cell clipped to the box; cells missing the box are skipped.
inline std::vector<Segment> clip(const WeightedComplex& c, const BoundingBox& box) {
  if (c.ambient_dim() != 2 || c.dim() != 1) throw Error("render: only 1-dimensional cycles in R^2 are supported");
  if (!(box.x0 < box.x1 && box.y0 < box.y1)) throw Error("render: empty bounding box");
  const std::vector<AffineForm> bounds{
      {{1, 0}, -box.x0}, {{-1, 0}, box.x1}, {{0, 1}, -box.y0}, {{0, -1}, box.y1}};
  std::vector<Segment> out;
  for (std::size_t i = 0; i < c.size(); ++i) {
    auto piece = intersect_with(c.cell(i), bounds);
    if (!piece || piece->dim() != 1) continue;
    auto ends = faces_of_codim_one(*piece);
    if (ends.size() != 2) continue;
    out.push_back({ends[0].interior_point(), ends[1].interior_point(), c.weight(i)});
  }
  return out;
}

inline std::string render(const WeightedComplex& c, const BoundingBox& box = {}) {
  const double size = 500;
  const double bx0 = box.x0.get_d(), by0 = box.y0.get_d(), bx1 = box.x1.get_d(), by1 = box.y1.get_d();
  const double scale = size / std::max(bx1 - bx0, by1 - by0);
  auto sx = [&](const Rational& x) { return (x.get_d() - bx0) * scale; };
  auto sy = [&](const Rational& y) { return (by1 - y.get_d()) * scale; };
  char buf[256];
  std::string out;
  std::snprintf(buf, sizeof buf,
                "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"%.0f\" height=\"%.0f\" viewBox=\"0 0 %.0f %.0f\">\n",
                (bx1 - bx0) * scale, (by1 - by0) * scale, (bx1 - bx0) * scale, (by1 - by0) * scale);
  out += buf;
  out += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  for (const auto& s : clip(c, box)) {
    std::snprintf(buf, sizeof buf,
                  "<line x1=\"%.3f\" y1=\"%.3f\" x2=\"%.3f\" y2=\"%.3f\" stroke=\"black\" stroke-width=\"2\"/>\n",
                  sx(s.a[0]), sy(s.a[1]), sx(s.b[0]), sy(s.b[1]));
    out += buf;
    Rational mx = (s.a[0] + s.b[0]) / 2, my = (s.a[1] + s.b[1]) / 2;
    std::snprintf(buf, sizeof buf, "<text x=\"%.3f\" y=\"%.3f\" font-size=\"14\" fill=\"firebrick\">%s</text>\n",
                  sx(mx) + 4, sy(my) - 4, to_string(s.weight).c_str());
    out += buf;
  }
  out += "</svg>\n";
  return out;
}

}  // namespace tropint::svg
