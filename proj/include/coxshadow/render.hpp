#pragma once

// SVG pictures of regular and full shadows in rank-2 affine types.
//
// Polygons are built from the exact vertices x . v_j of each alcove. Floating
// point enters only when exact coordinates are mapped to the drawing plane.

#include <cmath>
#include <cstdio>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "coxshadow/coxeter.hpp"
#include "coxshadow/oracles.hpp"
#include "coxshadow/orientation.hpp"
#include "coxshadow/shadow.hpp"

namespace coxshadow {

struct Point2 {
  double x = 0.0;
  double y = 0.0;
};

enum class Layer { Base, Full, Regular };

inline const char* layer_class(Layer l) {
  switch (l) {
    case Layer::Base: return "alcove";
    case Layer::Full: return "shadow-full";
    case Layer::Regular: return "shadow-regular";
  }
  return "";
}

struct AlcovePolygon {
  GroupElement element;
  Layer layer = Layer::Base;
  /// Scaled exact vertices, one per generator.
  std::vector<std::vector<Int>> vertices;
};

struct RenderScene {
  std::string type;
  GroupElement marked;
  Direction direction;
  int radius = 0;
  std::vector<AlcovePolygon> polygons;
  std::vector<Direction> legend;
  ShadowSet regular;
  ShadowSet full;
};

namespace detail {

inline void require_planar(const CoxeterDatum& datum) {
  if (datum.rank() != 2 || !datum.affine())
    throw Error(Errc::RenderUnsupported, "only rank-2 affine types can be rendered, not " + datum.tag());
}

inline std::vector<std::vector<Int>> alcove_vertices(const CoxeterDatum& datum, const GroupElement& x) {
  const std::uint32_t all = (1u << (datum.rank() + 1)) - 1;
  std::vector<std::vector<Int>> out;
  for (Generator j : datum.generators()) out.push_back(x.apply(datum.face_point(all & ~(1u << j))));
  return out;
}

/// Plane coordinates of scaled coweight coordinates.
class PlaneMap {
 public:
  explicit PlaneMap(const CoxeterDatum& datum) : scale_(static_cast<double>(datum.scale())) {
    auto g = datum.coweight_gram();
    const double a = std::sqrt(g[0]);
    e1_ = {a, 0.0};
    e2_ = {g[1] / a, std::sqrt(g[3] - g[1] * g[1] / g[0])};
  }

  Point2 operator()(std::span<const Int> q) const {
    const double q1 = static_cast<double>(q[0]) / scale_, q2 = static_cast<double>(q[1]) / scale_;
    return {q1 * e1_.x + q2 * e2_.x, -(q1 * e1_.y + q2 * e2_.y)};
  }

 private:
  double scale_;
  Point2 e1_, e2_;
};

inline std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4f", std::abs(v) < 5e-5 ? 0.0 : v);
  return buf;
}

}  // namespace detail

/// The scene for x with the regular shadow towards dir. Alcoves up to
/// length max(radius, l(x) + 1) form the background grid.
inline RenderScene build_scene(const CoxeterDatum& datum, const GroupElement& x, const Direction& dir, int radius) {
  detail::require_planar(datum);
  RenderScene scene;
  scene.type = datum.tag();
  scene.marked = x;
  scene.direction = dir;
  scene.radius = std::max(radius, datum.length(x) + 1);
  scene.legend = all_directions(datum);
  scene.regular = shadow_L(datum, x, dir);
  scene.full = full_shadow(datum, x);
  for (const auto& y : elements_up_to(datum, scene.radius))
    scene.polygons.push_back({y, Layer::Base, detail::alcove_vertices(datum, y)});
  for (const auto& y : scene.full.elements)
    scene.polygons.push_back({y, Layer::Full, detail::alcove_vertices(datum, y)});
  for (const auto& y : scene.regular.elements)
    scene.polygons.push_back({y, Layer::Regular, detail::alcove_vertices(datum, y)});
  return scene;
}

/// Checks that each shadow layer holds exactly one polygon per shadow
/// element, and that every polygon's vertices are those of its alcove.
/// Returns an empty string on success, otherwise a description.
inline std::string check_scene(const CoxeterDatum& datum, const RenderScene& scene) {
  auto layer_matches = [&](Layer l, const ShadowSet& s) -> std::string {
    ElementSet seen;
    std::size_t count = 0;
    for (const auto& p : scene.polygons) {
      if (p.layer != l) continue;
      ++count;
      if (!seen.insert(p.element).second) return std::string(layer_class(l)) + ": duplicate polygon";
    }
    if (count != s.size() || seen != s.as_set()) return std::string(layer_class(l)) + ": polygon set differs";
    return {};
  };
  if (auto e = layer_matches(Layer::Regular, scene.regular); !e.empty()) return e;
  if (auto e = layer_matches(Layer::Full, scene.full); !e.empty()) return e;
  for (const auto& p : scene.polygons) {
    if (p.vertices != detail::alcove_vertices(datum, p.element)) return "vertex mismatch";
  }
  return {};
}

/// SVG text. Each polygon carries data-element with its reduced word.
inline std::string render_svg(const CoxeterDatum& datum, const RenderScene& scene) {
  detail::require_planar(datum);
  if (auto e = check_scene(datum, scene); !e.empty()) throw Error(Errc::RenderUnsupported, "scene check failed: " + e);
  const detail::PlaneMap plane(datum);
  const double unit = 60.0;

  double minx = 0, maxx = 0, miny = 0, maxy = 0;
  for (const auto& p : scene.polygons) {
    for (const auto& v : p.vertices) {
      Point2 q = plane(v);
      minx = std::min(minx, q.x * unit);
      maxx = std::max(maxx, q.x * unit);
      miny = std::min(miny, q.y * unit);
      maxy = std::max(maxy, q.y * unit);
    }
  }
  const double pad = 20.0, legend_w = 180.0;
  const double width = maxx - minx + 2 * pad + legend_w, height = std::max(maxy - miny + 2 * pad, 40.0 + 22.0 * scene.legend.size());

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << detail::num(minx - pad) << ' ' << detail::num(miny - pad)
      << ' ' << detail::num(width) << ' ' << detail::num(height) << "\" data-type=\"" << scene.type << "\">\n";
  out << "<style>.alcove{fill:none;stroke:#999;stroke-width:0.6}.shadow-full{fill:#c6dbef;stroke:#999;stroke-width:0.6}"
         ".shadow-regular{fill:#2171b5;stroke:#08306b;stroke-width:0.6}.marked{fill:none;stroke:#d62728;stroke-width:2.5}"
         ".direction{stroke:#d62728;stroke-width:2;fill:none}.legend text{font:12px sans-serif}</style>\n";
  out << "<defs><marker id=\"head\" viewBox=\"0 0 10 10\" refX=\"9\" refY=\"5\" markerWidth=\"6\" markerHeight=\"6\" "
         "orient=\"auto\"><path d=\"M0,0 L10,5 L0,10 z\" fill=\"#d62728\"/></marker></defs>\n";

  auto polygon = [&](const AlcovePolygon& p, const char* cls) {
    out << "<polygon class=\"" << cls << "\" data-element=\"" << word_string(datum.reduced_word(p.element))
        << "\" points=\"";
    for (std::size_t i = 0; i < p.vertices.size(); ++i) {
      Point2 q = plane(p.vertices[i]);
      out << (i ? " " : "") << detail::num(q.x * unit) << ',' << detail::num(q.y * unit);
    }
    out << "\"/>\n";
  };
  for (Layer l : {Layer::Base, Layer::Full, Layer::Regular}) {
    out << "<g id=\"" << layer_class(l) << "\">\n";
    for (const auto& p : scene.polygons) {
      if (p.layer == l) polygon(p, layer_class(l));
    }
    out << "</g>\n";
  }
  out << "<g id=\"marked\">\n";
  polygon({scene.marked, Layer::Base, detail::alcove_vertices(datum, scene.marked)}, "marked");
  out << "</g>\n";

  auto arrow = [&](const Direction& d, double ox, double oy, double len, const char* cls) {
    Point2 q = plane(d.vector);
    const double norm = std::hypot(q.x, q.y);
    const double dx = q.x / norm * len, dy = q.y / norm * len;
    out << "<line class=\"" << cls << "\" x1=\"" << detail::num(ox) << "\" y1=\"" << detail::num(oy) << "\" x2=\""
        << detail::num(ox + dx) << "\" y2=\"" << detail::num(oy + dy) << "\" marker-end=\"url(#head)\"/>\n";
  };
  out << "<g id=\"direction\" data-direction=\"" << word_string(datum.reduced_word(scene.direction.label)) << "\">\n";
  arrow(scene.direction, 0.0, 0.0, 2.5 * unit, "direction");
  out << "</g>\n";

  const double lx = maxx + pad + 20.0;
  out << "<g class=\"legend\" id=\"legend\" data-directions=\"" << scene.legend.size() << "\">\n";
  for (std::size_t i = 0; i < scene.legend.size(); ++i) {
    const auto& d = scene.legend[i];
    const double y = miny - pad + 20.0 + 22.0 * static_cast<double>(i);
    const bool chosen = d == scene.direction;
    const std::string word = word_string(datum.reduced_word(d.label));
    out << "<g class=\"legend-entry\" data-direction=\"" << word << "\">";
    arrow(d, lx, y, 14.0, chosen ? "direction" : "alcove");
    out << "<text x=\"" << detail::num(lx + 24.0) << "\" y=\"" << detail::num(y + 4.0) << "\">"
        << (word.empty() ? "id" : word) << (chosen ? " *" : "") << "</text></g>\n";
  }
  out << "</g>\n</svg>\n";
  return out.str();
}

}  // namespace coxshadow
