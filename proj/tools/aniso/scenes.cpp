#include "scenes.hpp"

#include <cmath>
#include <numbers>

namespace scenes {

using aniso::ConvexBody;
using aniso::SvgCanvas;
using aniso::Vec2;

void draw_body(SvgCanvas& c, const ConvexBody& K, const std::string& stroke) {
  if (K.dim() != 2)
    throw aniso::Error("svg rendering supports planar bodies only");
  if (K.kind() == aniso::BodyKind::Ellipse)
    c.ellipse_shape({0.0, 0.0}, K.semi_axis_a(), K.semi_axis_b(), stroke);
  else
    c.polygon(K.vertices(), stroke);
}

void draw_normal_fan(SvgCanvas& c, const ConvexBody& K, double scale,
                     const std::string& color) {
  if (K.kind() == aniso::BodyKind::Ellipse) {
    const double a = K.semi_axis_a(), b = K.semi_axis_b();
    for (int k = 0; k < 12; ++k) {
      const double th = 2.0 * std::numbers::pi * k / 12.0;
      const Vec2 p{a * std::cos(th), b * std::sin(th)};
      const Vec2 n = aniso::normalized(Vec2{p.x / (a * a), p.y / (b * b)});
      c.arrow(p, {p.x + scale * n.x, p.y + scale * n.y}, color);
    }
    return;
  }
  const auto& vs = K.vertices();
  for (size_t i = 0; i < vs.size(); ++i) {
    const Vec2 a = vs[i], b = vs[(i + 1) % vs.size()];
    const Vec2 d{b.x - a.x, b.y - a.y};
    const Vec2 n = aniso::normalized(Vec2{d.y, -d.x});
    const Vec2 m{0.5 * (a.x + b.x), 0.5 * (a.y + b.y)};
    c.arrow(m, {m.x + scale * n.x, m.y + scale * n.y}, color);
  }
}

void draw_polygon_set(SvgCanvas& c, const aniso::PolygonSet& E,
                      const std::string& stroke) {
  for (const auto& loop : E.loops) c.polygon(loop, stroke);
}

void render_body(const ConvexBody& K, const std::string& path) {
  SvgCanvas c;
  draw_body(c, K, "black");
  draw_normal_fan(c, K, 0.18 * K.diameter(), "crimson");
  c.save(path);
}

void render_steiner(const ConvexBody& before, const ConvexBody& after,
                    const std::string& path) {
  SvgCanvas c;
  draw_body(c, before, "silver");
  draw_body(c, after, "black");
  c.save(path);
}

void render_perimeter(const aniso::PolygonSet& E, const aniso::PolygonSet* F,
                      const ConvexBody& K, const std::string& path) {
  SvgCanvas c;
  if (F) draw_polygon_set(c, *F, "silver");
  draw_polygon_set(c, E, "black");
  draw_body(c, K, "royalblue");
  draw_normal_fan(c, K, 0.18 * K.diameter(), "crimson");
  c.save(path);
}

void render_normal_overlay(const ConvexBody& K, const aniso::SbvProfile& v,
                           const std::string& path) {
  SvgCanvas c;
  draw_body(c, K, "silver");
  draw_normal_fan(c, K, 0.18 * K.diameter(), "royalblue");
  const aniso::NormalSet N = aniso::normals_set(K);
  const auto& nodes = v.nodes();
  const auto slopes = v.slopes();
  const double r = 0.45 * K.diameter();
  for (size_t i = 0; i + 1 < nodes.size(); ++i) {
    const double mid = 0.5 * (nodes[i] + nodes[i + 1]);
    if (v.value(mid) <= 1e-12) continue;
    const Vec2 nu = aniso::normalized(Vec2{-0.5 * slopes[i], 1.0});
    const bool ok = aniso::is_in_closure(nu, N);
    c.arrow({0.0, 0.0}, {r * nu.x, r * nu.y}, ok ? "seagreen" : "crimson");
  }
  c.save(path);
}

}  // namespace scenes
