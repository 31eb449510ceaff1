#pragma once
// SVG scene builders shared by the subcommands.

#include <string>

#include <aniso/convex_body.hpp>
#include <aniso/perimeter.hpp>
#include <aniso/rigidity.hpp>
#include <aniso/svg.hpp>

namespace scenes {

void draw_body(aniso::SvgCanvas& c, const aniso::ConvexBody& K,
               const std::string& stroke);
// Unit outward normals drawn as arrows from boundary midpoints.
void draw_normal_fan(aniso::SvgCanvas& c, const aniso::ConvexBody& K,
                     double scale, const std::string& color);
void draw_polygon_set(aniso::SvgCanvas& c, const aniso::PolygonSet& E,
                      const std::string& stroke);

void render_body(const aniso::ConvexBody& K, const std::string& path);
void render_steiner(const aniso::ConvexBody& before,
                    const aniso::ConvexBody& after, const std::string& path);
void render_perimeter(const aniso::PolygonSet& E, const aniso::PolygonSet* F,
                      const aniso::ConvexBody& K, const std::string& path);
// Body, its normal fan, and the attained profile normals from the origin:
// members of the normal-set closure in green, failures in red.
void render_normal_overlay(const aniso::ConvexBody& K,
                           const aniso::SbvProfile& v,
                           const std::string& path);

}  // namespace scenes
