#pragma once
// Minimal SVG emitter for geometric debugging output: bodies, profiles,
// boundary loops, and normal arrows. World coordinates, y pointing up.

#include <string>
#include <vector>

#include "aniso/base.hpp"

namespace aniso {

class SvgCanvas {
 public:
  void polygon(const std::vector<Vec2>& pts, const std::string& stroke,
               const std::string& fill = "none");
  void polyline(const std::vector<Vec2>& pts, const std::string& stroke);
  void segment(Vec2 a, Vec2 b, const std::string& stroke);
  void circle(Vec2 c, double r, const std::string& stroke,
              const std::string& fill = "none");
  void ellipse_shape(Vec2 c, double rx, double ry, const std::string& stroke,
                     const std::string& fill = "none");
  void arrow(Vec2 from, Vec2 to, const std::string& color);
  void text(Vec2 at, const std::string& s, double size = 0.0);

  std::string render() const;
  void save(const std::string& path) const;

 private:
  struct Label {
    Vec2 at;
    std::string s;
    double size;
  };
  std::vector<std::string> items_;  // ready elements in flipped coordinates
  std::vector<Label> labels_;
  double minx_ = 1e300, miny_ = 1e300, maxx_ = -1e300, maxy_ = -1e300;
  void bump(Vec2 p);
  double stroke_width() const;
};

}  // namespace aniso
