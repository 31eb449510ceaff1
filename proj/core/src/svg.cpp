#include "aniso/svg.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace aniso {

namespace {

std::string fmt(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6g", x);
  return buf;
}

// y is negated here; SVG's y axis points down and we want math orientation
// without a transform attribute (a transform would mirror text too).
std::string pt(Vec2 p) { return fmt(p.x) + "," + fmt(-p.y); }

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace

void SvgCanvas::bump(Vec2 p) {
  minx_ = std::min(minx_, p.x);
  maxx_ = std::max(maxx_, p.x);
  miny_ = std::min(miny_, -p.y);
  maxy_ = std::max(maxy_, -p.y);
}

double SvgCanvas::stroke_width() const {
  double span = std::max(maxx_ - minx_, maxy_ - miny_);
  if (span <= 0.0) span = 1.0;
  return span / 300.0;
}

void SvgCanvas::polygon(const std::vector<Vec2>& pts, const std::string& stroke,
                        const std::string& fill) {
  if (pts.empty()) return;
  std::string d;
  for (const Vec2& p : pts) {
    bump(p);
    if (!d.empty()) d += " ";
    d += pt(p);
  }
  items_.push_back("<polygon points=\"" + d + "\" stroke=\"" + stroke +
                   "\" fill=\"" + fill + "\" stroke-width=\"SW\"/>");
}

void SvgCanvas::polyline(const std::vector<Vec2>& pts,
                         const std::string& stroke) {
  if (pts.size() < 2) return;
  std::string d;
  for (const Vec2& p : pts) {
    bump(p);
    if (!d.empty()) d += " ";
    d += pt(p);
  }
  items_.push_back("<polyline points=\"" + d + "\" stroke=\"" + stroke +
                   "\" fill=\"none\" stroke-width=\"SW\"/>");
}

void SvgCanvas::segment(Vec2 a, Vec2 b, const std::string& stroke) {
  bump(a);
  bump(b);
  items_.push_back("<line x1=\"" + fmt(a.x) + "\" y1=\"" + fmt(-a.y) +
                   "\" x2=\"" + fmt(b.x) + "\" y2=\"" + fmt(-b.y) +
                   "\" stroke=\"" + stroke + "\" stroke-width=\"SW\"/>");
}

void SvgCanvas::circle(Vec2 c, double r, const std::string& stroke,
                       const std::string& fill) {
  bump({c.x - r, c.y - r});
  bump({c.x + r, c.y + r});
  items_.push_back("<circle cx=\"" + fmt(c.x) + "\" cy=\"" + fmt(-c.y) +
                   "\" r=\"" + fmt(r) + "\" stroke=\"" + stroke +
                   "\" fill=\"" + fill + "\" stroke-width=\"SW\"/>");
}

void SvgCanvas::ellipse_shape(Vec2 c, double rx, double ry,
                              const std::string& stroke,
                              const std::string& fill) {
  bump({c.x - rx, c.y - ry});
  bump({c.x + rx, c.y + ry});
  items_.push_back("<ellipse cx=\"" + fmt(c.x) + "\" cy=\"" + fmt(-c.y) +
                   "\" rx=\"" + fmt(rx) + "\" ry=\"" + fmt(ry) +
                   "\" stroke=\"" + stroke + "\" fill=\"" + fill +
                   "\" stroke-width=\"SW\"/>");
}

void SvgCanvas::arrow(Vec2 from, Vec2 to, const std::string& color) {
  Vec2 d{to.x - from.x, to.y - from.y};
  double len = d.norm();
  if (len <= 0.0) return;
  Vec2 u{d.x / len, d.y / len};
  Vec2 n{-u.y, u.x};
  double h = 0.18 * len;
  Vec2 base{to.x - h * u.x, to.y - h * u.y};
  Vec2 w1{base.x + 0.5 * h * n.x, base.y + 0.5 * h * n.y};
  Vec2 w2{base.x - 0.5 * h * n.x, base.y - 0.5 * h * n.y};
  segment(from, base, color);
  bump(w1);
  bump(w2);
  bump(to);
  items_.push_back("<polygon points=\"" + pt(to) + " " + pt(w1) + " " +
                   pt(w2) + "\" stroke=\"none\" fill=\"" + color + "\"/>");
}

void SvgCanvas::text(Vec2 at, const std::string& s, double size) {
  bump(at);
  labels_.push_back({at, s, size});
}

std::string SvgCanvas::render() const {
  double minx = minx_, miny = miny_, maxx = maxx_, maxy = maxy_;
  if (items_.empty() && labels_.empty()) {
    minx = miny = -1.0;
    maxx = maxy = 1.0;
  }
  double span = std::max(maxx - minx, maxy - miny);
  if (span <= 0.0) span = 1.0;
  double margin = 0.08 * span;
  double sw = stroke_width();
  std::string sws = fmt(sw);

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"640\" "
         "viewBox=\""
      << fmt(minx - margin) << " " << fmt(miny - margin) << " "
      << fmt(maxx - minx + 2 * margin) << " " << fmt(maxy - miny + 2 * margin)
      << "\">\n";
  for (std::string item : items_) {
    auto pos = item.find("SW");
    if (pos != std::string::npos) item.replace(pos, 2, sws);
    out << "  " << item << "\n";
  }
  for (const Label& l : labels_) {
    double size = l.size > 0.0 ? l.size : span / 25.0;
    out << "  <text x=\"" << fmt(l.at.x) << "\" y=\"" << fmt(-l.at.y)
        << "\" font-size=\"" << fmt(size)
        << "\" font-family=\"sans-serif\">" << escape(l.s) << "</text>\n";
  }
  out << "</svg>\n";
  return out.str();
}

void SvgCanvas::save(const std::string& path) const {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error("cannot open file for writing: " + path);
  f << render();
}

}  // namespace aniso
