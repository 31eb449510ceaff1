#include "aniso/convex_body.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "aniso/simplex_lp.hpp"

namespace aniso {

namespace {

// Andrew monotone chain. Strict turns only, so collinear and duplicate
// points are dropped. Output is counterclockwise.
std::vector<Vec2> convex_hull(std::vector<Vec2> pts) {
  std::sort(pts.begin(), pts.end(), [](Vec2 p, Vec2 q) {
    return p.x < q.x || (p.x == q.x && p.y < q.y);
  });
  pts.erase(std::unique(pts.begin(), pts.end(),
                        [](Vec2 p, Vec2 q) {
                          return p.x == q.x && p.y == q.y;
                        }),
            pts.end());
  const int n = static_cast<int>(pts.size());
  if (n < 3) return pts;
  std::vector<Vec2> h(2 * n);
  int k = 0;
  for (int i = 0; i < n; ++i) {
    while (k >= 2 && (h[k - 1] - h[k - 2]).cross(pts[i] - h[k - 2]) <= 0.0)
      --k;
    h[k++] = pts[i];
  }
  for (int i = n - 2, lower = k + 1; i >= 0; --i) {
    while (k >= lower && (h[k - 1] - h[k - 2]).cross(pts[i] - h[k - 2]) <= 0.0)
      --k;
    h[k++] = pts[i];
  }
  h.resize(k - 1);
  return h;
}

void rotate_to_lex_min(std::vector<Vec2>& v) {
  for (Vec2& p : v) {  // negative zeros would leak into serialized output
    if (p.x == 0.0) p.x = 0.0;
    if (p.y == 0.0) p.y = 0.0;
  }
  auto it = std::min_element(v.begin(), v.end(), [](Vec2 p, Vec2 q) {
    return p.x < q.x || (p.x == q.x && p.y < q.y);
  });
  std::rotate(v.begin(), it, v.end());
}

bool origin_strictly_inside(const std::vector<Vec2>& v) {
  const int n = static_cast<int>(v.size());
  for (int i = 0; i < n; ++i) {
    const Vec2 a = v[i], b = v[(i + 1) % n];
    if ((b - a).cross(Vec2{0.0, 0.0} - a) <= 0.0) return false;
  }
  return true;
}

// Vertices of the polar polygon, one per edge of K: n_i / h_i where n_i is
// the outward edge normal and h_i the support value in that direction.
std::vector<Vec2> polar_vertices(const std::vector<Vec2>& v) {
  const int n = static_cast<int>(v.size());
  std::vector<Vec2> out;
  out.reserve(n);
  for (int i = 0; i < n; ++i) {
    const Vec2 a = v[i], b = v[(i + 1) % n];
    const Vec2 d = b - a;
    const Vec2 nrm{d.y, -d.x};
    const double h = a.dot(nrm);
    out.push_back(nrm / h);
  }
  return out;
}

// Reduce a set of (collinear) candidate face points to its extreme pair.
Face reduce_to_face(std::vector<Vec2> pts) {
  if (pts.size() <= 1) return Face{std::move(pts)};
  size_t bi = 0, bj = 1;
  double best = -1.0;
  for (size_t i = 0; i < pts.size(); ++i)
    for (size_t j = i + 1; j < pts.size(); ++j) {
      const double d = (pts[i] - pts[j]).norm2();
      if (d > best) {
        best = d;
        bi = i;
        bj = j;
      }
    }
  if (best <= kMergeTol * kMergeTol) return Face{{pts[bi]}};
  Vec2 p = pts[bi], q = pts[bj];
  if (q.x < p.x || (q.x == p.x && q.y < p.y)) std::swap(p, q);
  return Face{{p, q}};
}

double point_segment_distance(Vec2 p, Vec2 a, Vec2 b) {
  const Vec2 d = b - a;
  const double len2 = d.norm2();
  if (len2 <= kMergeTol * kMergeTol) return (p - a).norm();
  double t = (p - a).dot(d) / len2;
  t = std::clamp(t, 0.0, 1.0);
  return (p - (a + d * t)).norm();
}

// Ray-shooting LP for vertex-listed polytopes in dimension d >= 3:
// the largest s with s*dir inside the convex hull. Empty optional when no
// such s >= 0 exists (the hull misses the closed ray).
std::optional<double> max_ray_scale(const std::vector<VecD>& verts,
                                    const VecD& dir) {
  const int d = static_cast<int>(dir.size());
  const int m = static_cast<int>(verts.size());
  std::vector<std::vector<double>> A(d + 1, std::vector<double>(m + 1, 0.0));
  std::vector<double> b(d + 1, 0.0), c(m + 1, 0.0);
  for (int k = 0; k < d; ++k) {
    A[k][0] = -dir[k];
    for (int i = 0; i < m; ++i) A[k][i + 1] = verts[i][k];
  }
  for (int i = 0; i < m; ++i) A[d][i + 1] = 1.0;
  b[d] = 1.0;
  c[0] = 1.0;
  auto z = simplex_maximize(A, b, c);
  if (!z) return std::nullopt;
  return (*z)[0];
}

}  // namespace

ConvexBody ConvexBody::polytope(std::vector<Vec2> vertices,
                                PolytopeOptions opts) {
  ConvexBody k;
  k.kind_ = BodyKind::Polytope;
  k.dim_ = 2;
  k.verts_ = convex_hull(std::move(vertices));
  if (k.verts_.size() < 3)
    throw Error("polytope is degenerate: fewer than 3 hull vertices");
  rotate_to_lex_min(k.verts_);
  k.origin_inside_ = origin_strictly_inside(k.verts_);
  if (opts.require_origin_inside && !k.origin_inside_)
    throw Error("origin is not strictly inside the polytope");
  return k;
}

ConvexBody ConvexBody::polytope_d(std::vector<VecD> vertices,
                                  PolytopeOptions opts) {
  if (vertices.empty()) throw Error("polytope has no vertices");
  const size_t d = vertices[0].size();
  if (d < 3)
    throw DimensionUnsupported(
        "polytope_d expects dimension >= 3; use polytope() in the plane");
  for (const auto& v : vertices)
    if (v.size() != d) throw Error("inconsistent vertex dimensions");
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()),
                 vertices.end());
  if (vertices.size() < d + 1)
    throw Error("polytope is degenerate: too few distinct vertices");
  ConvexBody k;
  k.kind_ = BodyKind::Polytope;
  k.dim_ = static_cast<int>(d);
  k.verts_d_ = std::move(vertices);
  k.origin_inside_ = true;
  for (size_t ax = 0; ax < d && k.origin_inside_; ++ax) {
    for (double sign : {1.0, -1.0}) {
      VecD dir(d, 0.0);
      dir[ax] = sign;
      auto s = max_ray_scale(k.verts_d_, dir);
      if (!s || *s <= 1e-9) {
        k.origin_inside_ = false;
        break;
      }
    }
  }
  if (opts.require_origin_inside && !k.origin_inside_)
    throw Error("origin is not strictly inside the polytope");
  return k;
}

ConvexBody ConvexBody::ellipse(double a, double b) {
  if (!(a > 0.0) || !(b > 0.0))
    throw Error("ellipse semi-axes must be positive");
  ConvexBody k;
  k.kind_ = BodyKind::Ellipse;
  k.dim_ = 2;
  k.a_ = a;
  k.b_ = b;
  k.origin_inside_ = true;
  return k;
}

const std::vector<Vec2>& ConvexBody::vertices() const {
  if (kind_ != BodyKind::Polytope || dim_ != 2)
    throw Error("vertices(): body is not a planar polytope");
  return verts_;
}

const std::vector<VecD>& ConvexBody::vertices_d() const {
  if (kind_ != BodyKind::Polytope || dim_ < 3)
    throw Error("vertices_d(): body is not a d >= 3 polytope");
  return verts_d_;
}

double ConvexBody::semi_axis_a() const {
  if (kind_ != BodyKind::Ellipse) throw Error("semi_axis_a(): not an ellipse");
  return a_;
}

double ConvexBody::semi_axis_b() const {
  if (kind_ != BodyKind::Ellipse) throw Error("semi_axis_b(): not an ellipse");
  return b_;
}

double ConvexBody::area() const {
  if (dim_ != 2) throw DimensionUnsupported("area(): planar bodies only");
  if (kind_ == BodyKind::Ellipse) return M_PI * a_ * b_;
  double s = 0.0;
  const int n = static_cast<int>(verts_.size());
  for (int i = 0; i < n; ++i) s += verts_[i].cross(verts_[(i + 1) % n]);
  return 0.5 * s;
}

double ConvexBody::diameter() const {
  if (dim_ != 2) throw DimensionUnsupported("diameter(): planar bodies only");
  if (kind_ == BodyKind::Ellipse) return 2.0 * std::max(a_, b_);
  double best = 0.0;
  for (size_t i = 0; i < verts_.size(); ++i)
    for (size_t j = i + 1; j < verts_.size(); ++j)
      best = std::max(best, (verts_[i] - verts_[j]).norm());
  return best;
}

bool Face::contains(Vec2 p, double tol) const {
  if (points.empty()) return false;
  const double scale = 1.0 + points[0].norm();
  if (points.size() == 1) return (p - points[0]).norm() <= tol * scale;
  return point_segment_distance(p, points[0], points[1]) <= tol * scale;
}

Vec2 Face::midpoint() const {
  if (points.empty()) throw Error("midpoint of an empty face");
  Vec2 s{0.0, 0.0};
  for (Vec2 p : points) s = s + p;
  return s / static_cast<double>(points.size());
}

std::optional<Face> face_intersection(const Face& f, const Face& g,
                                      double tol) {
  if (f.points.empty() || g.points.empty()) return std::nullopt;
  if (f.is_point()) {
    if (g.contains(f.points[0], tol)) return Face{{f.points[0]}};
    return std::nullopt;
  }
  if (g.is_point()) {
    if (f.contains(g.points[0], tol)) return Face{{g.points[0]}};
    return std::nullopt;
  }
  const Vec2 p = f.points[0], u = f.points[1] - f.points[0];
  const Vec2 q = g.points[0], w = g.points[1] - g.points[0];
  const double ulen = u.norm(), wlen = w.norm();
  const double den = u.cross(w);
  if (std::fabs(den) <= 1e-12 * ulen * wlen) {
    // Parallel segments: intersect only when collinear.
    const double off = std::fabs(u.cross(q - p)) / ulen;
    if (off > tol * (1.0 + p.norm())) return std::nullopt;
    const double inv = 1.0 / (ulen * ulen);
    double t0 = (q - p).dot(u) * inv;
    double t1 = (q + w - p).dot(u) * inv;
    if (t0 > t1) std::swap(t0, t1);
    const double lo = std::max(0.0, t0), hi = std::min(1.0, t1);
    const double ptol = tol / (ulen + 1e-300);
    if (hi < lo - ptol) return std::nullopt;
    const Vec2 a = p + u * std::clamp(lo, 0.0, 1.0);
    const Vec2 b = p + u * std::clamp(hi, 0.0, 1.0);
    return reduce_to_face({a, b});
  }
  const double s = (q - p).cross(w) / den;
  const double t = (q - p).cross(u) / den;
  const double stol = tol / (ulen + 1e-300), ttol = tol / (wlen + 1e-300);
  if (s < -stol || s > 1.0 + stol || t < -ttol || t > 1.0 + ttol)
    return std::nullopt;
  return Face{{p + u * std::clamp(s, 0.0, 1.0)}};
}

double support_eval(const ConvexBody& K, Vec2 x) {
  if (K.dim() != 2)
    throw DimensionUnsupported("support_eval(Vec2) on a d >= 3 body");
  if (K.kind() == BodyKind::Ellipse)
    return std::hypot(K.semi_axis_a() * x.x, K.semi_axis_b() * x.y);
  double m = -std::numeric_limits<double>::infinity();
  for (Vec2 v : K.vertices()) m = std::max(m, v.dot(x));
  return m;
}

double support_eval(const ConvexBody& K, const VecD& x) {
  if (K.dim() == 2) {
    if (x.size() != 2) throw Error("direction dimension mismatch");
    return support_eval(K, Vec2{x[0], x[1]});
  }
  if (static_cast<int>(x.size()) != K.dim())
    throw Error("direction dimension mismatch");
  double m = -std::numeric_limits<double>::infinity();
  for (const auto& v : K.vertices_d()) m = std::max(m, dot(v, x));
  return m;
}

double gauge_eval(const ConvexBody& K, Vec2 x) {
  if (K.dim() != 2)
    throw DimensionUnsupported("gauge_eval(Vec2) on a d >= 3 body");
  if (K.kind() == BodyKind::Ellipse)
    return std::hypot(x.x / K.semi_axis_a(), x.y / K.semi_axis_b());
  if (!K.origin_inside())
    throw Error("gauge undefined: origin is not inside the body");
  // max over edges of (x . n_e) / h_e, the support of the polar body.
  const auto& v = K.vertices();
  const int n = static_cast<int>(v.size());
  double m = 0.0;
  for (int i = 0; i < n; ++i) {
    const Vec2 d = v[(i + 1) % n] - v[i];
    const Vec2 nrm{d.y, -d.x};
    m = std::max(m, x.dot(nrm) / v[i].dot(nrm));
  }
  return m;
}

double gauge_eval(const ConvexBody& K, const VecD& x) {
  if (K.dim() == 2) {
    if (x.size() != 2) throw Error("direction dimension mismatch");
    return gauge_eval(K, Vec2{x[0], x[1]});
  }
  if (static_cast<int>(x.size()) != K.dim())
    throw Error("direction dimension mismatch");
  if (!K.origin_inside())
    throw Error("gauge undefined: origin is not inside the body");
  if (norm(x) == 0.0) return 0.0;
  auto s = max_ray_scale(K.vertices_d(), x);
  if (!s || *s <= 0.0)
    throw Error("gauge evaluation failed: ray misses the body");
  return 1.0 / *s;
}

ConvexBody polar(const ConvexBody& K) {
  if (K.dim() != 2)
    throw DimensionUnsupported("polar(): planar bodies only");
  if (K.kind() == BodyKind::Ellipse)
    return ConvexBody::ellipse(1.0 / K.semi_axis_a(), 1.0 / K.semi_axis_b());
  if (!K.origin_inside())
    throw Error("polar undefined: origin is not inside the body");
  return ConvexBody::polytope(polar_vertices(K.vertices()));
}

Face subdifferential_face(const ConvexBody& K, Vec2 x0, double tol) {
  if (K.dim() != 2)
    throw DimensionUnsupported("subdifferential_face(): planar bodies only");
  const double g = gauge_eval(K, x0);
  if (std::fabs(g - 1.0) > tol * 100.0 + tol)
    throw NotOnBoundary("subdifferential_face: gauge of the point is " +
                        std::to_string(g) + ", expected 1");
  if (K.kind() == BodyKind::Ellipse) {
    const double a = K.semi_axis_a(), b = K.semi_axis_b();
    return Face{{Vec2{x0.x / (a * a), x0.y / (b * b)} / g}};
  }
  const auto pv = polar_vertices(K.vertices());
  double m = -std::numeric_limits<double>::infinity();
  for (Vec2 u : pv) m = std::max(m, u.dot(x0));
  std::vector<Vec2> hit;
  for (Vec2 u : pv)
    if (u.dot(x0) >= m - tol * (1.0 + std::fabs(m))) hit.push_back(u);
  return reduce_to_face(std::move(hit));
}

bool cone_contains(const ConvexBody& K, Vec2 z, Vec2 y, double tol) {
  if (K.dim() != 2)
    throw DimensionUnsupported("cone_contains(): planar bodies only");
  const double g = gauge_eval(K, z);
  if (std::fabs(g - 1.0) > tol * 100.0 + tol)
    throw NotOnBoundary("cone_contains: gauge of the base point is " +
                        std::to_string(g) + ", expected 1");
  if (y.norm() == 0.0) return true;
  const double s = support_eval(K, y);
  return y.dot(z) >= s - tol * (1.0 + std::fabs(s));
}

Face maximizer_set(const ConvexBody& K, Vec2 y, double tol) {
  if (K.dim() != 2)
    throw DimensionUnsupported("maximizer_set(): planar bodies only");
  if (y.norm() <= kMergeTol)
    throw ZeroDirection("maximizer_set: zero direction");
  if (K.kind() == BodyKind::Ellipse) {
    const double a = K.semi_axis_a(), b = K.semi_axis_b();
    const double s = support_eval(K, y);
    return Face{{Vec2{a * a * y.x, b * b * y.y} / s}};
  }
  const auto& v = K.vertices();
  double m = -std::numeric_limits<double>::infinity();
  for (Vec2 p : v) m = std::max(m, p.dot(y));
  std::vector<Vec2> hit;
  for (Vec2 p : v)
    if (p.dot(y) >= m - tol * (1.0 + std::fabs(m))) hit.push_back(p);
  return reduce_to_face(std::move(hit));
}

AdditivityResult is_additive(const ConvexBody& K, Vec2 y1, Vec2 y2,
                             double tol) {
  if (K.dim() != 2)
    throw DimensionUnsupported("is_additive(): planar bodies only");
  const bool z1 = y1.norm() <= kMergeTol, z2 = y2.norm() <= kMergeTol;
  if (z1 && z2) return {true, std::nullopt};
  if (z1 || z2) {
    const Vec2 y = z1 ? y2 : y1;
    return {true, maximizer_set(K, y, tol).midpoint()};
  }
  const double s1 = support_eval(K, y1);
  const double s2 = support_eval(K, y2);
  const double s12 = support_eval(K, y1 + y2);
  const bool additive =
      std::fabs(s1 + s2 - s12) <=
      tol * (1.0 + std::fabs(s1) + std::fabs(s2));
  AdditivityResult r;
  r.additive = additive;
  auto common = face_intersection(maximizer_set(K, y1, tol),
                                  maximizer_set(K, y2, tol), tol);
  if (common) r.witness = common->midpoint();
  return r;
}

NormalSet normals_set(const ConvexBody& K) {
  if (K.dim() != 2)
    throw DimensionUnsupported("normals_set(): planar bodies only");
  NormalSet N;
  if (K.kind() == BodyKind::Ellipse) {
    N.full_sphere = true;
    return N;
  }
  const auto& v = K.vertices();
  const int n = static_cast<int>(v.size());
  for (int i = 0; i < n; ++i) {
    const Vec2 d = v[(i + 1) % n] - v[i];
    N.normals.push_back(normalized(Vec2{d.y, -d.x}));
  }
  return N;
}

bool is_in_closure(Vec2 nu, const NormalSet& N, double tol) {
  const Vec2 u = normalized(nu);
  if (N.full_sphere) return true;
  for (Vec2 n : N.normals)
    if ((u - n).norm() <= tol) return true;
  return false;
}

bool is_extreme_of_polar(Vec2 y, const ConvexBody& K, double tol) {
  if (K.dim() != 2)
    throw DimensionUnsupported("is_extreme_of_polar(): planar bodies only");
  if (y.norm() <= kMergeTol)
    throw ZeroDirection("is_extreme_of_polar: zero direction");
  if (K.kind() == BodyKind::Ellipse) return true;
  const double s = support_eval(K, y);
  const Vec2 p = y / s;
  for (Vec2 u : polar_vertices(K.vertices()))
    if ((p - u).norm() <= tol * (1.0 + u.norm())) return true;
  return false;
}

double distance_to_body(Vec2 p, const ConvexBody& B) {
  if (B.dim() != 2)
    throw DimensionUnsupported("distance_to_body(): planar bodies only");
  if (B.kind() == BodyKind::Ellipse) {
    const double a = B.semi_axis_a(), b = B.semi_axis_b();
    const double px = std::fabs(p.x), py = std::fabs(p.y);
    const double q = (px / a) * (px / a) + (py / b) * (py / b);
    if (q <= 1.0) return 0.0;
    // Closest boundary point (a^2 px/(t+a^2), b^2 py/(t+b^2)) for the root
    // t >= 0 of the on-ellipse equation; the function is decreasing in t.
    auto f = [&](double t) {
      const double u = a * px / (t + a * a);
      const double v = b * py / (t + b * b);
      return u * u + v * v - 1.0;
    };
    double lo = 0.0, hi = std::max(a, b) * (px + py + a + b);
    while (f(hi) > 0.0) hi *= 2.0;
    for (int it = 0; it < 200; ++it) {
      const double mid = 0.5 * (lo + hi);
      (f(mid) > 0.0 ? lo : hi) = mid;
    }
    const double t = 0.5 * (lo + hi);
    const Vec2 c{a * a * px / (t + a * a), b * b * py / (t + b * b)};
    return (Vec2{px, py} - c).norm();
  }
  const auto& v = B.vertices();
  const int n = static_cast<int>(v.size());
  bool inside = true;
  double best = std::numeric_limits<double>::infinity();
  for (int i = 0; i < n; ++i) {
    const Vec2 a = v[i], b = v[(i + 1) % n];
    if ((b - a).cross(p - a) < 0.0) inside = false;
    best = std::min(best, point_segment_distance(p, a, b));
  }
  return inside ? 0.0 : best;
}

namespace {

double one_sided_hausdorff(const ConvexBody& A, const ConvexBody& B) {
  if (A.kind() == BodyKind::Polytope) {
    double m = 0.0;
    for (Vec2 v : A.vertices()) m = std::max(m, distance_to_body(v, B));
    return m;
  }
  const double a = A.semi_axis_a(), b = A.semi_axis_b();
  auto d = [&](double th) {
    return distance_to_body(Vec2{a * std::cos(th), b * std::sin(th)}, B);
  };
  const int M = 720;
  int bi = 0;
  double bd = -1.0;
  for (int i = 0; i < M; ++i) {
    const double val = d(2.0 * M_PI * i / M);
    if (val > bd) {
      bd = val;
      bi = i;
    }
  }
  double lo = 2.0 * M_PI * (bi - 1) / M, hi = 2.0 * M_PI * (bi + 1) / M;
  for (int it = 0; it < 200; ++it) {
    const double m1 = lo + (hi - lo) / 3.0, m2 = hi - (hi - lo) / 3.0;
    if (d(m1) < d(m2))
      lo = m1;
    else
      hi = m2;
  }
  return std::max(bd, d(0.5 * (lo + hi)));
}

}  // namespace

double hausdorff_distance(const ConvexBody& A, const ConvexBody& B) {
  if (A.dim() != 2 || B.dim() != 2)
    throw DimensionUnsupported("hausdorff_distance(): planar bodies only");
  return std::max(one_sided_hausdorff(A, B), one_sided_hausdorff(B, A));
}

}  // namespace aniso
