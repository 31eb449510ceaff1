#pragma once
// Convex bodies with the origin interior: support/gauge duality, polar bodies,
// subdifferential faces, support cones, maximizer sets, normal sets, and the
// Hausdorff distance. Planar bodies are first-class; vertex-listed polytopes
// in dimension d >= 3 support only support_eval/gauge_eval.

#include <optional>
#include <vector>

#include "aniso/base.hpp"

namespace aniso {

enum class BodyKind { Polytope, Ellipse };

struct PolytopeOptions {
  // Waived only for raw test polygons fed to the symmetrizer; bodies without
  // the origin interior reject polar/gauge/cone queries.
  bool require_origin_inside = true;
};

class ConvexBody {
 public:
  // Planar polytope. Vertices are canonicalized: convex hull, counterclockwise,
  // lexicographically smallest vertex first, duplicates and collinear points
  // removed.
  static ConvexBody polytope(std::vector<Vec2> vertices,
                             PolytopeOptions opts = {});
  // Vertex-listed polytope in dimension d >= 3 (vertices deduplicated, not
  // otherwise canonicalized).
  static ConvexBody polytope_d(std::vector<VecD> vertices,
                               PolytopeOptions opts = {});
  static ConvexBody ellipse(double a, double b);

  BodyKind kind() const { return kind_; }
  int dim() const { return dim_; }
  bool origin_inside() const { return origin_inside_; }

  const std::vector<Vec2>& vertices() const;       // planar polytope
  const std::vector<VecD>& vertices_d() const;     // d >= 3 polytope
  double semi_axis_a() const;
  double semi_axis_b() const;

  double area() const;      // planar
  double diameter() const;  // planar

 private:
  ConvexBody() = default;
  BodyKind kind_ = BodyKind::Polytope;
  int dim_ = 2;
  bool origin_inside_ = false;
  std::vector<Vec2> verts_;
  std::vector<VecD> verts_d_;
  double a_ = 0.0, b_ = 0.0;

  friend ConvexBody polar(const ConvexBody&);
};

// A face of a planar body boundary: a single point or a closed segment,
// stored by its extreme points (1 or 2 entries).
struct Face {
  std::vector<Vec2> points;
  bool is_point() const { return points.size() == 1; }
  bool contains(Vec2 p, double tol = default_tol()) const;
  Vec2 midpoint() const;
};

// Intersection of two point-or-segment faces; empty optional when disjoint.
std::optional<Face> face_intersection(const Face& f, const Face& g,
                                      double tol = default_tol());

struct NormalSet {
  bool full_sphere = false;
  std::vector<Vec2> normals;  // unit vectors, deduplicated
};

struct AdditivityResult {
  bool additive = false;
  // A boundary point attaining the support of both directions, when one
  // exists and both directions are nonzero.
  std::optional<Vec2> witness;
  operator bool() const { return additive; }
};

double support_eval(const ConvexBody& K, Vec2 x);
double support_eval(const ConvexBody& K, const VecD& x);
double gauge_eval(const ConvexBody& K, Vec2 x);
double gauge_eval(const ConvexBody& K, const VecD& x);

ConvexBody polar(const ConvexBody& K);

Face subdifferential_face(const ConvexBody& K, Vec2 x0,
                          double tol = default_tol());
bool cone_contains(const ConvexBody& K, Vec2 z, Vec2 y,
                   double tol = default_tol());
Face maximizer_set(const ConvexBody& K, Vec2 y, double tol = default_tol());
AdditivityResult is_additive(const ConvexBody& K, Vec2 y1, Vec2 y2,
                             double tol = default_tol());

NormalSet normals_set(const ConvexBody& K);
bool is_in_closure(Vec2 nu, const NormalSet& N, double tol = default_tol());
bool is_extreme_of_polar(Vec2 y, const ConvexBody& K,
                         double tol = default_tol());

double distance_to_body(Vec2 p, const ConvexBody& B);
double hausdorff_distance(const ConvexBody& A, const ConvexBody& B);

}  // namespace aniso
