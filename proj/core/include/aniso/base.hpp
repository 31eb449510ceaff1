#pragma once
// Shared scalar/vector types, error hierarchy, and the global tolerance knob.

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

namespace aniso {

// Default absolute tolerance for boundary/equality predicates on unit-scale
// data. Overridable per call; the process-wide default honors ANISO_TOL.
double default_tol();

// Node-merging tolerance for abscissae and jump heights; below this, features
// are treated as degenerate and erased.
inline constexpr double kMergeTol = 1e-12;

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NotOnBoundary : Error {
  using Error::Error;
};
struct ZeroDirection : Error {
  using Error::Error;
};
struct DimensionUnsupported : Error {
  using Error::Error;
};
struct SectionNotSegment : Error {
  using Error::Error;
};
struct ProfileMismatch : Error {
  using Error::Error;
};
struct NotASymmetral : Error {
  using Error::Error;
};
struct ParseError : Error {
  using Error::Error;
};

struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  constexpr Vec2() = default;
  constexpr Vec2(double x_, double y_) : x(x_), y(y_) {}

  constexpr Vec2 operator+(Vec2 o) const { return {x + o.x, y + o.y}; }
  constexpr Vec2 operator-(Vec2 o) const { return {x - o.x, y - o.y}; }
  constexpr Vec2 operator-() const { return {-x, -y}; }
  constexpr Vec2 operator*(double t) const { return {x * t, y * t}; }
  constexpr Vec2 operator/(double t) const { return {x / t, y / t}; }
  constexpr double dot(Vec2 o) const { return x * o.x + y * o.y; }
  // z-component of the cross product; positive when o is counterclockwise of *this.
  constexpr double cross(Vec2 o) const { return x * o.y - y * o.x; }
  double norm() const { return std::hypot(x, y); }
  constexpr double norm2() const { return x * x + y * y; }
};

inline constexpr Vec2 operator*(double t, Vec2 v) { return v * t; }

inline Vec2 normalized(Vec2 v) {
  double n = v.norm();
  if (n == 0.0) throw ZeroDirection("cannot normalize the zero vector");
  return v / n;
}

// General-dimension point; used only by the vertex-listed polytope paths that
// accept d >= 2.
using VecD = std::vector<double>;

inline double dot(const VecD& a, const VecD& b) {
  double s = 0.0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline double norm(const VecD& a) {
  double s = 0.0;
  for (double c : a) s += c * c;
  return std::sqrt(s);
}

// Closed interval [a, b]; degenerate (a == b) allowed.
struct Interval {
  double a = 0.0;
  double b = 0.0;
  double length() const { return b - a; }
  bool contains(double x) const { return x >= a && x <= b; }
};

// Finite union of closed intervals, kept sorted and disjoint.
class IntervalSet {
 public:
  IntervalSet() = default;
  IntervalSet(double a, double b) { add(a, b); }
  explicit IntervalSet(Interval iv) { add(iv.a, iv.b); }

  void add(double a, double b);
  bool contains(double x) const;
  // Total length of the overlap of [a, b] with this set.
  double clip_length(double a, double b) const;
  bool empty() const { return parts_.empty(); }
  const std::vector<Interval>& parts() const { return parts_; }

  static IntervalSet whole_line();
  bool is_whole_line() const;

 private:
  std::vector<Interval> parts_;
};

}  // namespace aniso
