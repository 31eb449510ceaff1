#pragma once
// Compactly supported, piecewise-linear special-BV functions of one real
// variable with explicit jump bookkeeping: the class carrying section-length
// profiles v and barycenter profiles b. Derivatives have an absolutely
// continuous part (piecewise-constant slopes) and a jump part; no Cantor part
// exists in this class.

#include <utility>
#include <vector>

#include "aniso/base.hpp"

namespace aniso {

// One jump of a profile. direction = +1 means the upper value sits on the
// right of the location.
struct JumpRecord {
  double location = 0.0;
  double upper = 0.0;
  double lower = 0.0;
  int direction = +1;
  double height() const { return upper - lower; }
};

// Approximate lower/upper limits and their average at a point.
struct Bounds {
  double lower = 0.0;
  double upper = 0.0;
  double approx = 0.0;
};

struct PieceSlope {
  double a = 0.0, b = 0.0;  // open interval (a, b)
  double slope = 0.0;
};

struct DerivativeParts {
  std::vector<PieceSlope> slopes;
  std::vector<JumpRecord> jumps;
};

class SbvProfile {
 public:
  SbvProfile() = default;  // the zero profile

  // nodes strictly increasing; values_left/right are one-sided limits at the
  // nodes. The function vanishes outside [nodes.front(), nodes.back()], so
  // values_left.front() and values_right.back() must be 0.
  static SbvProfile from_limits(std::vector<double> nodes,
                                std::vector<double> values_left,
                                std::vector<double> values_right);
  static SbvProfile indicator(double a, double b, double height);
  // Continuous interpolation through (x, y) points, jumping to 0 outside the
  // span when the end values are nonzero.
  static SbvProfile piecewise_linear(
      const std::vector<std::pair<double, double>>& points);

  bool is_zero() const { return nodes_.empty(); }
  const std::vector<double>& nodes() const { return nodes_; }
  const std::vector<double>& values_left() const { return vl_; }
  const std::vector<double>& values_right() const { return vr_; }
  std::vector<double> slopes() const;  // one per piece, nodes()-1 entries

  double support_lo() const { return nodes_.empty() ? 0.0 : nodes_.front(); }
  double support_hi() const { return nodes_.empty() ? 0.0 : nodes_.back(); }
  bool is_nonnegative(double tol = default_tol()) const;
  double max_abs() const;

  // Signed one-sided limits (left, right) at x.
  std::pair<double, double> limits_at(double x) const;
  Bounds eval_bounds(double x) const;
  double value(double x) const;  // the approximate average

  std::vector<JumpRecord> jumps() const;
  SbvProfile truncate(double M) const;  // pointwise clamp to [-M, M]
  DerivativeParts derivative_parts() const;
  // |Df|(G): integral of |slope| plus jump heights inside G (whole line when
  // G is null).
  double total_variation(const IntervalSet* G = nullptr) const;
  IntervalSet positive_set() const;  // {f > 0} as open-interval union

 private:
  std::vector<double> nodes_, vl_, vr_;
  void normalize();
  // Index of the node matching x within the merge tolerance, or -1.
  int node_index(double x) const;
};

SbvProfile combine(const SbvProfile& f, const SbvProfile& g, double alpha,
                   double beta);
inline SbvProfile operator+(const SbvProfile& f, const SbvProfile& g) {
  return combine(f, g, 1.0, 1.0);
}
inline SbvProfile operator-(const SbvProfile& f, const SbvProfile& g) {
  return combine(f, g, 1.0, -1.0);
}
inline SbvProfile operator*(double c, const SbvProfile& f) {
  return combine(f, SbvProfile{}, c, 0.0);
}

// Sorted union of the two node sets (merge tolerance applied).
std::vector<double> merged_nodes(const SbvProfile& f, const SbvProfile& g);

// Vertical-section data of a simple polygon loop. Both throw
// SectionNotSegment when some vertical section has more than one component.
SbvProfile section_length_profile(const std::vector<Vec2>& loop);
// Midpoint of the vertical section where it is nonempty; the second argument
// is the section-length profile of the same polygon and fixes the node set.
SbvProfile barycenter_of_polygon_sections(const std::vector<Vec2>& loop,
                                          const SbvProfile& v);

}  // namespace aniso
