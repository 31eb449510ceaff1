#include "aniso/steiner.hpp"

#include <cmath>

namespace aniso {

SymmetralResult steiner_symmetrize(const ConvexBody& K) {
  if (K.dim() != 2)
    throw DimensionUnsupported("steiner_symmetrize(): planar bodies only");
  if (K.kind() == BodyKind::Ellipse) {
    // Already symmetric; record a sampled chord profile for reporting.
    const double a = K.semi_axis_a(), b = K.semi_axis_b();
    std::vector<std::pair<double, double>> pts;
    const int n = 256;
    for (int i = 0; i <= n; ++i) {
      const double x = -a + 2.0 * a * i / n;
      pts.emplace_back(x, 2.0 * b * std::sqrt(std::max(0.0, 1.0 - (x / a) * (x / a))));
    }
    return SymmetralResult{K, SbvProfile::piecewise_linear(pts)};
  }
  const SbvProfile v = section_length_profile(K.vertices());
  // Chord length of a convex set is concave, so the hull of the +-v/2 node
  // points is exactly the symmetral.
  std::vector<Vec2> pts;
  const auto& N = v.nodes();
  for (size_t i = 0; i < N.size(); ++i) {
    const double h =
        0.5 * std::max(v.values_left()[i], v.values_right()[i]);
    pts.push_back({N[i], h});
    pts.push_back({N[i], -h});
  }
  PolytopeOptions opts;
  opts.require_origin_inside = false;
  return SymmetralResult{ConvexBody::polytope(std::move(pts), opts), v};
}

VDistributedSet build_F_of_v(const SbvProfile& v) {
  return make_v_distributed(v, SbvProfile{});
}

bool support_symmetry_check(const ConvexBody& K, int samples, double tol) {
  if (K.dim() != 2)
    throw DimensionUnsupported("support_symmetry_check(): planar bodies only");
  for (int i = 0; i < samples; ++i) {
    const double th = 2.0 * M_PI * i / samples;
    const Vec2 d{std::cos(th), std::sin(th)};
    const double up = support_eval(K, d);
    const double dn = support_eval(K, Vec2{d.x, -d.y});
    if (std::fabs(up - dn) > tol * (1.0 + std::fabs(up))) return false;
  }
  return true;
}

}  // namespace aniso
