#include "aniso/sbv1d.hpp"

#include <algorithm>
#include <array>
#include <cmath>

namespace aniso {

namespace {

bool near_zero(double x) { return std::fabs(x) <= kMergeTol; }

std::vector<double> merge_sorted_abscissae(std::vector<double> xs) {
  std::sort(xs.begin(), xs.end());
  std::vector<double> out;
  for (double x : xs)
    if (out.empty() || x - out.back() > kMergeTol) out.push_back(x);
  return out;
}

}  // namespace

SbvProfile SbvProfile::from_limits(std::vector<double> nodes,
                                   std::vector<double> values_left,
                                   std::vector<double> values_right) {
  if (nodes.size() != values_left.size() ||
      nodes.size() != values_right.size())
    throw Error("profile arrays must have equal length");
  for (size_t i = 0; i + 1 < nodes.size(); ++i)
    if (nodes[i + 1] < nodes[i]) throw Error("profile nodes must increase");
  for (double x : nodes)
    if (!std::isfinite(x)) throw Error("profile nodes must be finite");
  for (size_t i = 0; i < nodes.size(); ++i)
    if (!std::isfinite(values_left[i]) || !std::isfinite(values_right[i]))
      throw Error("profile values must be finite");
  if (!nodes.empty() &&
      (std::fabs(values_left.front()) > 1e-9 ||
       std::fabs(values_right.back()) > 1e-9))
    throw Error("profile must vanish outside its node span");
  SbvProfile f;
  f.nodes_ = std::move(nodes);
  f.vl_ = std::move(values_left);
  f.vr_ = std::move(values_right);
  f.normalize();
  return f;
}

SbvProfile SbvProfile::indicator(double a, double b, double height) {
  if (b <= a + kMergeTol) return SbvProfile{};
  return from_limits({a, b}, {0.0, height}, {height, 0.0});
}

SbvProfile SbvProfile::piecewise_linear(
    const std::vector<std::pair<double, double>>& points) {
  if (points.empty()) return SbvProfile{};
  std::vector<double> n, l, r;
  for (const auto& [x, y] : points) {
    n.push_back(x);
    l.push_back(y);
    r.push_back(y);
  }
  l.front() = 0.0;
  r.back() = 0.0;
  return from_limits(std::move(n), std::move(l), std::move(r));
}

void SbvProfile::normalize() {
  if (nodes_.empty()) {
    vl_.clear();
    vr_.clear();
    return;
  }
  // Merge near-coincident nodes, collapsing the degenerate piece between.
  std::vector<double> N{nodes_[0]}, L{vl_[0]}, R{vr_[0]};
  for (size_t i = 1; i < nodes_.size(); ++i) {
    if (nodes_[i] - N.back() <= kMergeTol) {
      R.back() = vr_[i];
    } else {
      N.push_back(nodes_[i]);
      L.push_back(vl_[i]);
      R.push_back(vr_[i]);
    }
  }
  // Erase jumps below the merge tolerance.
  for (size_t i = 0; i < N.size(); ++i)
    if (std::fabs(L[i] - R[i]) <= kMergeTol) L[i] = R[i] = 0.5 * (L[i] + R[i]);
  // Drop interior nodes that are neither jumps nor kinks.
  if (N.size() >= 3) {
    std::vector<double> N2{N[0]}, L2{L[0]}, R2{R[0]};
    for (size_t i = 1; i + 1 < N.size(); ++i) {
      const double s_in = (L[i] - R2.back()) / (N[i] - N2.back());
      const double s_out = (L[i + 1] - R[i]) / (N[i + 1] - N[i]);
      const bool flat = L[i] == R[i] &&
                        std::fabs(s_in - s_out) <=
                            kMergeTol * (1.0 + std::fabs(s_in) +
                                         std::fabs(s_out));
      if (!flat) {
        N2.push_back(N[i]);
        L2.push_back(L[i]);
        R2.push_back(R[i]);
      }
    }
    N2.push_back(N.back());
    L2.push_back(L.back());
    R2.push_back(R.back());
    N.swap(N2);
    L.swap(L2);
    R.swap(R2);
  }
  // Trim identically-zero end pieces.
  size_t lo = 0, hi = N.size() - 1;
  while (lo < hi && near_zero(L[lo]) && near_zero(R[lo]) &&
         near_zero(L[lo + 1]))
    ++lo;
  while (hi > lo && near_zero(L[hi]) && near_zero(R[hi]) &&
         near_zero(R[hi - 1]))
    --hi;
  if (lo == hi && near_zero(L[lo]) && near_zero(R[lo])) {
    nodes_.clear();
    vl_.clear();
    vr_.clear();
    return;
  }
  nodes_.assign(N.begin() + lo, N.begin() + hi + 1);
  vl_.assign(L.begin() + lo, L.begin() + hi + 1);
  vr_.assign(R.begin() + lo, R.begin() + hi + 1);
  vl_.front() = 0.0;
  vr_.back() = 0.0;
}

std::vector<double> SbvProfile::slopes() const {
  std::vector<double> s;
  for (size_t i = 0; i + 1 < nodes_.size(); ++i)
    s.push_back((vl_[i + 1] - vr_[i]) / (nodes_[i + 1] - nodes_[i]));
  return s;
}

bool SbvProfile::is_nonnegative(double tol) const {
  for (double v : vl_)
    if (v < -tol) return false;
  for (double v : vr_)
    if (v < -tol) return false;
  return true;
}

double SbvProfile::max_abs() const {
  double m = 0.0;
  for (double v : vl_) m = std::max(m, std::fabs(v));
  for (double v : vr_) m = std::max(m, std::fabs(v));
  return m;
}

int SbvProfile::node_index(double x) const {
  auto it = std::lower_bound(nodes_.begin(), nodes_.end(), x);
  if (it != nodes_.end() && std::fabs(*it - x) <= kMergeTol)
    return static_cast<int>(it - nodes_.begin());
  if (it != nodes_.begin() && std::fabs(*(it - 1) - x) <= kMergeTol)
    return static_cast<int>(it - 1 - nodes_.begin());
  return -1;
}

std::pair<double, double> SbvProfile::limits_at(double x) const {
  if (nodes_.empty()) return {0.0, 0.0};
  const int ni = node_index(x);
  if (ni >= 0) return {vl_[ni], vr_[ni]};
  if (x < nodes_.front() || x > nodes_.back()) return {0.0, 0.0};
  const auto it = std::upper_bound(nodes_.begin(), nodes_.end(), x);
  const size_t j = static_cast<size_t>(it - nodes_.begin()) - 1;
  const double s = (vl_[j + 1] - vr_[j]) / (nodes_[j + 1] - nodes_[j]);
  const double val = vr_[j] + s * (x - nodes_[j]);
  return {val, val};
}

Bounds SbvProfile::eval_bounds(double x) const {
  const auto [l, r] = limits_at(x);
  return Bounds{std::min(l, r), std::max(l, r), 0.5 * (l + r)};
}

double SbvProfile::value(double x) const { return eval_bounds(x).approx; }

std::vector<JumpRecord> SbvProfile::jumps() const {
  std::vector<JumpRecord> out;
  for (size_t i = 0; i < nodes_.size(); ++i) {
    if (vl_[i] == vr_[i]) continue;
    JumpRecord j;
    j.location = nodes_[i];
    j.upper = std::max(vl_[i], vr_[i]);
    j.lower = std::min(vl_[i], vr_[i]);
    j.direction = vr_[i] > vl_[i] ? +1 : -1;
    out.push_back(j);
  }
  return out;
}

SbvProfile SbvProfile::truncate(double M) const {
  if (!(M >= 0.0)) throw Error("truncation level must be nonnegative");
  if (nodes_.empty()) return SbvProfile{};
  std::vector<double> N = nodes_;
  const auto s = slopes();
  for (size_t i = 0; i + 1 < nodes_.size(); ++i) {
    if (std::fabs(s[i]) <= kMergeTol) continue;
    for (double level : {M, -M}) {
      const double x = nodes_[i] + (level - vr_[i]) / s[i];
      if (x > nodes_[i] + kMergeTol && x < nodes_[i + 1] - kMergeTol)
        N.push_back(x);
    }
  }
  N = merge_sorted_abscissae(std::move(N));
  std::vector<double> L, R;
  for (double x : N) {
    const auto [l, r] = limits_at(x);
    L.push_back(std::clamp(l, -M, M));
    R.push_back(std::clamp(r, -M, M));
  }
  return from_limits(std::move(N), std::move(L), std::move(R));
}

DerivativeParts SbvProfile::derivative_parts() const {
  DerivativeParts d;
  const auto s = slopes();
  for (size_t i = 0; i + 1 < nodes_.size(); ++i)
    d.slopes.push_back(PieceSlope{nodes_[i], nodes_[i + 1], s[i]});
  d.jumps = jumps();
  return d;
}

double SbvProfile::total_variation(const IntervalSet* G) const {
  double tv = 0.0;
  for (const auto& p : derivative_parts().slopes)
    tv += std::fabs(p.slope) * (G ? G->clip_length(p.a, p.b) : (p.b - p.a));
  for (const auto& j : jumps())
    if (!G || G->contains(j.location)) tv += j.height();
  return tv;
}

IntervalSet SbvProfile::positive_set() const {
  IntervalSet S;
  for (size_t i = 0; i + 1 < nodes_.size(); ++i) {
    const double a = nodes_[i], b = nodes_[i + 1];
    const double p = vr_[i], q = vl_[i + 1];
    if (p > 0.0 && q > 0.0) {
      S.add(a, b);
    } else if (p > 0.0) {
      S.add(a, a + p * (b - a) / (p - q));
    } else if (q > 0.0) {
      S.add(a + p * (b - a) / (p - q), b);
    }
  }
  return S;
}

SbvProfile combine(const SbvProfile& f, const SbvProfile& g, double alpha,
                   double beta) {
  std::vector<double> N = merged_nodes(f, g);
  std::vector<double> L, R;
  for (double x : N) {
    const auto [fl, fr] = f.limits_at(x);
    const auto [gl, gr] = g.limits_at(x);
    L.push_back(alpha * fl + beta * gl);
    R.push_back(alpha * fr + beta * gr);
  }
  return SbvProfile::from_limits(std::move(N), std::move(L), std::move(R));
}

std::vector<double> merged_nodes(const SbvProfile& f, const SbvProfile& g) {
  std::vector<double> xs = f.nodes();
  xs.insert(xs.end(), g.nodes().begin(), g.nodes().end());
  return merge_sorted_abscissae(std::move(xs));
}

namespace {

// Vertical-line decomposition of a simple polygon loop: between consecutive
// vertex abscissae the section boundaries are fixed affine functions of x.
struct SectionData {
  std::vector<double> xs;
  std::vector<char> nonempty;               // per interval
  std::vector<double> lo_a, lo_s, hi_a, hi_s;  // value at left end + slope
};

SectionData polygon_sections(const std::vector<Vec2>& loop) {
  if (loop.size() < 3) throw Error("polygon needs at least 3 vertices");
  std::vector<double> xs;
  xs.reserve(loop.size());
  for (const auto& p : loop) xs.push_back(p.x);
  SectionData S;
  S.xs = merge_sorted_abscissae(std::move(xs));
  const size_t m = S.xs.size() ? S.xs.size() - 1 : 0;
  S.nonempty.assign(m, 0);
  S.lo_a.assign(m, 0.0);
  S.lo_s.assign(m, 0.0);
  S.hi_a.assign(m, 0.0);
  S.hi_s.assign(m, 0.0);
  const size_t ne = loop.size();
  for (size_t j = 0; j < m; ++j) {
    const double xl = S.xs[j], xm = 0.5 * (S.xs[j] + S.xs[j + 1]);
    std::vector<std::array<double, 3>> cr;  // t at midpoint, value at xl, slope
    for (size_t e = 0; e < ne; ++e) {
      const Vec2 a = loop[e], b = loop[(e + 1) % ne];
      if ((a.x - xm) * (b.x - xm) >= 0.0) continue;
      const double sl = (b.y - a.y) / (b.x - a.x);
      cr.push_back({a.y + (xm - a.x) * sl, a.y + (xl - a.x) * sl, sl});
    }
    if (cr.empty()) continue;
    std::sort(cr.begin(), cr.end(),
              [](const auto& u, const auto& v) { return u[0] < v[0]; });
    if (cr.size() != 2)
      throw SectionNotSegment(
          "vertical section is not a single segment near x = " +
          std::to_string(xm));
    S.nonempty[j] = 1;
    S.lo_a[j] = cr[0][1];
    S.lo_s[j] = cr[0][2];
    S.hi_a[j] = cr[1][1];
    S.hi_s[j] = cr[1][2];
  }
  return S;
}

// Builds a profile from per-interval affine data: combiner maps (lo, hi) of
// the section to the profile value.
template <class F>
SbvProfile profile_from_sections(const SectionData& S, F&& value_of) {
  const size_t m = S.nonempty.size();
  if (m == 0) return SbvProfile{};
  std::vector<double> L(m + 1, 0.0), R(m + 1, 0.0);
  for (size_t j = 0; j < m; ++j) {
    if (!S.nonempty[j]) continue;
    const double w = S.xs[j + 1] - S.xs[j];
    R[j] = value_of(S.lo_a[j], S.hi_a[j]);
    L[j + 1] = value_of(S.lo_a[j] + S.lo_s[j] * w, S.hi_a[j] + S.hi_s[j] * w);
  }
  return SbvProfile::from_limits(S.xs, std::move(L), std::move(R));
}

}  // namespace

SbvProfile section_length_profile(const std::vector<Vec2>& loop) {
  const auto S = polygon_sections(loop);
  return profile_from_sections(S,
                               [](double lo, double hi) { return hi - lo; });
}

SbvProfile barycenter_of_polygon_sections(const std::vector<Vec2>& loop,
                                          const SbvProfile& v) {
  const auto S = polygon_sections(loop);
  auto b = profile_from_sections(
      S, [](double lo, double hi) { return 0.5 * (lo + hi); });
  // The supplied section-length profile fixes the node set; merging with a
  // zero multiple imprints its nodes without changing values.
  return combine(b, v, 1.0, 0.0);
}

}  // namespace aniso
