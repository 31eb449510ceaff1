#include "aniso/perimeter.hpp"

#include <algorithm>
#include <cmath>
#include <optional>

#include "aniso/steiner.hpp"

namespace aniso {

namespace {

std::vector<double> sorted_merged(std::vector<double> xs) {
  std::sort(xs.begin(), xs.end());
  std::vector<double> out;
  for (double x : xs)
    if (out.empty() || x - out.back() > kMergeTol) out.push_back(x);
  return out;
}

bool left_side_in(const IntervalSet& P, double x) {
  for (const auto& iv : P.parts())
    if (x - iv.a > kMergeTol && x - iv.b <= kMergeTol) return true;
  return false;
}

bool right_side_in(const IntervalSet& P, double x) {
  for (const auto& iv : P.parts())
    if (x - iv.a >= -kMergeTol && iv.b - x > kMergeTol) return true;
  return false;
}

// b with its one-sided limits zeroed outside the open set P.
SbvProfile restrict_profile(const SbvProfile& b, const IntervalSet& P) {
  std::vector<double> xs = b.nodes();
  for (const auto& iv : P.parts()) {
    xs.push_back(iv.a);
    xs.push_back(iv.b);
  }
  xs = sorted_merged(std::move(xs));
  std::vector<double> L, R;
  for (double x : xs) {
    const auto [bl, br] = b.limits_at(x);
    L.push_back(left_side_in(P, x) ? bl : 0.0);
    R.push_back(right_side_in(P, x) ? br : 0.0);
  }
  return SbvProfile::from_limits(std::move(xs), std::move(L), std::move(R));
}

bool b_respects_support(const SbvProfile& b, const SbvProfile& v) {
  if (b.is_zero()) return true;
  const SbvProfile r = restrict_profile(b, v.positive_set());
  return combine(b, r, 1.0, -1.0).max_abs() <= 1e-9;
}

void require_valid(const VDistributedSet& S) {
  if (!S.v.is_nonnegative())
    throw Error("section-length profile v must be nonnegative");
  if (!b_respects_support(S.b, S.v))
    throw ProfileMismatch("b is nonzero outside the support of v");
}

}  // namespace

VDistributedSet make_v_distributed(SbvProfile v, SbvProfile b) {
  if (!v.is_nonnegative())
    throw Error("section-length profile v must be nonnegative");
  SbvProfile bz =
      b.is_zero() ? SbvProfile{} : restrict_profile(b, v.positive_set());
  return VDistributedSet{std::move(v), std::move(bz)};
}

double PolygonSet::area() const {
  double s = 0.0;
  for (const auto& loop : loops) {
    const size_t n = loop.size();
    for (size_t i = 0; i < n; ++i) s += loop[i].cross(loop[(i + 1) % n]);
  }
  return 0.5 * s;
}

PolygonSet polygonize(const VDistributedSet& S) {
  require_valid(S);
  PolygonSet out;
  if (S.v.is_zero()) return out;
  const std::vector<double> X = merged_nodes(S.v, S.b);

  struct Chain {
    std::vector<Vec2> lower, upper;
  };
  std::optional<Chain> cur;

  auto emit = [&](Chain& c) {
    std::vector<Vec2> pts = std::move(c.lower);
    pts.insert(pts.end(), c.upper.rbegin(), c.upper.rend());
    std::vector<Vec2> loop;
    for (const Vec2& p : pts)
      if (loop.empty() || (p - loop.back()).norm() > 1e-14) loop.push_back(p);
    while (loop.size() > 1 && (loop.front() - loop.back()).norm() <= 1e-14)
      loop.pop_back();
    if (loop.size() >= 3) out.loops.push_back(std::move(loop));
  };

  auto open_at = [&](double x, double vv, double bb) {
    cur = Chain{};
    cur->lower.push_back({x, bb - 0.5 * vv});
    cur->upper.push_back({x, bb + 0.5 * vv});
  };
  auto close_at = [&](double x, double vv, double bb) {
    cur->lower.push_back({x, bb - 0.5 * vv});
    cur->upper.push_back({x, bb + 0.5 * vv});
    emit(*cur);
    cur.reset();
  };

  for (size_t j = 0; j + 1 < X.size(); ++j) {
    const double xl = X[j], xr = X[j + 1];
    const auto [vl, vr] = S.v.limits_at(xl);
    const auto [bl, br] = S.b.limits_at(xl);
    const bool active = S.v.limits_at(xl).second > kMergeTol ||
                        S.v.limits_at(xr).first > kMergeTol;
    if (!active) {
      if (cur) close_at(xl, vl, bl);
      continue;
    }
    if (!cur) {
      open_at(xl, vr, br);
      continue;
    }
    // Interior node of an active run: decide whether the sections on the
    // two sides overlap.
    const double lo_l = bl - 0.5 * vl, hi_l = bl + 0.5 * vl;
    const double lo_r = br - 0.5 * vr, hi_r = br + 0.5 * vr;
    const double overlap = std::min(hi_l, hi_r) - std::max(lo_l, lo_r);
    if (overlap <= kMergeTol) {
      close_at(xl, vl, bl);
      open_at(xl, vr, br);
    } else {
      cur->lower.push_back({xl, lo_l});
      if (lo_r != lo_l) cur->lower.push_back({xl, lo_r});
      cur->upper.push_back({xl, hi_l});
      if (hi_r != hi_l) cur->upper.push_back({xl, hi_r});
    }
  }
  if (cur) {
    const double xe = X.back();
    close_at(xe, S.v.limits_at(xe).first, S.b.limits_at(xe).first);
  }
  return out;
}

double polygon_perimeter(const PolygonSet& E, const ConvexBody& K,
                         const IntervalSet& B) {
  if (K.dim() != 2)
    throw DimensionUnsupported("polygon_perimeter(): planar bodies only");
  double P = 0.0;
  for (const auto& loop : E.loops) {
    const size_t n = loop.size();
    for (size_t i = 0; i < n; ++i) {
      const Vec2 a = loop[i], b = loop[(i + 1) % n];
      const Vec2 d = b - a;
      const double len = d.norm();
      if (len <= 1e-15) continue;
      double clipped;
      if (d.x == 0.0) {
        clipped = B.contains(a.x) ? len : 0.0;
      } else {
        const double xlo = std::min(a.x, b.x), xhi = std::max(a.x, b.x);
        clipped = len * B.clip_length(xlo, xhi) / (xhi - xlo);
      }
      if (clipped <= 0.0) continue;
      P += support_eval(K, Vec2{d.y, -d.x} / len) * clipped;
    }
  }
  return P;
}

double polygon_perimeter(const PolygonSet& E, const ConvexBody& K) {
  return polygon_perimeter(E, K, IntervalSet::whole_line());
}

namespace {

double graph_perimeter(const SbvProfile& u, const ConvexBody& K,
                       const IntervalSet& B, bool epigraph) {
  if (B.is_whole_line())
    throw Error("graph perimeter needs a bounded window");
  double Blen = 0.0;
  for (const auto& iv : B.parts()) Blen += iv.length();
  double P = 0.0, covered = 0.0;
  for (const auto& p : u.derivative_parts().slopes) {
    const double len = B.clip_length(p.a, p.b);
    if (len <= 0.0) continue;
    covered += len;
    const Vec2 dir = epigraph ? Vec2{p.slope, -1.0} : Vec2{-p.slope, 1.0};
    P += support_eval(K, dir) * len;
  }
  const Vec2 flat = epigraph ? Vec2{0.0, -1.0} : Vec2{0.0, 1.0};
  P += support_eval(K, flat) * std::max(0.0, Blen - covered);
  for (const auto& j : u.jumps()) {
    if (!B.contains(j.location)) continue;
    const double nu = static_cast<double>(j.direction);
    const Vec2 wall = epigraph ? Vec2{nu, 0.0} : Vec2{-nu, 0.0};
    P += j.height() * support_eval(K, wall);
  }
  return P;
}

}  // namespace

double subgraph_perimeter(const SbvProfile& u, const ConvexBody& K,
                          const IntervalSet& B) {
  return graph_perimeter(u, K, B, false);
}

double epigraph_perimeter(const SbvProfile& u, const ConvexBody& K,
                          const IntervalSet& B) {
  return graph_perimeter(u, K, B, true);
}

PerimeterBreakdown perimeter_from_vb(const VDistributedSet& S,
                                     const ConvexBody& K,
                                     const IntervalSet& B) {
  if (K.dim() != 2)
    throw DimensionUnsupported("perimeter_from_vb(): planar bodies only");
  require_valid(S);
  PerimeterBreakdown R;
  if (S.v.is_zero()) return R;
  const IntervalSet pos = S.v.positive_set();
  const std::vector<double> X = merged_nodes(S.v, S.b);

  for (size_t j = 0; j + 1 < X.size(); ++j) {
    const double xl = X[j], xr = X[j + 1];
    double len = 0.0;
    for (const auto& iv : pos.parts()) {
      const double lo = std::max(iv.a, xl), hi = std::min(iv.b, xr);
      if (hi > lo) len += B.clip_length(lo, hi);
    }
    if (len <= 0.0) continue;
    const double sv =
        (S.v.limits_at(xr).first - S.v.limits_at(xl).second) / (xr - xl);
    const double sb =
        (S.b.limits_at(xr).first - S.b.limits_at(xl).second) / (xr - xl);
    // boundary of {u1 < t < u2} with u1 = b - v/2, u2 = b + v/2
    R.ac_part += (support_eval(K, Vec2{sb - 0.5 * sv, -1.0}) +
                  support_eval(K, Vec2{-(sb + 0.5 * sv), 1.0})) *
                 len;
  }

  for (double x : X) {
    if (!B.contains(x)) continue;
    const auto [vl, vr] = S.v.limits_at(x);
    const auto [bl, br] = S.b.limits_at(x);
    if (vl == vr && bl == br) continue;
    const double v_lo = std::min(vl, vr), v_hi = std::max(vl, vr);
    const double jv = v_hi - v_lo;
    const double jb = std::fabs(br - bl);
    if (v_lo <= kMergeTol) {
      // The section length vanishes on one side: a full wall of height v_hi.
      if (jv > kMergeTol) {
        const double nu = vr > vl ? 1.0 : -1.0;
        R.boundary_zero_part += v_hi * support_eval(K, Vec2{-nu, 0.0});
      }
      continue;
    }
    if (jv > 0.0) {
      const double nu = vr > vl ? 1.0 : -1.0;
      const double t1 =
          std::min(v_hi, 0.5 * jv + jb + std::max(0.5 * jv - jb, 0.0));
      const double t2 = std::min(v_lo, std::max(0.0, jb - 0.5 * jv));
      R.jump_v_minus += t1 * support_eval(K, Vec2{-nu, 0.0});
      R.jump_v_plus += t2 * support_eval(K, Vec2{nu, 0.0});
    } else {
      const double nub = br > bl ? 1.0 : -1.0;
      const double width = 0.5 * (vl + vr);
      R.jump_b_only += std::min(jb, width) *
                       (support_eval(K, Vec2{-nub, 0.0}) +
                        support_eval(K, Vec2{nub, 0.0}));
    }
  }

  R.total = R.ac_part + R.jump_v_minus + R.jump_v_plus + R.jump_b_only +
            R.boundary_zero_part;
  return R;
}

PerimeterBreakdown perimeter_from_vb(const VDistributedSet& S,
                                     const ConvexBody& K) {
  return perimeter_from_vb(S, K, IntervalSet::whole_line());
}

PerimeterBreakdown perimeter_F_of_v(const SbvProfile& v, const ConvexBody& K,
                                    const IntervalSet& B) {
  return perimeter_from_vb(VDistributedSet{v, SbvProfile{}}, K, B);
}

PerimeterBreakdown perimeter_F_of_v(const SbvProfile& v, const ConvexBody& K) {
  return perimeter_F_of_v(v, K, IntervalSet::whole_line());
}

double steiner_gap(const VDistributedSet& S, const ConvexBody& Ks,
                   const IntervalSet& B) {
  if (!support_symmetry_check(Ks))
    throw NotASymmetral("steiner_gap: body is not symmetric about {q = 0}");
  return perimeter_from_vb(S, Ks, B).total -
         perimeter_F_of_v(S.v, Ks, B).total;
}

double steiner_gap(const VDistributedSet& S, const ConvexBody& Ks) {
  return steiner_gap(S, Ks, IntervalSet::whole_line());
}

}  // namespace aniso
