#pragma once
// Anisotropic perimeter of planar sets by two independent routes: the exact
// edge sum over polygon boundaries (the oracle), and the profile-pair
// decomposition for W[v,b] = {(x,t): |t - b(x)| < v(x)/2}.

#include <vector>

#include "aniso/convex_body.hpp"
#include "aniso/sbv1d.hpp"

namespace aniso {

// A set with prescribed vertical section lengths v and barycenters b.
// Invariant: b vanishes outside {v > 0}; make_v_distributed enforces it,
// the perimeter routines reject violating pairs.
struct VDistributedSet {
  SbvProfile v;
  SbvProfile b;
};

VDistributedSet make_v_distributed(SbvProfile v, SbvProfile b);

// Disjoint simple polygon loops, counterclockwise.
struct PolygonSet {
  std::vector<std::vector<Vec2>> loops;
  double area() const;
};

struct PerimeterBreakdown {
  double ac_part = 0.0;
  double jump_v_minus = 0.0;  // v-jump walls weighted by the -nu_v direction
  double jump_v_plus = 0.0;   // v-jump walls weighted by the +nu_v direction
  double jump_b_only = 0.0;   // walls at jumps of b where v is continuous
  double boundary_zero_part = 0.0;  // walls where the section length hits 0
  double total = 0.0;
};

// Exact boundary loops of W[v,b]. Lobes split where consecutive sections are
// disjoint or touch in a single point.
PolygonSet polygonize(const VDistributedSet& S);

// Edge sum of phi_K(outward normal) * length over boundary edges clipped to
// B x R. This is the independent oracle for the formula routes.
double polygon_perimeter(const PolygonSet& E, const ConvexBody& K,
                         const IntervalSet& B);
double polygon_perimeter(const PolygonSet& E, const ConvexBody& K);

// Perimeter of {t < u(x)} (subgraph) and {t > u(x)} (epigraph) in B x R.
// B must be bounded.
double subgraph_perimeter(const SbvProfile& u, const ConvexBody& K,
                          const IntervalSet& B);
double epigraph_perimeter(const SbvProfile& u, const ConvexBody& K,
                          const IntervalSet& B);

PerimeterBreakdown perimeter_from_vb(const VDistributedSet& S,
                                     const ConvexBody& K,
                                     const IntervalSet& B);
PerimeterBreakdown perimeter_from_vb(const VDistributedSet& S,
                                     const ConvexBody& K);

PerimeterBreakdown perimeter_F_of_v(const SbvProfile& v, const ConvexBody& K,
                                    const IntervalSet& B);
PerimeterBreakdown perimeter_F_of_v(const SbvProfile& v, const ConvexBody& K);

// perimeter_from_vb(S) - perimeter_F_of_v(S.v); never negative beyond
// tolerance. Throws NotASymmetral when Ks is not symmetric about the
// horizontal axis.
double steiner_gap(const VDistributedSet& S, const ConvexBody& Ks,
                   const IntervalSet& B);
double steiner_gap(const VDistributedSet& S, const ConvexBody& Ks);

}  // namespace aniso
