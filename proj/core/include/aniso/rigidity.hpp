#pragma once
// Equality-case checking for the anisotropic Steiner inequality and the
// normal-membership criterion deciding whether anisotropic rigidity is
// equivalent to the Euclidean one for a given (v, body) pair.

#include <optional>
#include <string>
#include <vector>

#include "aniso/convex_body.hpp"
#include "aniso/perimeter.hpp"
#include "aniso/sbv1d.hpp"

namespace aniso {

struct RigidityReport {
  // Equality-case conditions for the set W[v,b] under inspection.
  bool condition_sections_ok = true;
  bool condition_cone_ok = true;
  std::vector<Interval> cone_failures;  // affine pieces failing the cone test
  bool condition_jump_ok = true;
  std::vector<double> jump_failures;  // node locations with too-large [b]
  // No Cantor derivatives exist in the piecewise-linear class; reported as a
  // tag rather than a bare "true" to avoid overclaiming.
  std::string cantor_condition = "vacuous-SBV";

  bool r1_ok = true;
  bool r2_ok = true;
  std::vector<Vec2> failing_normals;

  std::string verdict;  // "Equivalent" | "NotGuaranteed"
  std::optional<VDistributedSet> witness;
  double gap = 0.0;  // steiner_gap of the inspected set
};

// Conditions i-iii of the equality characterization for S = W[v,b], plus the
// measured gap. Fields r1_ok/r2_ok/verdict are left at defaults.
RigidityReport check_equality_membership(const VDistributedSet& S,
                                         const ConvexBody& Ks);

struct NormalCheck {
  bool r1_ok = true;
  bool r2_ok = true;
  std::vector<Vec2> failing_normals;
};

// Membership of every attained normal of the upper boundary of F[v] in the
// closure of the normal set of Ks. Jump nodes and kinks are finitely many
// points and are excluded.
NormalCheck check_R1_R2(const SbvProfile& v, const ConvexBody& Ks);

// For a failing piece, searches a sign-symmetric slope grid for a barycenter
// perturbation keeping the perimeter gap at zero. The returned set has
// nonconstant b, certifying that equality does not force a vertical
// translate of F[v]. Empty when the grid search finds nothing.
std::optional<VDistributedSet> construct_nonrigid_witness(
    const SbvProfile& v, const ConvexBody& Ks);

// Full report: equality conditions for W[v, b] (b = 0 when omitted),
// R1/R2, verdict, and a witness when the verdict is NotGuaranteed.
RigidityReport verdict(const SbvProfile& v, const ConvexBody& Ks,
                       const SbvProfile* b = nullptr);

}  // namespace aniso
