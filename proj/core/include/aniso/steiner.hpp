#pragma once
// Steiner symmetrization about the horizontal axis and the model sets F[v].

#include "aniso/convex_body.hpp"
#include "aniso/perimeter.hpp"
#include "aniso/sbv1d.hpp"

namespace aniso {

struct SymmetralResult {
  ConvexBody body;             // symmetric about {q = 0}
  SbvProfile section_width;    // chord-length profile used (sampled for
                               // ellipses, exact for polytopes)
};

// Replaces each vertical section with the centered segment of equal length.
// Accepts bodies constructed with the origin check waived; the result may
// touch the origin.
SymmetralResult steiner_symmetrize(const ConvexBody& K);

// The set {|t| < v(x)/2}, i.e. W[v, 0].
VDistributedSet build_F_of_v(const SbvProfile& v);

// phi_K(p, q) = phi_K(p, -q) over sampled directions.
bool support_symmetry_check(const ConvexBody& K, int samples = 360,
                            double tol = default_tol());

}  // namespace aniso
