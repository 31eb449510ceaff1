#pragma once
// Anisotropic total variation |mu|_K of discrete vector measures on the line:
// finitely many atoms plus piecewise-constant densities.

#include <vector>

#include "aniso/base.hpp"
#include "aniso/convex_body.hpp"

namespace aniso {

struct DiscreteVectorMeasure {
  struct Atom {
    double location = 0.0;
    VecD vector;
  };
  struct Density {
    double a = 0.0, b = 0.0;  // interval (a, b), non-overlapping
    VecD vector;
  };
  std::vector<Atom> atoms;
  std::vector<Density> densities;

  int dim() const;  // common coordinate dimension; throws on mismatch
};

// alpha*mu + beta*nu with atoms merged by location and densities overlaid.
DiscreteVectorMeasure measure_combine(const DiscreteVectorMeasure& mu,
                                      const DiscreteVectorMeasure& nu,
                                      double alpha, double beta);

// Euclidean total variation |mu|(G).
double total_variation(const DiscreteVectorMeasure& mu, const IntervalSet& G);
double total_variation(const DiscreteVectorMeasure& mu);

// |mu|_K(G): atoms weighted by phi_K, densities by phi_K of the constant
// vector times interval length.
double anisotropic_total_variation(const DiscreteVectorMeasure& mu,
                                   const ConvexBody& K, const IntervalSet& G);
double anisotropic_total_variation(const DiscreteVectorMeasure& mu,
                                   const ConvexBody& K);

// Sum of phi_K(mu(cell)) over the uniform dyadic partition of each part of G
// at the given depth. Nondecreasing in depth by subadditivity; equals
// |mu|_K(G) once the cells separate all atoms and the measure has no
// absolutely continuous part with varying sign pattern inside a cell.
double sup_partition_oracle(const DiscreteVectorMeasure& mu,
                            const ConvexBody& K, const IntervalSet& G,
                            int depth = 12);

struct ParallelogramSides {
  double lhs = 0.0;  // 2 |mu|_K(G)
  double rhs = 0.0;  // |mu+nu|_K(G) + |mu-nu|_K(G)
};
ParallelogramSides parallelogram_defect(const DiscreteVectorMeasure& mu,
                                        const DiscreteVectorMeasure& nu,
                                        const ConvexBody& K,
                                        const IntervalSet& G);

// Whether the segment {h + t g : t in [-1, 1]} lies in a single support cone
// of K; equivalent to additivity of the support values of h+g and h-g.
bool equality_cone_check(Vec2 h, Vec2 g, const ConvexBody& K,
                         double tol = default_tol());

}  // namespace aniso
