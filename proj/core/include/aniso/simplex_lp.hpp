#pragma once
// Minimal dense two-phase simplex. Only used by the d >= 3 polytope paths
// (Minkowski-functional ray shoot and origin-interior probing); planar code
// never touches this.

#include <optional>
#include <vector>

namespace aniso {

// Maximize c.z subject to A z = b, z >= 0. A is row-major, m rows of n
// entries. Returns the optimal z, or nullopt when infeasible or unbounded.
std::optional<std::vector<double>> simplex_maximize(
    const std::vector<std::vector<double>>& A, const std::vector<double>& b,
    const std::vector<double>& c);

}  // namespace aniso
