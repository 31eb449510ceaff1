#include "aniso/aniso_measure.hpp"

#include <algorithm>
#include <cmath>

namespace aniso {

namespace {

void accumulate(VecD& acc, const VecD& v, double w) {
  if (acc.empty()) acc.assign(v.size(), 0.0);
  if (acc.size() != v.size()) throw Error("measure vector dimension mismatch");
  for (size_t i = 0; i < v.size(); ++i) acc[i] += w * v[i];
}

bool nonzero(const VecD& v) {
  for (double c : v)
    if (c != 0.0) return true;
  return false;
}

}  // namespace

int DiscreteVectorMeasure::dim() const {
  int d = 0;
  auto take = [&](const VecD& v) {
    if (v.size() < 2) throw Error("measure vectors need dimension >= 2");
    if (d == 0)
      d = static_cast<int>(v.size());
    else if (d != static_cast<int>(v.size()))
      throw Error("measure vector dimension mismatch");
  };
  for (const auto& a : atoms) take(a.vector);
  for (const auto& de : densities) take(de.vector);
  return d == 0 ? 2 : d;
}

DiscreteVectorMeasure measure_combine(const DiscreteVectorMeasure& mu,
                                      const DiscreteVectorMeasure& nu,
                                      double alpha, double beta) {
  DiscreteVectorMeasure out;
  // Atoms merged by location.
  std::vector<std::pair<double, VecD>> acc;
  auto add_atom = [&](double loc, const VecD& v, double w) {
    for (auto& [l, vec] : acc)
      if (std::fabs(l - loc) <= kMergeTol) {
        accumulate(vec, v, w);
        return;
      }
    VecD vec;
    accumulate(vec, v, w);
    acc.emplace_back(loc, std::move(vec));
  };
  for (const auto& a : mu.atoms) add_atom(a.location, a.vector, alpha);
  for (const auto& a : nu.atoms) add_atom(a.location, a.vector, beta);
  std::sort(acc.begin(), acc.end(),
            [](const auto& p, const auto& q) { return p.first < q.first; });
  for (auto& [l, vec] : acc)
    if (nonzero(vec)) out.atoms.push_back({l, std::move(vec)});
  // Densities overlaid on the union of breakpoints.
  std::vector<double> cuts;
  for (const auto& d : mu.densities) {
    cuts.push_back(d.a);
    cuts.push_back(d.b);
  }
  for (const auto& d : nu.densities) {
    cuts.push_back(d.a);
    cuts.push_back(d.b);
  }
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end(),
                         [](double x, double y) { return y - x <= kMergeTol; }),
             cuts.end());
  auto value_on = [](const DiscreteVectorMeasure& m, double x, VecD& v,
                     double w) {
    for (const auto& d : m.densities)
      if (x > d.a && x < d.b) accumulate(v, d.vector, w);
  };
  for (size_t i = 0; i + 1 < cuts.size(); ++i) {
    const double mid = 0.5 * (cuts[i] + cuts[i + 1]);
    VecD v;
    value_on(mu, mid, v, alpha);
    value_on(nu, mid, v, beta);
    if (!v.empty() && nonzero(v))
      out.densities.push_back({cuts[i], cuts[i + 1], std::move(v)});
  }
  return out;
}

double total_variation(const DiscreteVectorMeasure& mu, const IntervalSet& G) {
  double tv = 0.0;
  for (const auto& a : mu.atoms)
    if (G.contains(a.location)) tv += norm(a.vector);
  for (const auto& d : mu.densities)
    tv += norm(d.vector) * G.clip_length(d.a, d.b);
  return tv;
}

double total_variation(const DiscreteVectorMeasure& mu) {
  return total_variation(mu, IntervalSet::whole_line());
}

double anisotropic_total_variation(const DiscreteVectorMeasure& mu,
                                   const ConvexBody& K, const IntervalSet& G) {
  double tv = 0.0;
  for (const auto& a : mu.atoms)
    if (G.contains(a.location)) tv += support_eval(K, a.vector);
  for (const auto& d : mu.densities)
    tv += support_eval(K, d.vector) * G.clip_length(d.a, d.b);
  return tv;
}

double anisotropic_total_variation(const DiscreteVectorMeasure& mu,
                                   const ConvexBody& K) {
  return anisotropic_total_variation(mu, K, IntervalSet::whole_line());
}

double sup_partition_oracle(const DiscreteVectorMeasure& mu,
                            const ConvexBody& K, const IntervalSet& G,
                            int depth) {
  if (depth < 0) throw Error("partition depth must be nonnegative");
  double total = 0.0;
  const long cells = 1L << std::min(depth, 24);
  for (const auto& part : G.parts()) {
    const double a = part.a, w = part.length();
    if (w <= 0.0) continue;
    for (long c = 0; c < cells; ++c) {
      const double lo = a + w * static_cast<double>(c) / cells;
      const double hi = a + w * static_cast<double>(c + 1) / cells;
      VecD cell;
      for (const auto& atom : mu.atoms) {
        // Half-open cells, closed at the right end of the part.
        const bool in = atom.location >= lo &&
                        (atom.location < hi ||
                         (c == cells - 1 && atom.location <= hi));
        if (in) accumulate(cell, atom.vector, 1.0);
      }
      for (const auto& d : mu.densities) {
        const double ov = std::min(hi, d.b) - std::max(lo, d.a);
        if (ov > 0.0) accumulate(cell, d.vector, ov);
      }
      if (!cell.empty() && nonzero(cell)) total += support_eval(K, cell);
    }
  }
  return total;
}

ParallelogramSides parallelogram_defect(const DiscreteVectorMeasure& mu,
                                        const DiscreteVectorMeasure& nu,
                                        const ConvexBody& K,
                                        const IntervalSet& G) {
  ParallelogramSides s;
  s.lhs = 2.0 * anisotropic_total_variation(mu, K, G);
  s.rhs =
      anisotropic_total_variation(measure_combine(mu, nu, 1.0, 1.0), K, G) +
      anisotropic_total_variation(measure_combine(mu, nu, 1.0, -1.0), K, G);
  return s;
}

bool equality_cone_check(Vec2 h, Vec2 g, const ConvexBody& K, double tol) {
  if (g.norm() <= kMergeTol) return true;
  return is_additive(K, h + g, h - g, tol).additive;
}

}  // namespace aniso
