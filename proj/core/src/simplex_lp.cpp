#include "aniso/simplex_lp.hpp"

#include <cmath>
#include <cstddef>

namespace aniso {

namespace {

constexpr double kEps = 1e-11;

// Tableau rows: m constraint rows plus one objective row (maximization,
// objective row holds reduced costs of -c form). Bland's rule throughout, so
// cycling cannot occur.
struct Tableau {
  size_t m, n;  // constraints, structural+artificial columns
  std::vector<std::vector<double>> t;  // (m+1) x (n+1), last col = rhs
  std::vector<size_t> basis;           // basic column per row

  void pivot(size_t pr, size_t pc) {
    double piv = t[pr][pc];
    for (double& v : t[pr]) v /= piv;
    for (size_t r = 0; r <= m; ++r) {
      if (r == pr) continue;
      double f = t[r][pc];
      if (f == 0.0) continue;
      for (size_t cI = 0; cI <= n; ++cI) t[r][cI] -= f * t[pr][cI];
    }
    basis[pr] = pc;
  }

  // Returns false when unbounded.
  bool run() {
    for (;;) {
      size_t pc = n;
      for (size_t c = 0; c < n; ++c) {
        if (t[m][c] < -kEps) {  // entering column, Bland: first eligible
          pc = c;
          break;
        }
      }
      if (pc == n) return true;  // optimal
      size_t pr = m;
      double best = 0.0;
      for (size_t r = 0; r < m; ++r) {
        if (t[r][pc] > kEps) {
          double ratio = t[r][n] / t[r][pc];
          if (pr == m || ratio < best - kEps ||
              (ratio < best + kEps && basis[r] < basis[pr])) {
            pr = r;
            best = ratio;
          }
        }
      }
      if (pr == m) return false;  // unbounded
      pivot(pr, pc);
    }
  }
};

}  // namespace

std::optional<std::vector<double>> simplex_maximize(
    const std::vector<std::vector<double>>& A, const std::vector<double>& b,
    const std::vector<double>& c) {
  size_t m = A.size();
  size_t ns = c.size();
  Tableau tb;
  tb.m = m;
  tb.n = ns + m;  // structural + one artificial per row
  tb.t.assign(m + 1, std::vector<double>(tb.n + 1, 0.0));
  tb.basis.assign(m, 0);

  for (size_t r = 0; r < m; ++r) {
    double sgn = b[r] < 0.0 ? -1.0 : 1.0;
    for (size_t cI = 0; cI < ns; ++cI) tb.t[r][cI] = sgn * A[r][cI];
    tb.t[r][ns + r] = 1.0;
    tb.t[r][tb.n] = sgn * b[r];
    tb.basis[r] = ns + r;
  }
  // Phase 1: minimize sum of artificials == maximize -(sum).
  for (size_t cI = 0; cI <= tb.n; ++cI) {
    double s = 0.0;
    for (size_t r = 0; r < m; ++r) s += tb.t[r][cI];
    tb.t[m][cI] = (cI >= ns && cI < tb.n) ? 0.0 : -s;
  }
  if (!tb.run()) return std::nullopt;
  double phase1 = -tb.t[m][tb.n];
  if (std::fabs(phase1) > 1e-8) return std::nullopt;  // infeasible

  // Drive any artificial still in the basis out, or drop its row if the row
  // is redundant.
  for (size_t r = 0; r < m; ++r) {
    if (tb.basis[r] < ns) continue;
    size_t pc = ns;
    for (size_t cI = 0; cI < ns; ++cI) {
      if (std::fabs(tb.t[r][cI]) > kEps) {
        pc = cI;
        break;
      }
    }
    if (pc < ns) tb.pivot(r, pc);
    // else: redundant row; its artificial stays basic at value 0, harmless
    // because artificial columns are frozen below.
  }
  // Freeze artificial columns.
  for (size_t r = 0; r <= m; ++r)
    for (size_t cI = ns; cI < tb.n; ++cI) tb.t[r][cI] = 0.0;

  // Phase 2 objective row: reduced costs for c.
  for (size_t cI = 0; cI <= tb.n; ++cI)
    tb.t[m][cI] = (cI < ns) ? -c[cI] : 0.0;
  for (size_t r = 0; r < m; ++r) {
    if (tb.basis[r] >= ns) continue;
    double cb = c[tb.basis[r]];
    if (cb == 0.0) continue;
    for (size_t cI = 0; cI <= tb.n; ++cI) tb.t[m][cI] += cb * tb.t[r][cI];
  }
  if (!tb.run()) return std::nullopt;  // unbounded

  std::vector<double> z(ns, 0.0);
  for (size_t r = 0; r < m; ++r)
    if (tb.basis[r] < ns) z[tb.basis[r]] = tb.t[r][tb.n];
  return z;
}

}  // namespace aniso
