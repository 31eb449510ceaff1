#include "aniso/base.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>

namespace aniso {

double default_tol() {
  static const double tol = [] {
    if (const char* env = std::getenv("ANISO_TOL")) {
      char* end = nullptr;
      double v = std::strtod(env, &end);
      if (end != env && v > 0.0 && std::isfinite(v)) return v;
    }
    return 1e-9;
  }();
  return tol;
}

namespace {
constexpr double kHuge = std::numeric_limits<double>::max() / 4;
}

void IntervalSet::add(double a, double b) {
  if (b < a) std::swap(a, b);
  Interval nv{a, b};
  std::vector<Interval> merged;
  for (const Interval& p : parts_) {
    if (p.b < nv.a || p.a > nv.b) {
      merged.push_back(p);
    } else {
      nv.a = std::min(nv.a, p.a);
      nv.b = std::max(nv.b, p.b);
    }
  }
  merged.push_back(nv);
  std::sort(merged.begin(), merged.end(),
            [](const Interval& l, const Interval& r) { return l.a < r.a; });
  parts_ = std::move(merged);
}

bool IntervalSet::contains(double x) const {
  for (const Interval& p : parts_)
    if (p.contains(x)) return true;
  return false;
}

double IntervalSet::clip_length(double a, double b) const {
  if (b < a) std::swap(a, b);
  double total = 0.0;
  for (const Interval& p : parts_) {
    double lo = std::max(a, p.a), hi = std::min(b, p.b);
    if (hi > lo) total += hi - lo;
  }
  return total;
}

IntervalSet IntervalSet::whole_line() { return IntervalSet(-kHuge, kHuge); }

bool IntervalSet::is_whole_line() const {
  return parts_.size() == 1 && parts_[0].a <= -kHuge && parts_[0].b >= kHuge;
}

}  // namespace aniso
