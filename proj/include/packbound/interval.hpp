#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace packbound {

struct domain_error : std::runtime_error {
  explicit domain_error(const std::string& what) : std::runtime_error(what) {}
};

// Closed interval with finite endpoints.  Every operation returns an
// enclosure of the exact image; endpoints are computed in hardware
// doubles and widened outward by a fixed number of ulps (2 for
// arithmetic, 4 for libm transcendentals, which are assumed faithful
// to 1 ulp).  NaN inputs widen to the whole line rather than poison.
struct Interval {
  double lo;
  double hi;

  Interval() : lo(0), hi(0) {}
  explicit Interval(double v) : lo(v), hi(v) { normalize(); }
  Interval(double l, double h) : lo(l), hi(h) { normalize(); }

  void normalize() {
    if (std::isnan(lo) || std::isnan(hi)) {
      lo = -std::numeric_limits<double>::infinity();
      hi = std::numeric_limits<double>::infinity();
    }
  }
  bool finite() const { return std::isfinite(lo) && std::isfinite(hi); }
  bool contains(double v) const { return lo <= v && v <= hi; }
  bool contains(const Interval& o) const { return lo <= o.lo && o.hi <= hi; }
};

namespace detail {

inline double step_down(double v, int ulps) {
  if (!std::isfinite(v)) return v;
  for (int i = 0; i < ulps; ++i)
    v = std::nextafter(v, -std::numeric_limits<double>::infinity());
  return v;
}
inline double step_up(double v, int ulps) {
  if (!std::isfinite(v)) return v;
  for (int i = 0; i < ulps; ++i)
    v = std::nextafter(v, std::numeric_limits<double>::infinity());
  return v;
}

constexpr int kArithUlps = 2;
constexpr int kLibmUlps = 4;

inline Interval widened(double lo, double hi, int ulps) {
  if (std::isnan(lo) || std::isnan(hi)) return Interval(lo, hi);  // -> whole line
  return Interval(step_down(lo, ulps), step_up(hi, ulps));
}

}  // namespace detail

inline Interval hull(const Interval& a, const Interval& b) {
  return Interval(std::min(a.lo, b.lo), std::max(a.hi, b.hi));
}

inline double width(const Interval& a) { return a.hi - a.lo; }
inline double midpoint(const Interval& a) {
  double m = 0.5 * (a.lo + a.hi);
  if (!std::isfinite(m)) m = 0.5 * a.lo + 0.5 * a.hi;
  return std::min(std::max(m, a.lo), a.hi);
}
inline std::pair<Interval, Interval> split(const Interval& a) {
  double m = midpoint(a);
  return {Interval(a.lo, m), Interval(m, a.hi)};
}

inline Interval operator-(const Interval& a) { return Interval(-a.hi, -a.lo); }

inline Interval operator+(const Interval& a, const Interval& b) {
  return detail::widened(a.lo + b.lo, a.hi + b.hi, detail::kArithUlps);
}
inline Interval operator-(const Interval& a, const Interval& b) {
  return detail::widened(a.lo - b.hi, a.hi - b.lo, detail::kArithUlps);
}
inline Interval operator*(const Interval& a, const Interval& b) {
  if ((a.lo == 0 && a.hi == 0) || (b.lo == 0 && b.hi == 0)) return Interval(0.0);
  const double p1 = a.lo * b.lo, p2 = a.lo * b.hi, p3 = a.hi * b.lo, p4 = a.hi * b.hi;
  return detail::widened(std::min(std::min(p1, p2), std::min(p3, p4)),
                         std::max(std::max(p1, p2), std::max(p3, p4)),
                         detail::kArithUlps);
}
inline Interval operator/(const Interval& a, const Interval& b) {
  if (b.lo <= 0 && b.hi >= 0)
    throw domain_error("division by interval containing zero");
  const double q1 = a.lo / b.lo, q2 = a.lo / b.hi, q3 = a.hi / b.lo, q4 = a.hi / b.hi;
  return detail::widened(std::min(std::min(q1, q2), std::min(q3, q4)),
                         std::max(std::max(q1, q2), std::max(q3, q4)),
                         detail::kArithUlps);
}

inline Interval operator+(const Interval& a, double b) { return a + Interval(b); }
inline Interval operator+(double a, const Interval& b) { return Interval(a) + b; }
inline Interval operator-(const Interval& a, double b) { return a - Interval(b); }
inline Interval operator-(double a, const Interval& b) { return Interval(a) - b; }
inline Interval operator*(const Interval& a, double b) { return a * Interval(b); }
inline Interval operator*(double a, const Interval& b) { return Interval(a) * b; }
inline Interval operator/(const Interval& a, double b) { return a / Interval(b); }
inline Interval operator/(double a, const Interval& b) { return Interval(a) / b; }

inline Interval sqr(const Interval& a) {
  double lo, hi;
  if (a.lo >= 0) { lo = a.lo * a.lo; hi = a.hi * a.hi; }
  else if (a.hi <= 0) { lo = a.hi * a.hi; hi = a.lo * a.lo; }
  else { lo = 0; hi = std::max(a.lo * a.lo, a.hi * a.hi); }
  return detail::widened(lo, hi, detail::kArithUlps);
}

inline Interval powi(const Interval& a, int n) {
  if (n == 0) return Interval(1.0);
  if (n < 0) return 1.0 / powi(a, -n);
  Interval r(1.0);
  Interval base = a;
  int e = n;
  while (e) {
    if (e & 1) r = r * base;
    e >>= 1;
    if (e) base = sqr(base);
  }
  return r;
}

// sqrt tolerates slightly negative lower endpoints (clipped to 0).
inline Interval sqrt(const Interval& a) {
  constexpr double tol = 1e-12;
  if (a.hi < -tol) throw domain_error("sqrt of negative interval");
  const double lo = a.lo > 0 ? std::sqrt(a.lo) : 0.0;
  const double hi = a.hi > 0 ? std::sqrt(a.hi) : 0.0;
  Interval r = detail::widened(lo, hi, detail::kArithUlps);
  if (r.lo < 0) r.lo = 0;
  return r;
}

inline Interval atan(const Interval& a) {
  return detail::widened(std::atan(a.lo), std::atan(a.hi), detail::kLibmUlps);
}

namespace detail {
inline double clip_pm1(double v) { return std::min(1.0, std::max(-1.0, v)); }
constexpr double kAcosClipTol = 1e-12;
}  // namespace detail

// acos: decreasing; inputs may exceed [-1,1] by at most the clip
// tolerance (degenerate triangle configurations), larger excursions
// are hard errors.
inline Interval acos(const Interval& a) {
  if (a.lo > 1 + detail::kAcosClipTol || a.hi < -1 - detail::kAcosClipTol)
    throw domain_error("acos argument outside [-1,1]");
  Interval r = detail::widened(std::acos(detail::clip_pm1(a.hi)),
                               std::acos(detail::clip_pm1(a.lo)), detail::kLibmUlps);
  return Interval(std::max(0.0, r.lo), std::min(std::acos(-1.0) * (1 + 1e-15), r.hi));
}

inline Interval asin(const Interval& a) {
  if (a.lo > 1 + detail::kAcosClipTol || a.hi < -1 - detail::kAcosClipTol)
    throw domain_error("asin argument outside [-1,1]");
  return detail::widened(std::asin(detail::clip_pm1(a.lo)),
                         std::asin(detail::clip_pm1(a.hi)), detail::kLibmUlps);
}

// atan2 restricted to y >= 0 (the first quadrant pair of the plane);
// result is an enclosure within [0,pi].  Tolerates x straddling zero,
// which is how dihedral angles stay evaluable on cells where the
// simplex degenerates.
inline Interval atan2q(const Interval& yin, const Interval& x) {
  const double pi_hi = detail::step_up(std::acos(-1.0), 2);
  Interval y(std::max(0.0, yin.lo), std::max(0.0, yin.hi));
  if (y.hi == 0 && x.lo <= 0 && x.hi >= 0) return Interval(0, pi_hi);
  // min at x = x.hi (then y.lo if x.hi > 0 else y.hi); max mirrored.
  const double lo = std::atan2(x.hi > 0 ? y.lo : y.hi, x.hi);
  const double hi = std::atan2(x.lo < 0 ? y.lo : y.hi, x.lo);
  Interval r = detail::widened(lo, hi, detail::kLibmUlps);
  return Interval(std::max(0.0, r.lo), std::min(pi_hi, r.hi));
}

inline Interval min(const Interval& a, const Interval& b) {
  return Interval(std::min(a.lo, b.lo), std::min(a.hi, b.hi));
}
inline Interval max(const Interval& a, const Interval& b) {
  return Interval(std::max(a.lo, b.lo), std::max(a.hi, b.hi));
}

// Three-valued comparisons used by piecewise-defined score functions.
enum class Trilean { kTrue, kFalse, kMaybe };

inline Trilean cmp_ge(const Interval& a, const Interval& b) {
  if (a.lo >= b.hi) return Trilean::kTrue;
  if (a.hi < b.lo) return Trilean::kFalse;
  return Trilean::kMaybe;
}
inline Trilean cmp_ge(double a, double b) {
  return a >= b ? Trilean::kTrue : Trilean::kFalse;
}

// double counterparts so templated code works for point evaluation
inline double sqr(double a) { return a * a; }
inline double powi(double a, int n) { return std::pow(a, n); }
inline double hull(double a, double b) {
  if (a != b) throw domain_error("inconsistent piecewise point evaluation");
  return a;
}
inline double midpoint(double a) { return a; }

using std::acos;
using std::asin;
using std::atan;
using std::sqrt;
inline double atan2q(double y, double x) { return std::atan2(std::max(0.0, y), x); }

}  // namespace packbound
