#pragma once

#include <array>

#include "packbound/interval.hpp"

namespace packbound {

// Forward-mode interval gradient: value enclosure plus enclosures of
// the partial derivatives with respect to up to kGradVars box
// variables.  Used for mean-value forms, monotonicity checks and the
// finite-difference cross-checks of the prover.
inline constexpr int kGradVars = 8;

struct Grad {
  Interval v;
  std::array<Interval, kGradVars> d;

  Grad() : v(0.0) { d.fill(Interval(0.0)); }
  explicit Grad(const Interval& value) : v(value) { d.fill(Interval(0.0)); }
  explicit Grad(double value) : v(value) { d.fill(Interval(0.0)); }
  static Grad var(const Interval& value, int i) {
    Grad g(value);
    g.d[i] = Interval(1.0);
    return g;
  }
};

inline Grad operator-(const Grad& a) {
  Grad r(-a.v);
  for (int i = 0; i < kGradVars; ++i) r.d[i] = -a.d[i];
  return r;
}
inline Grad operator+(const Grad& a, const Grad& b) {
  Grad r(a.v + b.v);
  for (int i = 0; i < kGradVars; ++i) r.d[i] = a.d[i] + b.d[i];
  return r;
}
inline Grad operator-(const Grad& a, const Grad& b) {
  Grad r(a.v - b.v);
  for (int i = 0; i < kGradVars; ++i) r.d[i] = a.d[i] - b.d[i];
  return r;
}
inline Grad operator*(const Grad& a, const Grad& b) {
  Grad r(a.v * b.v);
  for (int i = 0; i < kGradVars; ++i) r.d[i] = a.d[i] * b.v + a.v * b.d[i];
  return r;
}
inline Grad operator/(const Grad& a, const Grad& b) {
  Grad r(a.v / b.v);
  const Interval b2 = sqr(b.v);
  for (int i = 0; i < kGradVars; ++i)
    r.d[i] = (a.d[i] * b.v - a.v * b.d[i]) / b2;
  return r;
}

inline Grad operator+(const Grad& a, double b) { return a + Grad(b); }
inline Grad operator+(double a, const Grad& b) { return Grad(a) + b; }
inline Grad operator-(const Grad& a, double b) { return a - Grad(b); }
inline Grad operator-(double a, const Grad& b) { return Grad(a) - b; }
inline Grad operator*(const Grad& a, double b) { return a * Grad(b); }
inline Grad operator*(double a, const Grad& b) { return Grad(a) * b; }
inline Grad operator/(const Grad& a, double b) { return a / Grad(b); }
inline Grad operator/(double a, const Grad& b) { return Grad(a) / b; }

template <class F>
inline Grad chain(const Grad& a, const Interval& fv, F dfdx) {
  Grad r(fv);
  const Interval df = dfdx();
  for (int i = 0; i < kGradVars; ++i) r.d[i] = df * a.d[i];
  return r;
}

inline Grad sqr(const Grad& a) {
  return chain(a, sqr(a.v), [&] { return 2.0 * a.v; });
}
inline Grad sqrt(const Grad& a) {
  const Interval s = sqrt(a.v);
  return chain(a, s, [&] { return 0.5 / max(s, Interval(1e-300)); });
}
inline Grad powi(const Grad& a, int n) {
  return chain(a, powi(a.v, n), [&] { return double(n) * powi(a.v, n - 1); });
}
inline Grad atan(const Grad& a) {
  return chain(a, atan(a.v), [&] { return 1.0 / (1.0 + sqr(a.v)); });
}
inline Grad acos(const Grad& a) {
  const Interval one_m = 1.0 - sqr(a.v);
  return chain(a, acos(a.v), [&] { return -1.0 / sqrt(max(one_m, Interval(1e-300))); });
}
inline Grad asin(const Grad& a) {
  const Interval one_m = 1.0 - sqr(a.v);
  return chain(a, asin(a.v), [&] { return 1.0 / sqrt(max(one_m, Interval(1e-300))); });
}
// d atan2(y,x) = (x dy - y dx) / (x^2 + y^2)
inline Grad atan2q(const Grad& y, const Grad& x) {
  Grad r(atan2q(y.v, x.v));
  const Interval den = sqr(x.v) + sqr(y.v);
  for (int i = 0; i < kGradVars; ++i)
    r.d[i] = (x.v * y.d[i] - y.v * x.d[i]) / den;
  return r;
}

inline Grad hull(const Grad& a, const Grad& b) {
  Grad r(hull(a.v, b.v));
  for (int i = 0; i < kGradVars; ++i) r.d[i] = hull(a.d[i], b.d[i]);
  return r;
}
inline Grad min(const Grad& a, const Grad& b) {
  if (a.v.hi <= b.v.lo) return a;
  if (b.v.hi <= a.v.lo) return b;
  Grad r = hull(a, b);
  r.v = min(a.v, b.v);
  return r;
}
inline Grad max(const Grad& a, const Grad& b) {
  if (a.v.lo >= b.v.hi) return a;
  if (b.v.lo >= a.v.hi) return b;
  Grad r = hull(a, b);
  r.v = max(a.v, b.v);
  return r;
}
inline Trilean cmp_ge(const Grad& a, const Grad& b) { return cmp_ge(a.v, b.v); }

// Second-order univariate jet over intervals: (f, f', f'') with
// respect to one scalar parameter.  Drives the critical-point mode.
struct Jet2 {
  Interval v, d1, d2;

  Jet2() : v(0.0), d1(0.0), d2(0.0) {}
  explicit Jet2(const Interval& value) : v(value), d1(0.0), d2(0.0) {}
  explicit Jet2(double value) : v(value), d1(0.0), d2(0.0) {}
  static Jet2 var(const Interval& value) {
    Jet2 j(value);
    j.d1 = Interval(1.0);
    return j;
  }
};

inline Jet2 operator-(const Jet2& a) {
  Jet2 r;
  r.v = -a.v; r.d1 = -a.d1; r.d2 = -a.d2;
  return r;
}
inline Jet2 operator+(const Jet2& a, const Jet2& b) {
  Jet2 r;
  r.v = a.v + b.v; r.d1 = a.d1 + b.d1; r.d2 = a.d2 + b.d2;
  return r;
}
inline Jet2 operator-(const Jet2& a, const Jet2& b) {
  Jet2 r;
  r.v = a.v - b.v; r.d1 = a.d1 - b.d1; r.d2 = a.d2 - b.d2;
  return r;
}
inline Jet2 operator*(const Jet2& a, const Jet2& b) {
  Jet2 r;
  r.v = a.v * b.v;
  r.d1 = a.d1 * b.v + a.v * b.d1;
  r.d2 = a.d2 * b.v + 2.0 * a.d1 * b.d1 + a.v * b.d2;
  return r;
}
inline Jet2 operator/(const Jet2& a, const Jet2& b) {
  Jet2 r;
  r.v = a.v / b.v;
  r.d1 = (a.d1 - r.v * b.d1) / b.v;
  r.d2 = (a.d2 - 2.0 * r.d1 * b.d1 - r.v * b.d2) / b.v;
  return r;
}
inline Jet2 operator+(const Jet2& a, double b) { return a + Jet2(b); }
inline Jet2 operator+(double a, const Jet2& b) { return Jet2(a) + b; }
inline Jet2 operator-(const Jet2& a, double b) { return a - Jet2(b); }
inline Jet2 operator-(double a, const Jet2& b) { return Jet2(a) - b; }
inline Jet2 operator*(const Jet2& a, double b) { return a * Jet2(b); }
inline Jet2 operator*(double a, const Jet2& b) { return Jet2(a) * b; }
inline Jet2 operator/(const Jet2& a, double b) { return a / Jet2(b); }
inline Jet2 operator/(double a, const Jet2& b) { return Jet2(a) / b; }

// composition with scalar function: f(a), df, d2f given at a.v
inline Jet2 compose(const Jet2& a, const Interval& f, const Interval& df,
                    const Interval& d2f) {
  Jet2 r;
  r.v = f;
  r.d1 = df * a.d1;
  r.d2 = d2f * sqr(a.d1) + df * a.d2;
  return r;
}

inline Jet2 sqr(const Jet2& a) { return compose(a, sqr(a.v), 2.0 * a.v, Interval(2.0)); }
inline Jet2 sqrt(const Jet2& a) {
  const Interval s = sqrt(max(a.v, Interval(1e-300)));
  return compose(a, s, 0.5 / s, -0.25 / (s * a.v));
}
inline Jet2 powi(const Jet2& a, int n) {
  return compose(a, powi(a.v, n), double(n) * powi(a.v, n - 1),
                 double(n) * double(n - 1) * powi(a.v, n - 2));
}
inline Jet2 atan(const Jet2& a) {
  const Interval den = 1.0 + sqr(a.v);
  return compose(a, atan(a.v), 1.0 / den, -2.0 * a.v / sqr(den));
}
inline Jet2 acos(const Jet2& a) {
  const Interval om = max(1.0 - sqr(a.v), Interval(1e-300));
  const Interval s = sqrt(om);
  return compose(a, acos(a.v), -1.0 / s, -a.v / (om * s));
}
inline Jet2 asin(const Jet2& a) {
  const Interval om = max(1.0 - sqr(a.v), Interval(1e-300));
  const Interval s = sqrt(om);
  return compose(a, asin(a.v), 1.0 / s, a.v / (om * s));
}
inline Jet2 atan2q(const Jet2& y, const Jet2& x) {
  // reduce to atan(y/x) derivatives, valid away from x=y=0
  Jet2 r;
  r.v = atan2q(y.v, x.v);
  const Interval den = sqr(x.v) + sqr(y.v);
  const Interval u1 = (x.v * y.d1 - y.v * x.d1) / den;
  r.d1 = u1;
  // derivative of u1: quotient rule on N/den with N = x y' - y x'
  const Interval dN = x.v * y.d2 - y.v * x.d2;
  const Interval dden = 2.0 * (x.v * x.d1 + y.v * y.d1);
  r.d2 = (dN - u1 * dden) / den;
  return r;
}

inline Jet2 hull(const Jet2& a, const Jet2& b) {
  Jet2 r;
  r.v = hull(a.v, b.v); r.d1 = hull(a.d1, b.d1); r.d2 = hull(a.d2, b.d2);
  return r;
}
inline Jet2 min(const Jet2& a, const Jet2& b) {
  if (a.v.hi <= b.v.lo) return a;
  if (b.v.hi <= a.v.lo) return b;
  Jet2 r = hull(a, b);
  r.v = min(a.v, b.v);
  return r;
}
inline Jet2 max(const Jet2& a, const Jet2& b) {
  if (a.v.lo >= b.v.hi) return a;
  if (b.v.lo >= a.v.hi) return b;
  Jet2 r = hull(a, b);
  r.v = max(a.v, b.v);
  return r;
}
inline Trilean cmp_ge(const Jet2& a, const Jet2& b) { return cmp_ge(a.v, b.v); }

// scalar-type helpers so templated formulas can branch on values
inline const Interval& value_of(const Interval& a) { return a; }
inline const Interval& value_of(const Grad& a) { return a.v; }
inline const Interval& value_of(const Jet2& a) { return a.v; }
inline Interval value_of(double a) { return Interval(a); }

inline double min(double a, double b) { return std::min(a, b); }
inline double max(double a, double b) { return std::max(a, b); }

}  // namespace packbound
