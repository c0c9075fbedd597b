#pragma once

#include <array>
#include <cmath>

#include "packbound/grad.hpp"
#include "packbound/interval.hpp"

// Simplex primitives in the edge-length convention: y1,y2,y3 meet at
// the distinguished (origin) vertex, y4 opposite y1, y5 opposite y2,
// y6 opposite y3.  Everything is templated over the scalar type so the
// same formulas serve point, interval, gradient and jet evaluation.

namespace packbound {

template <class T>
using Edges = std::array<T, 6>;

template <class T>
struct Vec3 {
  T x, y, z;
};

template <class T>
T dot(const Vec3<T>& a, const Vec3<T>& b) {
  return a.x * b.x + a.y * b.y + a.z * b.z;
}
template <class T>
Vec3<T> cross(const Vec3<T>& a, const Vec3<T>& b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}
template <class T>
Vec3<T> operator-(const Vec3<T>& a, const Vec3<T>& b) {
  return {a.x - b.x, a.y - b.y, a.z - b.z};
}
template <class T>
Vec3<T> operator+(const Vec3<T>& a, const Vec3<T>& b) {
  return {a.x + b.x, a.y + b.y, a.z + b.z};
}
template <class T>
Vec3<T> scale(const T& s, const Vec3<T>& a) {
  return {s * a.x, s * a.y, s * a.z};
}
template <class T>
T norm(const Vec3<T>& a) {
  return sqrt(dot(a, a));
}

template <class T>
T mkconst(double v) {
  return T(v);
}
template <>
inline Interval mkconst<Interval>(double v) {
  return Interval(v);
}

template <class T>
T pi_const() {
  static const Interval pi =
      detail::widened(std::acos(-1.0), std::acos(-1.0), 1);
  if constexpr (std::is_same_v<T, double>)
    return std::acos(-1.0);
  else if constexpr (std::is_same_v<T, Interval>)
    return pi;
  else
    return T(pi);
}

// y_i^2 vector
template <class T>
Edges<T> squares(const Edges<T>& y) {
  return {sqr(y[0]), sqr(y[1]), sqr(y[2]), sqr(y[3]), sqr(y[4]), sqr(y[5])};
}

// u(p,q,r) = -p^2-q^2-r^2+2pq+2qr+2rp on squared triangle sides;
// equals 16 * squared area.
template <class T>
T u_fn(const T& p, const T& q, const T& r) {
  return 2.0 * (p * q + q * r + r * p) - sqr(p) - sqr(q) - sqr(r);
}

// The Cayley-Menger-type polynomial: delta = 288 vol^2.
template <class T>
T delta_x(const Edges<T>& x) {
  return x[0] * x[3] * (-x[0] + x[1] + x[2] - x[3] + x[4] + x[5]) +
         x[1] * x[4] * (x[0] - x[1] + x[2] + x[3] - x[4] + x[5]) +
         x[2] * x[5] * (x[0] + x[1] - x[2] + x[3] + x[4] - x[5]) -
         x[1] * x[2] * x[3] - x[0] * x[2] * x[4] - x[0] * x[1] * x[5] -
         x[3] * x[4] * x[5];
}

// Analytic partial of delta with respect to x_i (i zero-based).
template <class T>
T delta_partial_x(int i, const Edges<T>& x) {
  const T &x1 = x[0], &x2 = x[1], &x3 = x[2], &x4 = x[3], &x5 = x[4], &x6 = x[5];
  switch (i) {
    case 0:
      return x4 * (-2.0 * x1 + x2 + x3 - x4 + x5 + x6) + x2 * x5 + x3 * x6 -
             x3 * x5 - x2 * x6;
    case 1:
      return x5 * (x1 - 2.0 * x2 + x3 + x4 - x5 + x6) + x1 * x4 + x3 * x6 -
             x3 * x4 - x1 * x6;
    case 2:
      return x6 * (x1 + x2 - 2.0 * x3 + x4 + x5 - x6) + x1 * x4 + x2 * x5 -
             x2 * x4 - x1 * x5;
    case 3:
      return x1 * (-x1 + x2 + x3 - 2.0 * x4 + x5 + x6) + x2 * x5 + x3 * x6 -
             x2 * x3 - x5 * x6;
    case 4:
      return x2 * (x1 - x2 + x3 + x4 - 2.0 * x5 + x6) + x1 * x4 + x3 * x6 -
             x1 * x3 - x4 * x6;
    default:
      return x3 * (x1 + x2 - x3 + x4 + x5 - 2.0 * x6) + x1 * x4 + x2 * x5 -
             x1 * x2 - x4 * x5;
  }
}

template <class T>
T delta_y(const Edges<T>& y) {
  return delta_x(squares(y));
}

namespace detail {
// clip a quantity that is nonnegative in exact arithmetic
inline double clip0(double v, const char* what) {
  if (v < -1e-9) throw domain_error(what);
  return v < 0 ? 0.0 : v;
}
inline Interval clip0(const Interval& v, const char* what) {
  if (v.hi < -1e-12) throw domain_error(what);
  return Interval(std::max(0.0, v.lo), std::max(0.0, v.hi));
}
inline Grad clip0(const Grad& v, const char* what) {
  Grad r = v;
  r.v = clip0(v.v, what);
  return r;
}
inline Jet2 clip0(const Jet2& v, const char* what) {
  Jet2 r = v;
  r.v = clip0(v.v, what);
  return r;
}
}  // namespace detail

// Triangle circumradius from side lengths.
template <class T>
T eta(const T& a, const T& b, const T& c) {
  const T u = u_fn(sqr(a), sqr(b), sqr(c));
  if (value_of(u).hi <= 0) throw domain_error("degenerate triangle in eta");
  return a * b * c / sqrt(detail::clip0(u, "degenerate triangle in eta"));
}

// Planar angle opposite the side of length c.
template <class T>
T arc(const T& a, const T& b, const T& c) {
  return acos((sqr(a) + sqr(b) - sqr(c)) / (2.0 * a * b));
}

// Dihedral angle along the first edge.  atan2 form of
// pi/2 + atan(-Delta4 / sqrt(4 x1 Delta)); stays evaluable (with a
// widened [0,pi] enclosure) when the cell touches Delta = 0.
template <class T>
T dih_x(const Edges<T>& x) {
  const T d = delta_x(x);
  if (cmp_ge(value_of(d), Interval(0.0)) == Trilean::kFalse)
    throw domain_error("degenerate simplex in dih");
  const T s = sqrt(detail::clip0(4.0 * x[0] * d, "degenerate simplex in dih"));
  return atan2q(s, delta_partial_x(3, x));
}

template <class T>
Edges<T> permute(const Edges<T>& y, int a, int b, int c, int d, int e, int f) {
  return {y[a - 1], y[b - 1], y[c - 1], y[d - 1], y[e - 1], y[f - 1]};
}

template <class T>
T dih_y(const Edges<T>& y) {
  return dih_x(squares(y));
}
template <class T>
T dih2_y(const Edges<T>& y) {
  return dih_x(squares(permute(y, 2, 1, 3, 5, 4, 6)));
}
template <class T>
T dih3_y(const Edges<T>& y) {
  return dih_x(squares(permute(y, 3, 1, 2, 6, 4, 5)));
}

// Solid angle at the origin vertex.
template <class T>
T sol_y(const Edges<T>& y) {
  return dih_y(y) + dih2_y(y) + dih3_y(y) - pi_const<T>();
}

template <class T>
T vol_y(const Edges<T>& y) {
  return sqrt(detail::clip0(delta_y(y), "degenerate simplex in vol")) / 12.0;
}

// Circumradius of the four-vertex simplex: rad^2 = rho / (4 delta).
template <class T>
T rad_y(const Edges<T>& y) {
  const Edges<T> x = squares(y);
  const T rho = 2.0 * (x[0] * x[1] * x[3] * x[4] + x[0] * x[2] * x[3] * x[5] +
                       x[1] * x[2] * x[4] * x[5]) -
                sqr(x[0] * x[3]) - sqr(x[1] * x[4]) - sqr(x[2] * x[5]);
  const T d = delta_x(x);
  if (cmp_ge(value_of(d), Interval(0.0)) == Trilean::kFalse)
    throw domain_error("degenerate simplex in rad");
  return sqrt(rho / detail::clip0(4.0 * d, "degenerate simplex in rad"));
}

// eta0(h) = eta(2h, 2, 2.51), the critical circumradius of Section 2.
template <class T>
T eta0(const T& h) {
  return eta(2.0 * h, mkconst<T>(2.0), mkconst<T>(2.51));
}

// beta_psi given cos(psi): cos^2 beta = (cos^2 psi - cos^2 theta) /
// (1 - cos^2 theta) with theta the angle opposite y5 in (y1,y3,y5).
template <class T>
T beta_psi_cos(const T& cpsi, const T& y1, const T& y3, const T& y5) {
  const T ctheta = (sqr(y1) + sqr(y3) - sqr(y5)) / (2.0 * y1 * y3);
  const T c2t = sqr(ctheta);
  const T num = sqr(cpsi) - c2t;
  return acos(sqrt(detail::clip0(num, "beta_psi: psi exceeds theta") /
                   detail::clip0(1.0 - c2t, "beta_psi: theta degenerate")));
}

template <class T>
T beta_psi(const T& psi, const T& y1, const T& y3, const T& y5) {
  // cos on [0, pi/2] via identity cos = sqrt(1-sin^2) is not available
  // without sin; use the derivative-free route acos(cos(psi)) = psi:
  // callers in this codebase always know cos(psi) directly, this
  // overload exists for the point API.
  static_assert(std::is_same_v<T, double>);
  return beta_psi_cos(std::cos(psi), y1, y3, y5);
}

// Rogers simplex R(a,b,c) as an edge-length simplex: vertices
// 0, (a,0,0), (a,sqrt(b^2-a^2),0), (a,sqrt(b^2-a^2),sqrt(c^2-b^2)).
template <class T>
Edges<T> rogers(const T& a, const T& b, const T& c) {
  if (cmp_ge(value_of(b), value_of(a)) == Trilean::kFalse ||
      cmp_ge(value_of(c), value_of(b)) == Trilean::kFalse)
    throw domain_error("rogers parameters must satisfy a <= b <= c");
  const T q2 = detail::clip0(sqr(b) - sqr(a), "rogers b < a");
  const T r2 = detail::clip0(sqr(c) - sqr(b), "rogers c < b");
  return {a, b, c, sqrt(r2), sqrt(detail::clip0(sqr(c) - sqr(a), "rogers c < a")),
          sqrt(q2)};
}

// The hat involution: the same simplex viewed from the far end of its
// first edge.
template <class T>
Edges<T> hat(const Edges<T>& y) {
  return permute(y, 1, 6, 5, 4, 3, 2);
}

// Coordinate embedding: p1 on the x-axis, p2 in the xy-plane.
template <class T>
struct Embedding {
  Vec3<T> p1, p2, p3;
};

template <class T>
Embedding<T> embed(const Edges<T>& y) {
  const Edges<T> x = squares(y);
  const T zero = mkconst<T>(0.0);
  Vec3<T> p1{y[0], zero, zero};
  const T bx = (x[0] + x[1] - x[5]) / (2.0 * y[0]);
  const T by = sqrt(detail::clip0(x[1] - sqr(bx), "degenerate face in embed"));
  Vec3<T> p2{bx, by, zero};
  const T cx = (x[0] + x[2] - x[4]) / (2.0 * y[0]);
  const T cy = ((x[1] + x[2] - x[3]) * 0.5 - bx * cx) / by;
  const T cz =
      sqrt(detail::clip0(x[2] - sqr(cx) - sqr(cy), "degenerate simplex in embed"));
  Vec3<T> p3{cx, cy, cz};
  return {p1, p2, p3};
}

// Fourth point at prescribed distances d0,d1,d2 from base points
// b0,b1,b2, on the opposite side of their plane from side_ref.
template <class T>
Vec3<T> fourth_point(const Vec3<T>& b0, const Vec3<T>& b1, const Vec3<T>& b2,
                     const T& d0, const T& d1, const T& d2,
                     const Vec3<T>& side_ref) {
  const Vec3<T> a = b1 - b0, b = b2 - b0;
  const T ra = (dot(a, a) + sqr(d0) - sqr(d1)) * 0.5;
  const T rb = (dot(b, b) + sqr(d0) - sqr(d2)) * 0.5;
  const T aa = dot(a, a), ab = dot(a, b), bb = dot(b, b);
  const T det = aa * bb - sqr(ab);
  const T alpha = (ra * bb - rb * ab) / det;
  const T beta = (rb * aa - ra * ab) / det;
  const Vec3<T> in_plane = scale(alpha, a) + scale(beta, b);
  const T t2 = sqr(d0) - dot(in_plane, in_plane);
  Vec3<T> n = cross(a, b);
  const T nn = norm(n);
  const T t = sqrt(detail::clip0(t2, "fourth_point: spheres do not meet")) / nn;
  // orient away from the reference point
  const T side = dot(n, side_ref - b0);
  Vec3<T> w_plus = b0 + in_plane + scale(t, n);
  Vec3<T> w_minus = b0 + in_plane - scale(t, n);
  switch (cmp_ge(value_of(side), Interval(0.0))) {
    case Trilean::kTrue:
      return w_minus;
    case Trilean::kFalse:
      return w_plus;
    default:
      throw domain_error("fourth_point: ambiguous side");
  }
}

// E(S, d1, d2, d3): distance from the origin to the vertex w placed at
// distances d_i from v_i on the far side of the face (v1,v2,v3).
template <class T>
T e_min(const Edges<T>& y, const T& d1, const T& d2, const T& d3) {
  const Embedding<T> em = embed(y);
  const Vec3<T> zero{mkconst<T>(0.0), mkconst<T>(0.0), mkconst<T>(0.0)};
  const Vec3<T> w = fourth_point(em.p1, em.p2, em.p3, d1, d2, d3, zero);
  return norm(w);
}

}  // namespace packbound
