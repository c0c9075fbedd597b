#pragma once

// Seeded Monte-Carlo oracles for the geometric definitions of the
// score functions.  Everything here works from explicit coordinates
// and halfspace/cone predicates, independent of the analytic formulas
// under test.

#include <array>
#include <cmath>
#include <random>

#include "packbound/scoring.hpp"

namespace mc {

using packbound::Edges;
using packbound::Vec3;

using V = Vec3<double>;

inline V unit(V a) {
  double n = packbound::norm(a);
  return {a.x / n, a.y / n, a.z / n};
}

struct SimplexGeom {
  V p1, p2, p3;
  Edges<double> y;
  explicit SimplexGeom(const Edges<double>& yy) : y(yy) {
    auto em = packbound::embed(yy);
    p1 = em.p1;
    p2 = em.p2;
    p3 = em.p3;
  }
  bool in_cone(const V& w) const {
    // barycentric coordinates via Cramer
    double det = dot(p1, cross(p2, p3));
    double l1 = dot(w, cross(p2, p3)) / det;
    double l2 = dot(p1, cross(w, p3)) / det;
    double l3 = dot(p1, cross(p2, w)) / det;
    return l1 >= 0 && l2 >= 0 && l3 >= 0;
  }
  bool in_voronoi(const V& w) const {
    return dot(w, p1) <= dot(p1, p1) / 2 && dot(w, p2) <= dot(p2, p2) / 2 &&
           dot(w, p3) <= dot(p3, p3) / 2;
  }
};

// volume of cone(S) & Voronoi(0) & B(t) by rejection inside a
// parallelepiped spanned by the edge directions (guaranteed cover)
inline double vol_voronoi_cone(const Edges<double>& y, double t,
                               std::uint64_t seed, long n) {
  SimplexGeom g(y);
  V u1 = unit(g.p1), u2 = unit(g.p2), u3 = unit(g.p3);
  // row norms of the inverse give per-coordinate bounds |a_i| <= t k_i
  double det = dot(u1, cross(u2, u3));
  V r1 = cross(u2, u3), r2 = cross(u3, u1), r3 = cross(u1, u2);
  double k1 = packbound::norm(r1) / std::abs(det);
  double k2 = packbound::norm(r2) / std::abs(det);
  double k3 = packbound::norm(r3) / std::abs(det);
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> s1(0, t * k1), s2(0, t * k2),
      s3(0, t * k3);
  long hits = 0;
  for (long i = 0; i < n; ++i) {
    double a = s1(rng), b = s2(rng), c = s3(rng);
    V w{a * u1.x + b * u2.x + c * u3.x, a * u1.y + b * u2.y + c * u3.y,
        a * u1.z + b * u2.z + c * u3.z};
    if (dot(w, w) <= t * t && g.in_voronoi(w) && g.in_cone(w)) ++hits;
  }
  double box = t * k1 * t * k2 * t * k3 * std::abs(det);
  return box * double(hits) / double(n);
}

// geometric truncated score 4(-doct vol + sol/3) of the Voronoi piece
inline double score_voronoi_cone(const Edges<double>& y, double t,
                                 std::uint64_t seed, long n) {
  const auto& C = packbound::Constants::get();
  double vol = vol_voronoi_cone(y, t, seed, n);
  return 4 * (-C.delta_oct.d * vol + packbound::sol_y(y) / 3);
}

// ---- extended-wedge region of Section 2 (the kappa identity) ----

struct WedgeRegion {
  // S = (0, v, v1, v2) with the upright diagonal as first edge
  V v, v1, v2;
  double h, eta0v, theta_cos;
  bool ext1, ext2;
  V c1, c2;  // unit directions of the extension corners
  V n1, n2;  // wedge meridian normals, oriented inward
  double s1, s2;

  static V circumcenter2(const V& a, const V& b) {
    // circumcenter of triangle (0,a,b) inside its plane
    double aa = dot(a, a), bb = dot(b, b), ab = dot(a, b);
    double det = aa * bb - ab * ab;
    double al = (aa * bb - bb * ab) / (2 * det);
    double be = (aa * bb - aa * ab) / (2 * det);
    return {al * a.x + be * b.x, al * a.y + be * b.y, al * a.z + be * b.z};
  }

  explicit WedgeRegion(const Edges<double>& y) {
    SimplexGeom g(y);
    v = g.p1;
    v1 = g.p2;
    v2 = g.p3;
    h = y[0] / 2;
    eta0v = packbound::eta0(h);
    theta_cos = h / eta0v;
    n1 = cross(v, v1);
    s1 = dot(n1, v2) > 0 ? 1.0 : -1.0;
    n2 = cross(v, v2);
    s2 = dot(n2, v1) > 0 ? 1.0 : -1.0;
    ext1 = setup_ext(v1, v2, c1);
    ext2 = setup_ext(v2, v1, c2);
  }

  bool setup_ext(const V& vi, const V& other, V& c) const {
    double etaF = packbound::norm(circumcenter2(v, vi));
    if (etaF >= eta0v) return false;  // extension skipped
    V u1 = unit(circumcenter2(v, vi));
    V u2 = unit(cross(v, vi));
    double cosrho = dot(unit(v), u1);  // = h / etaF
    double cosom = theta_cos / cosrho;
    double sinom = std::sqrt(std::max(0.0, 1 - cosom * cosom));
    if (dot(u2, other) < 0) sinom = -sinom;
    c = {cosom * u1.x + sinom * u2.x, cosom * u1.y + sinom * u2.y,
         cosom * u1.z + sinom * u2.z};
    return true;
  }

  static bool in_sph_triangle(const V& w, const V& a, const V& b, const V& c) {
    auto side = [&](const V& p, const V& q, const V& ref) {
      V n = cross(p, q);
      double s = dot(n, ref) > 0 ? 1.0 : -1.0;
      return s * dot(n, w) >= 0;
    };
    return side(a, b, c) && side(b, c, a) && side(c, a, b);
  }

  bool dir_in_extended_wedge(const V& w) const {
    V vu = unit(v);
    bool in_cap = dot(unit(w), vu) >= theta_cos;
    bool in_az = s1 * dot(n1, w) >= 0 && s2 * dot(n2, w) >= 0;
    if (in_cap && in_az) return true;
    if (ext1 && in_sph_triangle(w, vu, unit(v1), c1)) return true;
    if (ext2 && in_sph_triangle(w, vu, unit(v2), c2)) return true;
    return false;
  }

  bool in_region(const V& w, double t0) const {
    if (dot(w, w) < t0 * t0) return false;
    if (dot(w, v) > dot(v, v) / 2) return false;
    if (dot(w, v1) > dot(v1, v1) / 2) return false;
    if (dot(w, v2) > dot(v2, v2) / 2) return false;
    return dir_in_extended_wedge(w);
  }
};

// -4 delta_oct vol(delta_P(W^e)) by shell-importance sampling
inline double kappa_geometric(const Edges<double>& y, std::uint64_t seed,
                              long n) {
  const auto& C = packbound::Constants::get();
  WedgeRegion reg(y);
  double t0 = C.t0.d, rmax = reg.eta0v;
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> uu(-1, 1), up(0, 2 * std::acos(-1.0)),
      ur(t0, rmax);
  double acc = 0;
  const double four_pi = 4 * std::acos(-1.0);
  for (long i = 0; i < n; ++i) {
    double z = uu(rng), ph = up(rng);
    double s = std::sqrt(std::max(0.0, 1 - z * z));
    V d{s * std::cos(ph), s * std::sin(ph), z};
    double rho = ur(rng);
    V w{rho * d.x, rho * d.y, rho * d.z};
    if (reg.in_region(w, t0)) acc += rho * rho;
  }
  double vol = acc / double(n) * four_pi * (rmax - t0);
  return -4 * C.delta_oct.d * vol;
}

// ---- truncated corner cell region (chi0) ----

struct TccRegion {
  V v, v1, v2;       // corner and its neighbours: S = (0, v, v1, v2)
  double h, cospsi;  // cone parameters
  V m1, m2;          // normals of the perpendicular slicing planes
  double sm1, sm2;
  V nw1, nw2;  // wedge meridian normals
  double sw1, sw2;

  TccRegion(const Edges<double>& y, double lambda) {
    SimplexGeom g(y);
    v = g.p1;
    v1 = g.p2;
    v2 = g.p3;
    h = y[0] / 2;
    const double t0 = packbound::Constants::get().t0.d;
    cospsi = (y[0] * y[0] + t0 * t0 - lambda * lambda) / (2 * y[0] * t0);
    auto plane = [&](const V& vi, V& m, double& sm) {
      V cf = WedgeRegion::circumcenter2(v, vi);
      V nf = cross(v, vi);
      m = cross(cf, nf);
      sm = dot(m, v) > 0 ? 1.0 : -1.0;
    };
    plane(v1, m1, sm1);
    plane(v2, m2, sm2);
    nw1 = cross(v, v1);
    sw1 = dot(nw1, v2) > 0 ? 1.0 : -1.0;
    nw2 = cross(v, v2);
    sw2 = dot(nw2, v1) > 0 ? 1.0 : -1.0;
  }

  bool faces_meet() const {
    V d = cross(m1, m2);
    if (packbound::norm(d) < 1e-12) return true;
    V du = unit(d);
    for (double sgn : {1.0, -1.0}) {
      V e{sgn * du.x, sgn * du.y, sgn * du.z};
      if (sw1 * dot(nw1, e) >= 0 && sw2 * dot(nw2, e) >= 0 &&
          dot(e, unit(v)) >= cospsi)
        return true;
    }
    return false;
  }

  bool dir_ok(const V& d) const {
    if (dot(unit(d), unit(v)) < cospsi) return false;
    if (sw1 * dot(nw1, d) < 0 || sw2 * dot(nw2, d) < 0) return false;
    if (sm1 * dot(m1, d) < 0 || sm2 * dot(m2, d) < 0) return false;
    return true;
  }
  bool in_region(const V& w, double t0) const {
    if (dot(w, w) > t0 * t0) return false;
    if (dot(w, v) > dot(v, v) / 2) return false;
    return dir_ok(w);
  }
};

// geometric tcc score: 4(-doct vol + sol/3) with both integrals taken
// over the cap-sector around the corner direction
inline double chi0_geometric(const Edges<double>& y, double lambda,
                             std::uint64_t seed, long n) {
  const auto& C = packbound::Constants::get();
  TccRegion reg(y, lambda);
  double t0 = C.t0.d;
  std::mt19937_64 rng(seed);
  // orthonormal frame around the corner direction
  V a = unit(reg.v);
  V helper = std::abs(a.x) < 0.7 ? V{1, 0, 0} : V{0, 1, 0};
  V b = unit(cross(a, helper));
  V c = cross(a, b);
  std::uniform_real_distribution<double> uz(reg.cospsi, 1.0),
      up(0, 2 * std::acos(-1.0)), uv(0, 1);
  long vol_hits = 0, sol_hits = 0;
  for (long i = 0; i < n; ++i) {
    double z = uz(rng), ph = up(rng);
    double s = std::sqrt(std::max(0.0, 1 - z * z));
    V d{z * a.x + s * (std::cos(ph) * b.x + std::sin(ph) * c.x),
        z * a.y + s * (std::cos(ph) * b.y + std::sin(ph) * c.y),
        z * a.z + s * (std::cos(ph) * b.z + std::sin(ph) * c.z)};
    if (reg.dir_ok(d)) ++sol_hits;
    double rho = t0 * std::cbrt(uv(rng));
    V w{rho * d.x, rho * d.y, rho * d.z};
    if (reg.in_region(w, t0)) ++vol_hits;
  }
  const double cap = 2 * std::acos(-1.0) * (1 - reg.cospsi);
  double vol = cap / 3 * t0 * t0 * t0 * double(vol_hits) / double(n);
  double sol = cap * double(sol_hits) / double(n);
  return 4 * (-C.delta_oct.d * vol + sol / 3);
}

}  // namespace mc
