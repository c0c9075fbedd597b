#pragma once

#include "packbound/constants.hpp"
#include "packbound/simplex.hpp"

// The scoring calculus: compression, truncated and analytic Voronoi
// scores, quarter scores, the squander family, crowns and anchor
// corrections, truncated-corner-cell scores, the overlap function and
// the deformation polynomials.

namespace packbound {

// ---------------------------------------------------------------- quoins

// Volume of the quoin attached to the Rogers simplex R(a,b,c): zero
// for b >= c, otherwise the closed form pinned by the boundary
// condition quo(a,c,c) = 0 and by
//   d quo / d b = -a (c^2-b^2)^{3/2} / (3 b sqrt(b^2-a^2)).
// Monotone decreasing in b, hence always within [0, halfcap(a,c)].
template <class T>
T quoin_halfcap(const T& a, const T& c) {
  return pi_const<T>() * sqr(c - a) * (2.0 * c + a) / 12.0;
}

template <class T>
T quoin_formula(const T& a, const T& b, const T& c) {
  const T q = sqrt(detail::clip0(sqr(b) - sqr(a), "quoin b < a"));
  const T r = sqrt(detail::clip0(sqr(c) - sqr(b), "quoin c < b"));
  const T e = r / q;
  const T t1 = (2.0 * c + a) * sqr(c - a) * atan(e) / 6.0;
  const T t2 = a * q * r / 6.0;
  const T arg = r * sqrt(detail::clip0(b - a, "quoin b < a") / (b + a)) / (b + c);
  const T t3 = -(2.0 / 3.0) * powi(c, 3) * atan(arg);
  return t1 + t2 + t3;
}

inline double quoin(double a, double b, double c) {
  if (b >= c) return 0.0;
  if (b * b - a * a <= 1e-14) return midpoint(quoin_halfcap(Interval(a), Interval(c)));
  return quoin_formula(a, b, c);
}

template <class T>
T quoin(const T& a, const T& b, const T& c) {
  const T zero = mkconst<T>(0.0);
  switch (cmp_ge(value_of(b), value_of(c))) {
    case Trilean::kTrue:
      return zero;
    case Trilean::kFalse: {
      if (cmp_ge(value_of(sqr(b) - sqr(a)), Interval(1e-9)) != Trilean::kTrue) {
        // nearly degenerate face: fall back to the monotone envelope
        T cap = quoin_halfcap(a, c);
        return hull(zero, cap);
      }
      T res = quoin_formula(a, b, c);
      if constexpr (std::is_same_v<T, Interval>) {
        // quoin is nonnegative and decreasing in b: endpoint slices
        // of b sharpen the raw enclosure
        Interval up = quoin_formula(a, Interval(b.lo), c);
        Interval dn = quoin_formula(a, Interval(b.hi), c);
        res = Interval(std::max({res.lo, dn.lo, 0.0}), std::min(res.hi, up.hi));
      } else if constexpr (!std::is_same_v<T, double>) {
        res.v.lo = std::max(res.v.lo, 0.0);
      }
      return res;
    }
    default: {
      // b may reach c: evaluate on the clipped part and hull with 0
      const T bc = min(b, c);
      if (cmp_ge(value_of(sqr(bc) - sqr(a)), Interval(1e-9)) != Trilean::kTrue)
        return hull(zero, quoin_halfcap(a, c));
      return hull(zero, quoin_formula(a, bc, c));
    }
  }
}

// d quo(R(a,b,c)) / d b (zero when b >= c)
template <class T>
T dquoin_db(const T& a, const T& b, const T& c) {
  const T zero = mkconst<T>(0.0);
  Trilean supp = cmp_ge(value_of(b), value_of(c));
  if (supp == Trilean::kTrue) return zero;
  const T r2 = detail::clip0(sqr(c) - sqr(min(b, c)), "dquoin c < b");
  const T q = sqrt(detail::clip0(sqr(b) - sqr(a), "dquoin b < a"));
  const T d = -a * r2 * sqrt(r2) / (3.0 * b * q);
  return supp == Trilean::kFalse ? d : hull(zero, d);
}


namespace detail_score {
// asin(num/den) clipped into [0, pi/2]; loses derivative information
// when the denominator can vanish on the cell
template <class T>
T asin_frac(const T& num, const T& den) {
  using namespace packbound;
  if (value_of(den).lo > 1e-14) return asin(min(num / den, mkconst<T>(1.0)));
  if constexpr (std::is_same_v<T, double>) {
    throw domain_error("degenerate rogers piece");
  } else {
    const Interval range(0.0, std::acos(0.0) * (1 + 1e-12));
    const Interval whole(-std::numeric_limits<double>::infinity(),
                         std::numeric_limits<double>::infinity());
    if constexpr (std::is_same_v<T, Interval>) {
      return range;
    } else if constexpr (std::is_same_v<T, Grad>) {
      Grad g(range);
      g.d.fill(whole);
      return g;
    } else {
      Jet2 j(range);
      j.d1 = whole;
      j.d2 = whole;
      return j;
    }
  }
}
}  // namespace detail_score

// ------------------------------------------------------- basic scores

// Compression: Gamma(S) = -delta_oct vol(S) + (1/3) sum of the four
// vertex solid angles.
template <class T>
T gamma_fn(const Edges<T>& y) {
  const T sol0 = sol_y(y);
  const T sol1 = sol_y(hat(y));
  const T sol2 = sol_y(permute(y, 2, 6, 4, 5, 3, 1));
  const T sol3 = sol_y(permute(y, 3, 5, 4, 6, 2, 1));
  return -cst<T>(Constants::get().delta_oct) * vol_y(y) +
         (sol0 + sol1 + sol2 + sol3) / 3.0;
}

// Truncated Voronoi score vor(S,t): solid-angle term, per-edge
// A-corrections and a quoin pair per origin face, the face's pair
// suppressed when its circumradius exceeds the truncation radius.
template <class T>
T vor_trunc(const Edges<T>& y, double t) {
  const T tt = mkconst<T>(t);
  const T phit = phi_fn(tt, tt);
  const T at1 = (1.0 - y[0] * 0.5 / tt) * (phi_fn(y[0] * 0.5, tt) - phit);
  const T at2 = (1.0 - y[1] * 0.5 / tt) * (phi_fn(y[1] * 0.5, tt) - phit);
  const T at3 = (1.0 - y[2] * 0.5 / tt) * (phi_fn(y[2] * 0.5, tt) - phit);
  T res = sol_y(y) * phit + dih_y(y) * at1 + dih2_y(y) * at2 + dih3_y(y) * at3;
  const T doct4 = 4.0 * cst<T>(Constants::get().delta_oct);
  // faces at the origin: (y1,y2;y6), (y1,y3;y5), (y2,y3;y4)
  const int f[3][3] = {{0, 1, 5}, {0, 2, 4}, {1, 2, 3}};
  for (auto& fc : f) {
    const T et = eta(y[fc[0]], y[fc[1]], y[fc[2]]);
    res = res - doct4 * (quoin(y[fc[0]] * 0.5, et, tt) + quoin(y[fc[1]] * 0.5, et, tt));
  }
  return res;
}

template <class T>
T vor0_fn(const Edges<T>& y) {
  return vor_trunc(y, 1.255);
}

// ------------------------------------------- analytic Voronoi score

// Signed Rogers-simplex decomposition of the Voronoi piece of the
// origin inside the cone over S.  Faces with negative orientation
// contribute negatively, which is the analytic continuation used for
// quarters with large circumradius.
template <class T>
T vor_analytic(const Edges<T>& y) {
  const Embedding<T> em = embed(y);
  const Edges<T> x = squares(y);
  // circumcenter from 2 c . p_i = x_i
  const T ccx = y[0] * 0.5;
  const T ccy = (x[1] * 0.5 - em.p2.x * ccx) / em.p2.y;
  const T ccz = (x[2] * 0.5 - em.p3.x * ccx - em.p3.y * ccy) / em.p3.z;
  const Vec3<T> cc{ccx, ccy, ccz};
  const T rho = sqrt(dot(cc, cc));

  const Vec3<T> pts[3] = {em.p1, em.p2, em.p3};
  const int faces[3][3] = {{0, 1, 2}, {0, 2, 1}, {1, 2, 0}};  // (a,b,other)
  T volsum = mkconst<T>(0.0);
  for (auto& fc : faces) {
    const Vec3<T>&pa = pts[fc[0]], &pb = pts[fc[1]], &po = pts[fc[2]];
    const T xa = dot(pa, pa), xb = dot(pb, pb);
    // face circumcenter cf = alpha pa + beta pb with 2 cf.pa = xa, ...
    const T ab = dot(pa, pb);
    const T det = xa * xb - sqr(ab);
    const T alpha = (xa * xb - xb * ab) * 0.5 / det;
    const T beta = (xa * xb - xa * ab) * 0.5 / det;
    const Vec3<T> cf = scale(alpha, pa) + scale(beta, pb);
    const T eta2 = dot(cf, cf);
    Vec3<T> n = cross(pa, pb);
    // orientation sign of the face: circumcenter vs the remaining vertex
    const T so = dot(n, po);
    const T sc = dot(n, cc - cf);
    // the two Rogers pieces along edges (0,pa) and (0,pb)
    const T ya[2] = {sqrt(xa), sqrt(xb)};
    const Vec3<T>* edge[2] = {&pa, &pb};
    const Vec3<T>* other[2] = {&pb, &pa};
    for (int e = 0; e < 2; ++e) {
      const T a = ya[e] * 0.5;
      const T q = sqrt(detail::clip0(eta2 - sqr(a), "vor: face eta below half-edge"));
      const T r =
          sqrt(detail::clip0(sqr(rho) - eta2, "vor: rad below face eta"));
      const T piece = a * q * r / 6.0;
      // in-plane side of cf relative to the edge, toward the other vertex
      const T xaE = dot(*edge[e], *edge[e]);
      const Vec3<T> perp = *other[e] - scale(dot(*other[e], *edge[e]) / xaE, *edge[e]);
      const T s1 = dot(cf - scale(dot(cf, *edge[e]) / xaE, *edge[e]), perp);
      // accumulate with sign s1 * s2 (s2 from so*sc)
      const T s2 = so * sc;
      auto signed_piece = [&](Trilean t1, Trilean t2) -> T {
        const T p1 = (t1 == Trilean::kTrue) ? piece : -piece;
        return (t2 == Trilean::kTrue) ? p1 : -p1;
      };
      const Trilean c1 = cmp_ge(value_of(s1), Interval(0.0));
      const Trilean c2 = cmp_ge(value_of(s2), Interval(0.0));
      if (c1 == Trilean::kMaybe || c2 == Trilean::kMaybe) {
        volsum = volsum + hull(piece, -piece);
      } else {
        volsum = volsum + signed_piece(c1, c2);
      }
    }
  }
  if constexpr (std::is_same_v<T, Interval>) {
    // the Voronoi piece is contained in the simplex: intersect the
    // signed enclosure with the trivial volume window [0, vol(S)]
    Interval vs(0.0, vol_y(y).hi);
    volsum = Interval(std::max(volsum.lo, vs.lo), std::min(volsum.hi, vs.hi));
  }
  return 4.0 * (-cst<T>(Constants::get().delta_oct) * volsum + sol_y(y) / 3.0);
}

// --------------------------------------------------- quarter scores

template <class T>
T octavor0_fn(const Edges<T>& y) {
  return 0.5 * (vor0_fn(y) + vor0_fn(hat(y)));
}
template <class T>
T octavor_fn(const Edges<T>& y) {
  return 0.5 * (vor_analytic(y) + vor_analytic(hat(y)));
}

enum class MuTag { kGamma, kVor };

template <class T>
T mu_upright(const Edges<T>& y, MuTag tag) {
  return tag == MuTag::kGamma ? gamma_fn(y) : vor_analytic(y);
}

// nu(Q) = (mu(Q) + mu(Q^) + vor0(Q) - vor0(Q^)) / 2
template <class T>
T nu_fn(const Edges<T>& y, MuTag tag_q, MuTag tag_hat) {
  const Edges<T> h = hat(y);
  return 0.5 * (mu_upright(y, tag_q) + mu_upright(h, tag_hat) + vor0_fn(y) -
                vor0_fn(h));
}

// The intrinsic type of an upright quarter: compression when both
// faces along the diagonal have circumradius at most sqrt(2).
template <class T>
T nu_typed(const Edges<T>& y) {
  const T s2 = cst<T>(Constants::get().sqrt2);
  const T e126 = eta(y[0], y[1], y[5]);
  const T e135 = eta(y[0], y[2], y[4]);
  const Trilean c1 = cmp_ge(value_of(s2), value_of(e126));
  const Trilean c2 = cmp_ge(value_of(s2), value_of(e135));
  if (c1 == Trilean::kTrue && c2 == Trilean::kTrue)
    return nu_fn(y, MuTag::kGamma, MuTag::kGamma);
  if (c1 == Trilean::kFalse || c2 == Trilean::kFalse)
    return nu_fn(y, MuTag::kVor, MuTag::kVor);
  return hull(nu_fn(y, MuTag::kGamma, MuTag::kGamma),
              nu_fn(y, MuTag::kVor, MuTag::kVor));
}

// Flat-quarter mu (diagonal on the fourth edge): compression when
// both faces along the diagonal, (234) and (456), are small.
template <class T>
T mu_flat(const Edges<T>& y) {
  const T s2 = cst<T>(Constants::get().sqrt2);
  const T e234 = eta(y[1], y[2], y[3]);
  const T e456 = eta(y[3], y[4], y[5]);
  const Trilean c1 = cmp_ge(value_of(s2), value_of(e234));
  const Trilean c2 = cmp_ge(value_of(s2), value_of(e456));
  if (c1 == Trilean::kTrue && c2 == Trilean::kTrue) return gamma_fn(y);
  if (c1 == Trilean::kFalse || c2 == Trilean::kFalse) return vor_analytic(y);
  return hull(gamma_fn(y), vor_analytic(y));
}

// squander: tau_f = sol * zeta * pt - f
template <class T>
T tau_of(const T& score, const Edges<T>& y) {
  return cst<T>(Constants::get().zpt) * sol_y(y) - score;
}

// --------------------------------------------- crown / anc / kappa

// Rogers simplex scalar data in closed form (avoids re-embedding):
// dih(R) = atan(r/q), sol(R) = dih(R) - asin(a sin(dih)/b).
template <class T>
struct RogersParts {
  T q, r, dih, sol, vol;
};

template <class T>
RogersParts<T> rogers_parts(const T& a, const T& b, const T& c) {
  RogersParts<T> rp;
  rp.q = sqrt(detail::clip0(sqr(b) - sqr(a), "rogers b < a"));
  rp.r = sqrt(detail::clip0(sqr(c) - sqr(b), "rogers c < b"));
  rp.dih = atan2q(rp.r, rp.q);
  rp.sol = rp.dih -
           detail_score::asin_frac(a * rp.r, b * sqrt(sqr(rp.q) + sqr(rp.r)));
  rp.vol = a * rp.q * rp.r / 6.0;
  return rp;
}

// vol( R(a,b,c) \ B(t) ) -- the part of a Rogers simplex outside the
// ball of radius t.  Piecewise in where t falls among a <= b <= c;
// continuous across the case boundaries, so straddling cells hull the
// adjacent cases.
template <class T>
T vol_rogers_outside(const T& a, const T& b, const T& c, double t) {
  const T tt = mkconst<T>(t);
  const T zero = mkconst<T>(0.0);

  auto case_low = [&]() {  // t <= a
    const RogersParts<T> rp = rogers_parts(a, b, c);
    return rp.vol - powi(tt, 3) * rp.sol / 3.0;
  };
  // asin(num/den) with the quotient clipped into [0,1]; falls back to
  // the full [0, pi/2] range when the denominator can vanish
  auto asin_frac = [](const T& n, const T& d) { return detail_score::asin_frac(n, d); };
  auto case_mid = [&]() {  // a <= t <= b
    const RogersParts<T> rp = rogers_parts(a, b, c);
    // sqrt(c^2-a^2) rewritten as sqrt(q^2+r^2) to avoid cancellation
    const T asin_a = asin_frac(a * rp.r, b * sqrt(sqr(rp.q) + sqr(rp.r)));
    return (a / 3.0) * ((sqr(a) * 0.5 - 1.5 * sqr(tt)) * rp.dih +
                        rp.q * rp.r * 0.5) +
           powi(tt, 3) / 3.0 * asin_a;
  };
  auto case_high = [&]() {  // b <= t <= c
    const RogersParts<T> rp = rogers_parts(a, b, c);
    const T g = sqrt(detail::clip0(sqr(tt) - sqr(min(b, tt)), "t below b"));
    const T phi0ang = atan2q(g, rp.q);
    const T asin_hi = asin_frac(a * rp.r, b * sqrt(sqr(rp.q) + sqr(rp.r)));
    const T asin_lo = asin_frac(a * g, b * sqrt(sqr(rp.q) + sqr(g)));
    return (a / 3.0) * ((sqr(a) * 0.5 - 1.5 * sqr(tt)) * (rp.dih - phi0ang) +
                        rp.q * (rp.r - g) * 0.5) +
           powi(tt, 3) / 3.0 * (asin_hi - asin_lo);
  };

  const Trilean t_ge_c = cmp_ge(Interval(t), value_of(c));
  if (t_ge_c == Trilean::kTrue) return zero;
  const Trilean a_ge_t = cmp_ge(value_of(a), Interval(t));
  const Trilean b_ge_t = cmp_ge(value_of(b), Interval(t));
  T res = zero;
  bool have = false;
  auto add = [&](const T& v) {
    res = have ? hull(res, v) : v;
    have = true;
  };
  if (a_ge_t != Trilean::kFalse) add(case_low());
  if (a_ge_t != Trilean::kTrue && b_ge_t != Trilean::kFalse) add(case_mid());
  if (b_ge_t != Trilean::kTrue) add(case_high());
  if (t_ge_c == Trilean::kMaybe) add(zero);
  return res;
}


// Score of the Rogers cell itself: 4(-delta_oct vol(R) + sol(R)/3).
// This is what the analytic Voronoi function means on a Rogers
// simplex (the cell is its own Voronoi piece); it vanishes exactly at
// Rogers's bound R(1, eta(2,2,2), sqrt(3/2)).
template <class T>
T vor_rogers_cell(const T& a, const T& b, const T& c) {
  const RogersParts<T> rp = rogers_parts(a, b, c);
  return 4.0 * (-cst<T>(Constants::get().delta_oct) * rp.vol + rp.sol / 3.0);
}
template <class T>
T tau_rogers_cell(const T& a, const T& b, const T& c) {
  const RogersParts<T> rp = rogers_parts(a, b, c);
  return cst<T>(Constants::get().zpt) * rp.sol - vor_rogers_cell(a, b, c);
}

// crown(h): score contribution (-4 delta_oct x volume) of the full
// rotational solid over the spherical cap of arcradius theta,
// cos(theta) = h / eta0(h), outside B(t0) and under the bisector.
template <class T>
T crown_fn(const T& h) {
  const Constants& c = Constants::get();
  const T e0 = eta0(h);
  const T t03 = powi(cst<T>(c.t0), 3);
  const T vol_rot = (2.0 * pi_const<T>() / 3.0) *
                    (h * (sqr(e0) - sqr(h)) * 0.5 - t03 * (1.0 - h / e0));
  return -4.0 * cst<T>(c.delta_oct) * vol_rot;
}

// anc(y1,y2,y6): correction along one anchor edge of an extended
// wedge.  The two Rogers pieces R(y1/2, eta126, eta0) and
// R(y2/2, eta126, eta0) replace the rotational crown over the azimuth
// slice they occupy; that slice has width dih(R(y1/2, eta126, eta0)).
// Zero when the face circumradius reaches eta0 (extension skipped).
template <class T>
T anc_fn(const T& y1, const T& y2, const T& y6) {
  const Constants& cc = Constants::get();
  const T zero = mkconst<T>(0.0);
  const T h = y1 * 0.5;
  const T c = eta0(h);
  const T b = eta(y1, y2, y6);
  const Trilean skip = cmp_ge(value_of(b), value_of(c));
  if (skip == Trilean::kTrue) return zero;
  const double t0 = cc.t0.d;
  const T bc = min(b, c);
  const T slice = rogers_parts(h, bc, c).dih / (2.0 * pi_const<T>());
  const T v = -4.0 * cst<T>(cc.delta_oct) *
                  (vol_rogers_outside(h, bc, c, t0) +
                   vol_rogers_outside(y2 * 0.5, bc, c, t0)) -
              slice * crown_fn(h);
  return skip == Trilean::kFalse ? v : hull(zero, v);
}

// kappa(S) = crown(y1/2) dih(S)/(2 pi) + anc(y1,y2,y6) + anc(y1,y3,y5)
template <class T>
T kappa_fn(const Edges<T>& y) {
  return crown_fn(y[0] * 0.5) * dih_y(y) / (2.0 * pi_const<T>()) +
         anc_fn(y[0], y[1], y[5]) + anc_fn(y[0], y[2], y[4]);
}

// ------------------------------------- truncated corner cells (tcc)

// sol'(y1,y2,y6; psi): the spherical correction from cutting the
// corner cell along the plane (0,v,v1)^perp; zero once the face
// circumradius reaches the cutting cone.
template <class T>
T sol_prime(const T& y1, const T& y2, const T& y6, const T& cpsi) {
  const T zero = mkconst<T>(0.0);
  const T cprime = y1 / (2.0 * cpsi);
  const T b = eta(y1, y2, y6);
  const Trilean skip = cmp_ge(value_of(b), value_of(cprime));
  if (skip == Trilean::kTrue) return zero;
  const RogersParts<T> rp = rogers_parts(y1 * 0.5, min(b, cprime), cprime);
  const T v = rp.dih * (1.0 - cpsi) - rp.sol;
  return skip == Trilean::kFalse ? v : hull(zero, v);
}

// chi0: analytic score of the truncated corner cell with parameter
// lambda at a convex corner (2 pi - dih variant at a concave one).
template <class T>
T chi0_fn(const Edges<T>& y, double lambda, bool concave = false) {
  const Constants& c = Constants::get();
  const T t0 = cst<T>(c.t0);
  const T lam = mkconst<T>(lambda);
  const T cpsi = (sqr(y[0]) + sqr(t0) - sqr(lam)) / (2.0 * y[0] * t0);
  T dihS = dih_y(y);
  if (concave) dihS = 2.0 * pi_const<T>() - dihS;
  const T phi0 = cst<T>(c.phi0);
  const T e126 = eta(y[0], y[1], y[5]);
  const T e135 = eta(y[0], y[2], y[4]);
  return dihS * (1.0 - cpsi) * phi0 -
         (sol_prime(y[0], y[1], y[5], cpsi) + sol_prime(y[0], y[2], y[4], cpsi)) *
             phi0 +
         corr_A(y[0] * 0.5) * dihS -
         4.0 * cst<T>(c.delta_oct) *
             (quoin(y[0] * 0.5, e126, t0) + quoin(y[0] * 0.5, e135, t0));
}

// untruncated corner cell C0^u(y, dih): score and squander
template <class T>
T tcc_u_score(const T& y, const T& dihv, double lambda) {
  const Constants& c = Constants::get();
  const T t0 = cst<T>(c.t0);
  const T lam = mkconst<T>(lambda);
  const T cpsi = (sqr(y) + sqr(t0) - sqr(lam)) / (2.0 * y * t0);
  return dihv * ((1.0 - cpsi) * cst<T>(c.phi0) + corr_A(y * 0.5));
}
template <class T>
T tcc_u_squander(const T& y, const T& dihv, double lambda) {
  const Constants& c = Constants::get();
  const T t0 = cst<T>(c.t0);
  const T lam = mkconst<T>(lambda);
  const T cpsi = (sqr(y) + sqr(t0) - sqr(lam)) / (2.0 * y * t0);
  return cst<T>(c.zpt) * dihv * (1.0 - cpsi) - tcc_u_score(y, dihv, lambda);
}

// f(y1,y2): squander of the union of two overlapping corner cells
// with lambda = 1.945 at corners 3.2 apart.
template <class T>
T f_overlap(const T& y1, const T& y2) {
  const Constants& c = Constants::get();
  const double lambda = 1.945, ell = 3.2;
  const T t0 = cst<T>(c.t0);
  const T lam = mkconst<T>(lambda);
  const T l = mkconst<T>(ell);
  const Edges<T> s1{y1, t0, y2, lam, l, lam};
  const Edges<T> s2{y2, t0, y1, lam, l, lam};
  const T a1 = dih_y(s1);
  const T a2 = dih_y(s2);
  const T sol = sol_y(s2);
  const T phi0 = cst<T>(c.phi0);
  const T phi1 = phi_fn(y1 * 0.5, t0);
  const T phi2 = phi_fn(y2 * 0.5, t0);
  const T pi = pi_const<T>();
  return 2.0 * (cst<T>(c.zpt) - phi0) * sol +
         2.0 * (a1 * (1.0 - y1 / (2.0 * t0)) * (phi0 - phi1) +
                a2 * (1.0 - y2 / (2.0 * t0)) * (phi0 - phi2)) +
         tcc_u_squander(y1, pi - 2.0 * a1, lambda) +
         tcc_u_squander(y2, pi - 2.0 * a2, lambda);
}

// ------------------------------------- deformation polynomials V0/V1

template <class T>
T v_poly(int j, const Edges<T>& y) {
  const Edges<T> x = squares(y);
  T b1 = corr_B(y[0]), b2 = corr_B(y[1]), b3 = corr_B(y[2]);
  if (j == 1) {
    const T zpt = cst<T>(Constants::get().zpt);
    b1 = b1 - zpt;
    b2 = b2 - zpt;
    b3 = b3 - zpt;
  }
  return -b1 * y[0] * delta_partial_x(5, x) + b2 * y[1] * u_fn(x[0], x[2], x[4]) -
         b3 * y[2] * delta_partial_x(3, x);
}

// -4 delta_oct u135 d/dx5 (quo(R135) + quo(R315)), the A14 bound target
template <class T>
T quo_partial_x5(const T& y1, const T& y3, const T& y5) {
  const Constants& cc = Constants::get();
  const T x1 = sqr(y1), x3 = sqr(y3), x5 = sqr(y5);
  const T u = u_fn(x1, x3, x5);
  const T b = eta(y1, y3, y5);
  const T u5 = 2.0 * (x1 + x3) - 2.0 * x5;
  const T deta_dx5 = (x1 * x3 / u) * (1.0 - x5 * u5 / u) / (2.0 * b);
  const double t0 = cc.t0.d;
  const T dsum = dquoin_db(y1 * 0.5, b, mkconst<T>(t0)) +
                 dquoin_db(y3 * 0.5, b, mkconst<T>(t0));
  return -4.0 * cst<T>(cc.delta_oct) * u * dsum * deta_dx5;
}

// ------------------------------------------------- piecewise scores

// vor_x: the analytic Voronoi function where the simplex can be of
// type S_C (fourth edge <= 2.77, or both faces along it small),
// truncation at t0 otherwise.  Upper envelope over the context.
template <class T>
T vor_x_max(const Edges<T>& y) {
  const T v0 = vor0_fn(y);
  const T s2 = cst<T>(Constants::get().sqrt2);
  Trilean gate = cmp_ge(Interval(2.77), value_of(y[3]));
  if (gate != Trilean::kTrue) {
    const Trilean g2 = cmp_ge(value_of(s2), value_of(eta(y[1], y[2], y[3])));
    const Trilean g3 = cmp_ge(value_of(s2), value_of(eta(y[3], y[4], y[5])));
    Trilean both = (g2 == Trilean::kTrue && g3 == Trilean::kTrue)
                       ? Trilean::kTrue
                       : ((g2 == Trilean::kFalse || g3 == Trilean::kFalse)
                              ? Trilean::kFalse
                              : Trilean::kMaybe);
    if (gate == Trilean::kFalse)
      gate = both;
    else if (both == Trilean::kTrue)
      gate = Trilean::kTrue;
  }
  if (gate == Trilean::kFalse) return v0;
  return max(v0, vor_analytic(y));
}

// sigma_hat: the flat-quarter upper bound of Section 3 (compression /
// analytic / truncated branches gated by circumradius and edge tests).
template <class T>
T sigma_hat(const Edges<T>& y) {
  const T s2 = cst<T>(Constants::get().sqrt2);
  const T e234 = eta(y[1], y[2], y[3]);
  const T e456 = eta(y[3], y[4], y[5]);
  const Trilean g234 = cmp_ge(value_of(s2), value_of(e234));
  const Trilean g456 = cmp_ge(value_of(s2), value_of(e456));
  bool have = false;
  T res = mkconst<T>(0.0);
  auto add = [&](const T& v) {
    res = have ? max(res, v) : v;
    have = true;
  };
  if (g234 != Trilean::kFalse && g456 != Trilean::kFalse) add(gamma_fn(y));
  if (g234 != Trilean::kTrue) add(vor_analytic(y));
  const T v0 = vor0_fn(y);
  if (cmp_ge(value_of(y[3]), Interval(2.6)) != Trilean::kFalse &&
      cmp_ge(value_of(y[0]), Interval(2.2)) != Trilean::kFalse)
    add(v0);
  if (cmp_ge(value_of(y[3]), Interval(2.7)) != Trilean::kFalse) add(v0);
  if (g456 != Trilean::kTrue) add(v0);
  if (!have) throw domain_error("sigma_hat: no branch applies");
  return res;
}

// sigma_tilde: the Section 3.10 upper bounds for flat quarters
// (penalised truncated branches), used by the A16 records.
template <class T>
T sigma_tilde(const Edges<T>& y) {
  const T s2 = cst<T>(Constants::get().sqrt2);
  bool have = false;
  T res = mkconst<T>(0.0);
  auto add = [&](const T& v) {
    res = have ? max(res, v) : v;
    have = true;
  };
  add(mu_flat(y));
  const T v0 = vor0_fn(y);
  if (cmp_ge(value_of(y[3]), Interval(2.6)) != Trilean::kFalse &&
      cmp_ge(value_of(y[0]), Interval(2.2)) != Trilean::kFalse)
    add(v0 - mkconst<T>(0.0063));
  if (cmp_ge(value_of(y[3]), Interval(2.7)) != Trilean::kFalse)
    add(v0 - mkconst<T>(0.0114));
  if (cmp_ge(value_of(max(y[1], y[2])), Interval(2.23)) != Trilean::kFalse &&
      cmp_ge(value_of(y[3]), Interval(2.77)) != Trilean::kFalse &&
      cmp_ge(value_of(eta(y[3], y[4], y[5])), value_of(s2)) != Trilean::kFalse)
    add(v0);
  return res;
}

}  // namespace packbound
