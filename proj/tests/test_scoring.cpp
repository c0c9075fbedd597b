#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "mc_support.hpp"
#include "packbound/scoring.hpp"

using namespace packbound;

namespace {

const Constants& C = Constants::get();
std::mt19937_64 rng(24680);
double uni(double a, double b) {
  return std::uniform_real_distribution<double>(a, b)(rng);
}

Edges<double> random_box(const double lo[6], const double hi[6]) {
  for (;;) {
    Edges<double> y;
    for (int i = 0; i < 6; ++i) y[i] = uni(lo[i], hi[i]);
    try {
      if (delta_y(y) > 0.05) return y;
    } catch (const domain_error&) {
    }
  }
}

Edges<double> random_quasi() {
  const double lo[6] = {2, 2, 2, 2, 2, 2};
  const double hi[6] = {2.51, 2.51, 2.51, 2.51, 2.51, 2.51};
  return random_box(lo, hi);
}

Edges<double> random_upright() {
  const double s8 = 2 * std::sqrt(2.0);
  const double lo[6] = {2.51, 2, 2, 2, 2, 2};
  const double hi[6] = {s8, 2.51, 2.51, 2.51, 2.51, 2.51};
  return random_box(lo, hi);
}

double tau0_pt(const Edges<double>& y) { return C.zpt.d * sol_y(y) - vor0_fn(y); }

}  // namespace

TEST_CASE("constants anchors") {
  CHECK(8 * C.pt.d > 0.4428);
  CHECK(8 * C.pt.d < 0.4430);
  CHECK(C.delta_oct.d > 0.72090);
  CHECK(C.delta_oct.d < 0.72091);
  CHECK(C.target.d > 0.8192);
  CHECK(C.target.d < 0.8194);
  CHECK(C.phi0.d == doctest::Approx(-0.5666365).epsilon(1e-6));
  CHECK(C.zpt.d - C.phi0.d < 0.6671);
  CHECK(C.pt.iv.contains(C.pt.d));
  CHECK(width(C.pt.iv) < 1e-14);
  CHECK(midpoint(C.D(3, 2)) == doctest::Approx(0.13943).epsilon(1e-12));
  for (int n = 4; n <= 7; ++n)
    CHECK(midpoint(C.t_n(n)) ==
          doctest::Approx(2 * 0.06585 + (n - 4) * 0.13943).epsilon(1e-9));
}

TEST_CASE("phi / A / B") {
  CHECK(corr_A(C.t0.d) == doctest::Approx(0.0).epsilon(1e-15));
  CHECK(corr_B(2 * C.t0.d) == doctest::Approx(C.phi0.d).epsilon(1e-12));
  CHECK(phi_fn(C.t0.d, C.t0.d) == doctest::Approx(C.phi0.d).epsilon(1e-12));
}

TEST_CASE("quoin: boundary, derivative, quadrature") {
  CHECK(quoin(1.0, 1.255, 1.255) == 0.0);
  CHECK(quoin(1.0, 1.3, 1.255) == 0.0);
  const double pts[5][3] = {{1.0, 1.1, 1.2}, {1.0, 1.1, 1.255},
                            {1.05, 1.12, 1.255}, {1.0, 1.2, 1.3},
                            {1.1, 1.2, 1.41}};
  for (auto& p : pts) {
    double a = p[0], b = p[1], c = p[2], h = 1e-6;
    double fd = (quoin(a, b + h, c) - quoin(a, b - h, c)) / (2 * h);
    double an = -a * std::pow(c * c - b * b, 1.5) /
                (3 * b * std::sqrt(b * b - a * a));
    CHECK(fd == doctest::Approx(an).epsilon(1e-6));
    CHECK(midpoint(dquoin_db(Interval(a), Interval(b), Interval(c))) ==
          doctest::Approx(an).epsilon(1e-9));
  }
  for (auto& p : pts) {
    double a = p[0], b = p[1], c = p[2];
    long n = 20000;
    double acc = 0;
    for (long i = 0; i < n; ++i) {
      double s = b + (c - b) * (i + 0.5) / n;
      acc += a * std::pow(c * c - s * s, 1.5) / (3 * s * std::sqrt(s * s - a * a));
    }
    acc *= (c - b) / n;
    CHECK(quoin(a, b, c) == doctest::Approx(acc).epsilon(1e-6));
  }
  Interval q = quoin(Interval(1.0), Interval(1.05, 1.2), Interval(1.255));
  CHECK(q.contains(quoin(1.0, 1.1, 1.255)));
  CHECK(q.lo >= 0.0);
}

TEST_CASE("compression anchors") {
  Edges<double> reg{2, 2, 2, 2, 2, 2};
  CHECK(std::abs(gamma_fn(reg) - C.pt.d) < 1e-12);
  Edges<double> quad{2, 2, 2, 2 * std::sqrt(2.0), 2, 2};
  CHECK(std::abs(gamma_fn(quad)) < 1e-12);
  for (int i = 0; i < 100; ++i) {
    Edges<double> y = random_upright();
    CHECK(gamma_fn(hat(y)) == doctest::Approx(gamma_fn(y)).epsilon(1e-11));
  }
}

TEST_CASE("truncated score anchors") {
  Edges<double> flat{2, 2, 2, 2 * std::sqrt(2.0), 2, 2};
  CHECK(std::abs(vor0_fn(flat) - 0.00898) < 1e-5);
  CHECK(std::abs(tau0_pt(flat) - 0.0593) < 1e-5);
}

TEST_CASE("rogers cell scores vanish at the classical bounds") {
  double e = eta(2.0, 2.0, 2.0);
  CHECK(std::abs(vor_rogers_cell(1.0, e, std::sqrt(2.0))) < 1e-9);
  CHECK(std::abs(tau_rogers_cell(1.0, e, std::sqrt(1.5))) < 1e-9);
  for (int i = 0; i < 2000; ++i) {
    double a = uni(1.0, C.t0.d);
    double b = uni(std::max(a, e), C.t0.d);
    CHECK(tau_rogers_cell(a, b, C.t0.d) >= -1e-12);
  }
}

TEST_CASE("analytic voronoi matches its geometric definition") {
  const Edges<double> cases[3] = {
      {2, 2, 2, 2, 2, 2}, {2.1, 2.05, 2.2, 2.15, 2.25, 2.1},
      {2.4, 2.1, 2.2, 2.3, 2.2, 2.45}};
  for (int k = 0; k < 3; ++k) {
    double rad = rad_y(cases[k]);
    double mcv = mc::score_voronoi_cone(cases[k], rad * (1 + 1e-12),
                                        1000 + k, 6000000);
    CHECK(std::abs(vor_analytic(cases[k]) - mcv) < 2.5e-3);
  }
  Edges<double> reg{2, 2, 2, 2, 2, 2};
  CHECK(vor_analytic(reg) == doctest::Approx(C.pt.d).epsilon(1e-12));
}

TEST_CASE("vor_trunc matches its geometric definition") {
  const Edges<double> cases[3] = {
      {2, 2, 2, 2, 2, 2}, {2.2, 2.1, 2.3, 2.4, 2.2, 2.05},
      {2.5, 2.05, 2.45, 2.3, 2.2, 2.4}};
  for (int k = 0; k < 3; ++k) {
    double mcv = mc::score_voronoi_cone(cases[k], C.t0.d, 2000 + k, 6000000);
    CHECK(std::abs(vor0_fn(cases[k]) - mcv) < 2.5e-3);
  }
}

TEST_CASE("octavor identities") {
  for (int i = 0; i < 100; ++i) {
    Edges<double> y = random_upright();
    CHECK(octavor0_fn(y) == doctest::Approx(octavor0_fn(hat(y))).epsilon(1e-12));
    CHECK(octavor0_fn(y) ==
          doctest::Approx(0.5 * (vor0_fn(y) + vor0_fn(hat(y)))).epsilon(1e-12));
  }
  Edges<double> sym{2.6, 2.2, 2.4, 2.3, 2.4, 2.2};
  CHECK(octavor0_fn(sym) == doctest::Approx(vor0_fn(sym)).epsilon(1e-12));
}

TEST_CASE("nu identities") {
  Edges<double> sym{2.6, 2.2, 2.4, 2.3, 2.4, 2.2};
  CHECK(nu_fn(sym, MuTag::kGamma, MuTag::kGamma) ==
        doctest::Approx(gamma_fn(sym)).epsilon(1e-11));
  for (int i = 0; i < 100; ++i) {
    Edges<double> y = random_upright();
    double lhs = nu_fn(y, MuTag::kGamma, MuTag::kGamma);
    double rhs = 0.5 * (gamma_fn(y) + gamma_fn(hat(y))) +
                 0.5 * (vor0_fn(y) - vor0_fn(hat(y)));
    CHECK(lhs == doctest::Approx(rhs).epsilon(1e-11));
  }
}

TEST_CASE("tau duality is exact") {
  for (int i = 0; i < 200; ++i) {
    Edges<double> y = random_quasi();
    double s = sol_y(y);
    CHECK(tau0_pt(y) + vor0_fn(y) == doctest::Approx(C.zpt.d * s).epsilon(1e-13));
  }
  Edges<double> reg{2, 2, 2, 2, 2, 2};
  CHECK(std::abs(C.zpt.d * sol_y(reg) - gamma_fn(reg)) < 1e-6);
}

TEST_CASE("kappa symmetry and geometric identity") {
  for (int i = 0; i < 50; ++i) {
    Edges<double> y = random_upright();
    Edges<double> sw = permute(y, 1, 3, 2, 4, 6, 5);
    try {
      CHECK(kappa_fn(y) == doctest::Approx(kappa_fn(sw)).epsilon(1e-10));
    } catch (const domain_error&) {
    }
  }
  const Edges<double> cases[2] = {{2.6, 2.1, 2.1, 2.9, 2.05, 2.05},
                                  {2.55, 2.0, 2.2, 3.0, 2.1, 2.0}};
  for (int k = 0; k < 2; ++k) {
    double rad = rad_y(cases[k]);
    double e0 = eta0(cases[k][0] / 2);
    REQUIRE(rad >= e0);
    double geo = mc::kappa_geometric(cases[k], 4000 + k, 2000000);
    CHECK(std::abs(kappa_fn(cases[k]) - geo) < 2e-3);
  }
}

TEST_CASE("chi0 anchors and geometric identity") {
  Edges<double> c1{2.3, 2.3, 2.3, 2.9, 2, 2};
  CHECK(std::abs(chi0_fn(c1, 1.6) - (-0.103981)) < 1e-5);
  Edges<double> c2{2, 2, 2.51, 3.2, 2, 2.51};
  CHECK(std::abs(chi0_fn(c2, 1.6) - (-0.0718957)) < 1e-5);
  const Edges<double> cases[2] = {{2.2, 2.2, 2.2, 3.15, 2.05, 2.05},
                                  {2.4, 2.2, 2.3, 3.2, 2.1, 2.15}};
  for (int k = 0; k < 2; ++k) {
    mc::TccRegion reg(cases[k], 1.6);
    REQUIRE(!reg.faces_meet());
    double geo = mc::chi0_geometric(cases[k], 1.6, 5000 + k, 2000000);
    CHECK(std::abs(chi0_fn(cases[k], 1.6) - geo) < 2e-3);
  }
  mc::TccRegion regm(c1, 1.6);
  CHECK(regm.faces_meet());
  double geo = mc::chi0_geometric(c1, 1.6, 4242, 2000000);
  CHECK(chi0_fn(c1, 1.6) > geo);
  CHECK(std::abs(geo - (-0.105102)) < 2e-3);
}

TEST_CASE("tcc untruncated cells") {
  const double pi = std::acos(-1.0);
  CHECK(tcc_u_squander(2.51, pi, 1.6) > 0.32);
  for (int i = 0; i < 50; ++i) {
    double y = uni(2.0, 2.51), d = uni(0.3, pi);
    double full = tcc_u_squander(y, pi, 1.6);
    CHECK(tcc_u_squander(y, d, 1.6) == doctest::Approx(d / pi * full).epsilon(1e-12));
  }
}

TEST_CASE("overlap function f") {
  for (int i = 0; i < 100; ++i) {
    double a = uni(2.0, 2.51), b = uni(2.0, 2.51);
    CHECK(f_overlap(a, b) == doctest::Approx(f_overlap(b, a)).epsilon(1e-12));
  }
  const double lam = 1.945, ell = 3.2, t0 = C.t0.d;
  Edges<double> s1{2, t0, 2, lam, ell, lam};
  double a1 = dih_y(s1);
  double so = sol_y(s1);
  double direct = 2 * (C.zpt.d - C.phi0.d) * so +
                  4 * (a1 * (1 - 1.0 / t0) * (C.phi0.d - phi_fn(1.0, t0))) +
                  2 * tcc_u_squander(2.0, std::acos(-1.0) - 2 * a1, lam);
  CHECK(f_overlap(2.0, 2.0) == doctest::Approx(direct).epsilon(1e-12));
  CHECK(f_overlap(2.0, 2.0) > 0.887);
  CHECK(f_overlap(2.51, 2.51) > 0.887);
}

TEST_CASE("V polynomials") {
  for (int i = 0; i < 100; ++i) {
    Edges<double> y = random_quasi();
    double v1 = v_poly(1, y);
    Edges<double> x = squares(y);
    double shift = -C.zpt.d * (-y[0] * delta_partial_x(5, x) +
                               y[1] * u_fn(x[0], x[2], x[4]) -
                               y[2] * delta_partial_x(3, x));
    CHECK(v1 == doctest::Approx(v_poly(0, y) + shift).epsilon(1e-10));
    for (int j : {3, 5}) {
      double h = 0.05;
      Edges<double> xp = x, xm = x;
      xp[j] += h;
      xm[j] -= h;
      auto vp = [&](const Edges<double>& xs) {
        Edges<double> ys;
        for (int k = 0; k < 6; ++k) ys[k] = std::sqrt(xs[k]);
        return v_poly(0, ys);
      };
      double second = vp(xp) - 2 * v_poly(0, y) + vp(xm);
      CHECK(std::abs(second) < 1e-9);
    }
  }
}

TEST_CASE("quo_partial_x5 against finite differences") {
  int done = 0;
  while (done < 100) {
    double y1 = uni(2.0, 2.51), y3 = uni(2.0, 2.51), y5 = uni(2.0, 2.51);
    if (eta(y1, y3, y5) > C.t0.d - 0.02) continue;
    ++done;
    double x5 = y5 * y5, h = 1e-6;
    auto qq = [&](double x5v) {
      double yv = std::sqrt(x5v);
      double b = eta(y1, y3, yv);
      return quoin(y1 / 2, b, C.t0.d) + quoin(y3 / 2, b, C.t0.d);
    };
    double fd = (qq(x5 + h) - qq(x5 - h)) / (2 * h);
    double target = -4 * C.delta_oct.d * u_fn(y1 * y1, y3 * y3, x5) * fd;
    CHECK(quo_partial_x5(y1, y3, y5) == doctest::Approx(target).epsilon(1e-5));
  }
}

TEST_CASE("interval scoring contains point scoring") {
  for (int i = 0; i < 150; ++i) {
    Edges<double> y = random_quasi();
    Edges<Interval> yi;
    Edges<double> yp;
    for (int k = 0; k < 6; ++k) {
      yi[k] = Interval(y[k] - uni(0, 0.02), y[k] + uni(0, 0.02));
      yp[k] = std::clamp(y[k], yi[k].lo, yi[k].hi);
    }
    try {
      CHECK(vor0_fn(yi).contains(vor0_fn(yp)));
      CHECK(gamma_fn(yi).contains(gamma_fn(yp)));
      CHECK(vor_analytic(yi).contains(vor_analytic(yp)));
      CHECK(v_poly(0, yi).contains(v_poly(0, yp)));
    } catch (const domain_error&) {
    }
  }
  for (int i = 0; i < 80; ++i) {
    Edges<double> y = random_upright();
    Edges<Interval> yi;
    Edges<double> yp;
    for (int k = 0; k < 6; ++k) {
      yi[k] = Interval(y[k] - uni(0, 0.02), y[k] + uni(0, 0.02));
      yp[k] = std::clamp(y[k], yi[k].lo, yi[k].hi);
    }
    try {
      CHECK(kappa_fn(yi).contains(kappa_fn(yp)));
      CHECK(octavor0_fn(yi).contains(octavor0_fn(yp)));
      CHECK(nu_typed(yi).contains(nu_typed(yp)));
    } catch (const domain_error&) {
    }
  }
}

TEST_CASE("gradient evaluation matches finite differences") {
  int done = 0;
  while (done < 100) {
    Edges<double> y = random_quasi();
    Edges<Grad> yg;
    for (int k = 0; k < 6; ++k) yg[k] = Grad::var(Interval(y[k]), k);
    Grad g;
    try {
      g = vor0_fn(yg);
    } catch (const domain_error&) {
      continue;
    }
    ++done;
    for (int k = 0; k < 6; ++k) {
      double h = 1e-6;
      Edges<double> yp = y, ym = y;
      yp[k] += h;
      ym[k] -= h;
      double fd = (vor0_fn(yp) - vor0_fn(ym)) / (2 * h);
      CHECK(midpoint(g.d[k]) == doctest::Approx(fd).epsilon(5e-4));
    }
  }
}

TEST_CASE("sigma branches behave") {
  Edges<double> y{2, 2, 2, 2.6, 2, 2};
  CHECK(eta(y[1], y[2], y[3]) < std::sqrt(2.0));
  CHECK(eta(y[3], y[4], y[5]) < std::sqrt(2.0));
  CHECK(mu_flat(y) == doctest::Approx(gamma_fn(y)).epsilon(1e-12));
  CHECK(sigma_hat(y) >= gamma_fn(y) - 1e-12);
  Edges<double> z{2.6, 2.1, 2.1, 3.1, 2.2, 2.2};
  CHECK(eta(z[1], z[2], z[3]) > std::sqrt(2.0));
  CHECK(vor_x_max(z) == doctest::Approx(vor0_fn(z)).epsilon(1e-12));
}
