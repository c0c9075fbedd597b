#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "packbound/simplex.hpp"

using namespace packbound;

namespace {

std::mt19937_64 rng(987654);

double uni(double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

Edges<double> random_feasible(double lo = 2.0, double hi = 2.6) {
  for (;;) {
    Edges<double> y;
    for (auto& v : y) v = uni(lo, hi);
    try {
      if (delta_y(y) > 1.0) return y;
    } catch (const domain_error&) {
    }
  }
}

// coordinate oracle: embed and measure with plain vector geometry
struct Oracle {
  Vec3<double> p1, p2, p3;
  explicit Oracle(const Edges<double>& y) {
    auto em = embed(y);
    p1 = em.p1;
    p2 = em.p2;
    p3 = em.p3;
  }
  double dih_edge(Vec3<double> a, Vec3<double> b, Vec3<double> c,
                  Vec3<double> d) const {
    Vec3<double> ab = b - a;
    Vec3<double> u = c - a, v = d - a;
    double t1 = dot(u, ab) / dot(ab, ab), t2 = dot(v, ab) / dot(ab, ab);
    Vec3<double> pu = u - scale(t1, ab), pv = v - scale(t2, ab);
    return std::acos(
        std::min(1.0, std::max(-1.0, dot(pu, pv) / (norm(pu) * norm(pv)))));
  }
  double dih1() const { return dih_edge({0, 0, 0}, p1, p2, p3); }
  double dih2() const { return dih_edge({0, 0, 0}, p2, p1, p3); }
  double dih3() const { return dih_edge({0, 0, 0}, p3, p1, p2); }
  // Van Oosterom-Strackee
  double sol() const {
    double num = std::abs(dot(p1, cross(p2, p3)));
    double d = norm(p1) * norm(p2) * norm(p3) + dot(p1, p2) * norm(p3) +
               dot(p1, p3) * norm(p2) + dot(p2, p3) * norm(p1);
    return 2.0 * std::atan2(num, d);
  }
  double vol() const { return std::abs(dot(p1, cross(p2, p3))) / 6.0; }
  double circumradius() const {
    double x1 = dot(p1, p1), x2 = dot(p2, p2), x3 = dot(p3, p3);
    double cx = x1 / (2 * p1.x);
    double cy = (x2 / 2 - p2.x * cx) / p2.y;
    double cz = (x3 / 2 - p3.x * cx - p3.y * cy) / p3.z;
    return std::sqrt(cx * cx + cy * cy + cz * cz);
  }
};

}  // namespace

TEST_CASE("delta basics") {
  Edges<double> reg{2, 2, 2, 2, 2, 2};
  CHECK(delta_y(reg) == doctest::Approx(128.0).epsilon(1e-12));
  Oracle o(reg);
  CHECK(delta_y(reg) == doctest::Approx(144 * o.vol() * o.vol()).epsilon(1e-9));
  auto dl = [](double x) {
    Edges<double> q{8, 4, 4, x * x, 4, 8};
    return delta_x(q);
  };
  CHECK(dl(3.35) > 0);  // largest root near 3.36
  CHECK(dl(3.37) < 0);
  Edges<double> s48{2.51 * 2.51, 4, 4, 3.2 * 3.2, 4, 2.51 * 2.51};
  CHECK(delta_x(s48) > 0);
}

TEST_CASE("delta = 288 vol^2 on random simplices") {
  for (int i = 0; i < 1000; ++i) {
    Edges<double> y = random_feasible();
    Oracle o(y);
    CHECK(delta_y(y) == doctest::Approx(144 * o.vol() * o.vol()).epsilon(1e-9));
  }
}

TEST_CASE("delta partials match finite differences") {
  for (int i = 0; i < 200; ++i) {
    Edges<double> x = squares(random_feasible());
    for (int k = 0; k < 6; ++k) {
      double h = 1e-6;
      Edges<double> xp = x, xm = x;
      xp[k] += h;
      xm[k] -= h;
      double fd = (delta_x(xp) - delta_x(xm)) / (2 * h);
      CHECK(delta_partial_x(k, x) == doctest::Approx(fd).epsilon(1e-6));
    }
  }
}

TEST_CASE("u function") {
  CHECK(u_fn(4.0, 4.0, 4.0) == doctest::Approx(48.0));
  double p = 3.7, q = 5.1;
  double r = sqr(std::sqrt(p) + std::sqrt(q));
  CHECK(u_fn(p, q, r) == doctest::Approx(0.0).epsilon(1e-9));
}

TEST_CASE("eta") {
  CHECK(eta(2.0, 2.0, 2.0) == doctest::Approx(2.0 / std::sqrt(3.0)).epsilon(1e-12));
  CHECK(eta(2.697, 2.51, 2.0) > std::sqrt(2.0));
  CHECK_THROWS_AS(eta(1.0, 2.0, 3.0), domain_error);
}

TEST_CASE("arc") {
  const double pi = std::acos(-1.0);
  CHECK(arc(2.0, 2.0, 2.0) == doctest::Approx(pi / 3).epsilon(1e-12));
  CHECK(arc(2.51, 2.51, 3.2) > 1.38);
  CHECK(arc(2.0, 2.0, 3.2) < 1.86);
}

TEST_CASE("dihedral anchors") {
  Edges<double> reg{2, 2, 2, 2, 2, 2};
  CHECK(dih_y(reg) == doctest::Approx(std::acos(1.0 / 3)).epsilon(1e-12));
  const double s8 = 2 * std::sqrt(2.0);
  Edges<double> crit{s8, 2, 2.51, 2.51, 2.51, 2};
  CHECK(dih_y(crit) == doctest::Approx(std::acos(-1.0) / 2).epsilon(1e-9));
  Edges<double> big{s8, 2, 2.51, 3.2, 2.51, 2};
  CHECK(dih_y(big) > 2.3);
  Edges<double> other{s8, 2, 2.51, 2, 2.51, 2};
  CHECK(dih_y(other) > 1.16);
}

TEST_CASE("dih and sol match the coordinate oracle") {
  for (int i = 0; i < 1000; ++i) {
    Edges<double> y = random_feasible();
    Oracle o(y);
    CHECK(dih_y(y) == doctest::Approx(o.dih1()).epsilon(1e-9));
    CHECK(dih2_y(y) == doctest::Approx(o.dih2()).epsilon(1e-9));
    CHECK(dih3_y(y) == doctest::Approx(o.dih3()).epsilon(1e-9));
    CHECK(std::abs(sol_y(y) - o.sol()) < 1e-9);
  }
}

TEST_CASE("sol anchors") {
  Edges<double> reg{2, 2, 2, 2, 2, 2};
  CHECK(sol_y(reg) == doctest::Approx(std::acos(23.0 / 27)).epsilon(1e-12));
  const double s8 = std::sqrt(8.0);
  Edges<double> oct{2, 2, 2, s8, s8, s8};
  CHECK(sol_y(oct) == doctest::Approx(std::acos(-1.0) / 2).epsilon(1e-12));
}

TEST_CASE("rad") {
  Edges<double> reg{2, 2, 2, 2, 2, 2};
  CHECK(rad_y(reg) == doctest::Approx(std::sqrt(1.5)).epsilon(1e-12));
  const double s8 = std::sqrt(8.0);
  Edges<double> corner{2, 2, 2, s8, s8, s8};
  CHECK(rad_y(corner) == doctest::Approx(std::sqrt(3.0)).epsilon(1e-12));
  for (int i = 0; i < 500; ++i) {
    Edges<double> y = random_feasible();
    Oracle o(y);
    CHECK(rad_y(y) == doctest::Approx(o.circumradius()).epsilon(1e-9));
    double worst =
        std::max(std::max(eta(y[0], y[1], y[5]), eta(y[0], y[2], y[4])),
                 std::max(eta(y[1], y[2], y[3]), eta(y[3], y[4], y[5])));
    CHECK(rad_y(y) >= worst - 1e-12);
  }
}

TEST_CASE("beta_psi limits") {
  const double pi = std::acos(-1.0);
  double theta = arc(2.2, 2.1, 2.4);
  CHECK(beta_psi_cos(1.0, 2.2, 2.1, 2.4) == doctest::Approx(0.0).epsilon(1e-9));
  CHECK(beta_psi_cos(std::cos(theta), 2.2, 2.1, 2.4) ==
        doctest::Approx(pi / 2).epsilon(1e-6));
  CHECK_THROWS_AS(beta_psi_cos(std::cos(theta) - 0.1, 2.2, 2.1, 2.4),
                  domain_error);
}

TEST_CASE("rogers simplices") {
  double e = eta(2.0, 2.0, 2.0);
  Edges<double> r = rogers(1.0, e, std::sqrt(1.5));
  CHECK(r[2] == doctest::Approx(std::sqrt(1.5)).epsilon(1e-12));
  CHECK(delta_y(r) > 0);
  CHECK_THROWS_AS(rogers(1.2, 1.1, 1.3), domain_error);
  Edges<double> d = rogers(1.1, 1.1, 1.1);
  CHECK(delta_y(d) == doctest::Approx(0.0).epsilon(1e-12));
  Edges<double> r2 = rogers(1.0, 1.1, 1.2);
  Oracle o(r2);
  CHECK(dih_y(r2) == doctest::Approx(o.dih1()).epsilon(1e-9));
  CHECK(std::abs(sol_y(r2) - o.sol()) < 1e-9);
}

TEST_CASE("hat involution") {
  Edges<double> y{2.6, 2, 2.1, 2.2, 2.3, 2.4};
  Edges<double> h = hat(y);
  CHECK(h == Edges<double>{2.6, 2.4, 2.3, 2.2, 2.1, 2});
  CHECK(hat(h) == y);
  for (int i = 0; i < 200; ++i) {
    Edges<double> s = random_feasible();
    CHECK(delta_y(hat(s)) == doctest::Approx(delta_y(s)).epsilon(1e-12));
  }
}

TEST_CASE("relabeling invariance") {
  for (int i = 0; i < 200; ++i) {
    Edges<double> y = random_feasible();
    Edges<double> p = permute(y, 2, 1, 3, 5, 4, 6);  // swap v1, v2
    CHECK(delta_y(p) == doctest::Approx(delta_y(y)).epsilon(1e-12));
    CHECK(rad_y(p) == doctest::Approx(rad_y(y)).epsilon(1e-10));
    CHECK(sol_y(p) == doctest::Approx(sol_y(y)).epsilon(1e-10));
    CHECK(dih_y(p) == doctest::Approx(dih2_y(y)).epsilon(1e-10));
    CHECK(dih2_y(p) == doctest::Approx(dih_y(y)).epsilon(1e-10));
  }
}

TEST_CASE("dih monotone increasing in x4") {
  for (int i = 0; i < 500; ++i) {
    Edges<double> x = squares(random_feasible(2.0, 2.5));
    Edges<double> xp = x;
    xp[3] += 1e-5;
    if (delta_x(xp) <= 0) continue;
    CHECK(dih_x(xp) > dih_x(x));
  }
}

TEST_CASE("e_min anchors") {
  Edges<double> reg{2, 2, 2, 2, 2, 2};
  CHECK(e_min(reg, 2.0, 2.0, 2.0) ==
        doctest::Approx(4 * std::sqrt(2.0 / 3)).epsilon(1e-12));
  double x0 = std::sqrt(2.51 * 2.51 - 2.0);
  Edges<double> s36{2, 2.51, 2.51, 2 * x0, 2.51, 2.51};
  CHECK(e_min(s36, 2.0, 2.51, 2.51) ==
        doctest::Approx(2 * std::sqrt(2.0)).epsilon(1e-9));
  Edges<double> s25{2, 2, 2, 2 * std::sqrt(2.0), 2.51, 2.51};
  CHECK(e_min(s25, 2.51, 2.0, 2.0) > 2.77);
}

TEST_CASE("interval forms contain point forms") {
  for (int i = 0; i < 400; ++i) {
    Edges<double> y = random_feasible();
    Edges<Interval> yi;
    Edges<double> yp;
    for (int k = 0; k < 6; ++k) {
      yi[k] = Interval(y[k] - uni(0, 0.05), y[k] + uni(0, 0.05));
      yp[k] = std::clamp(y[k], yi[k].lo, yi[k].hi);
    }
    try {
      CHECK(dih_y(yi).contains(dih_y(yp)));
      CHECK(sol_y(yi).contains(sol_y(yp)));
      CHECK(delta_y(yi).contains(delta_y(yp)));
      CHECK(rad_y(yi).contains(rad_y(yp)));
    } catch (const domain_error&) {
      // wide boxes may cross a domain boundary; fine for this property
    }
  }
}

TEST_CASE("interval dih on degenerate cells stays in [0,pi]") {
  Edges<Interval> yi;
  for (int k = 0; k < 6; ++k) yi[k] = Interval(2.0, 3.4);
  Interval d = dih_y(yi);  // delta straddles zero on this box
  CHECK(d.lo >= 0.0);
  CHECK(d.hi <= std::acos(-1.0) * (1 + 1e-12));
}

TEST_CASE("fourth_point rejects infeasible systems") {
  Edges<double> reg{2, 2, 2, 2, 2, 2};
  CHECK_THROWS_AS(e_min(reg, 0.1, 0.1, 0.1), domain_error);
}
