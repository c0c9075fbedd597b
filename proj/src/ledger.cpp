#include <algorithm>
#include <cmath>
#include <cstdio>

#include "packbound/catalog.hpp"

// The in-text arithmetic claims, each checked in interval arithmetic.

namespace packbound {

namespace {

struct L {
  std::vector<LedgerCheck> checks;
  const Constants& c = Constants::get();

  void lt(const std::string& name, Interval lhs, Interval rhs,
          const std::string& claim) {
    checks.push_back({name, claim, lhs.hi < rhs.lo, lhs, rhs});
  }
  void le(const std::string& name, Interval lhs, Interval rhs,
          const std::string& claim) {
    checks.push_back({name, claim, lhs.lo <= rhs.hi, lhs, rhs});
  }
  void inside(const std::string& name, Interval v, double lo, double hi,
              const std::string& claim) {
    checks.push_back({name, claim, v.lo > lo && v.hi < hi, v, Interval(lo, hi)});
  }
};

Interval dec_iv(double v) { return dec(v).iv; }

}  // namespace

std::vector<LedgerCheck> run_ledger() {
  L l;
  const Constants& c = Constants::get();
  const Interval pt = c.pt.iv, target = c.target.iv, pi = c.pi.iv;
  const Interval xg = c.xi_gamma.iv, xv = c.xi_v.iv, xgp = c.xi_gamma_prime.iv,
                 xk = c.xi_kappa.iv, xkg = c.xi_kappa_gamma.iv;

  // fundamental constants
  l.inside("pt-window", 8.0 * pt, 0.4428, 0.4430, "8 pt in (0.4428, 0.4430)");
  l.inside("delta-oct-window", c.delta_oct.iv, 0.72090, 0.72091,
           "delta_oct in (0.72090, 0.72091)");
  l.inside("target-window", target, 0.8192, 0.8194,
           "(4 pi zeta - 8) pt in (0.8192, 0.8194)");
  l.lt("phi0-prime", c.zpt.iv - c.phi0.iv, dec_iv(0.6671), "zeta pt - phi0 < 0.6671");

  // squander table coherence
  for (int r = 4; r <= 10; ++r)
    l.le("t-step-" + std::to_string(r), c.t_n(r + 1),
         c.t_n(r) + dec_iv(0.13943), "t_r + 0.13943 >= t_{r+1}");
  for (int a = 4; a <= 9; ++a)
    for (int b = a; b <= 9; ++b)
      l.le("s-subadd-" + std::to_string(a) + std::to_string(b),
           c.s_n(a) + c.s_n(b), c.s_n(a + b - 4), "s_a + s_b <= s_{a+b-4}");
  for (int n1 = 3; n1 <= 6; ++n1)
    for (int k1 = 0; k1 <= 2; ++k1)
      for (int n2 = 3; n2 <= 6; ++n2)
        for (int k2 = std::max(0, 2 - k1); k2 <= 2; ++k2) {
          if (n1 + k1 < 4 || n2 + k2 < 4) continue;
          l.le("D-superadd", c.D(n1 + n2 - 2, k1 + k2 - 2),
               c.D(n1, k1) + c.D(n2, k2),
               "D(n1,k1)+D(n2,k2) >= D(n1+n2-2,k1+k2-2)");
        }
  // pt-multiple forms of the squander table
  const double tmul[] = {2.378, 4.896, 7.414, 9.932, 10.916};
  for (int n = 4; n <= 8; ++n)
    l.lt("t-pt-" + std::to_string(n), dec_iv(tmul[n - 4]) * pt, c.t_n(n),
         "t_n exceeds its pt multiple");
  const double smul[] = {1.03, 2.06, 3.09, 4.12};
  for (int n = 5; n <= 8; ++n)
    l.lt("s-pt-" + std::to_string(n), c.s_n(n), -dec_iv(smul[n - 5]) * pt,
         "s_n below its negative pt multiple");

  // penalty bookkeeping
  l.lt("pimax-1", 8.0 * dec_iv(0.008), c.pi_max.iv, "8(0.008) < pi_max");
  l.lt("pimax-2", 2.0 * dec_iv(0.008) + dec_iv(0.04683), c.pi_max.iv,
       "2(0.008) + 0.04683 < pi_max");
  l.lt("pimax-3", dec_iv(0.03344) + 4.0 * dec_iv(0.008), c.pi_max.iv,
       "0.03344 + 4(0.008) < pi_max");
  l.le("pen-s3minus", c.pen_s3_minus.iv, 3.0 * xg, "0.04683 = 3 xi_gamma");
  l.le("pen-s3minus-b", 3.0 * xg, c.pen_s3_minus.iv, "0.04683 = 3 xi_gamma");
  l.inside("pen-s4plus", 3.0 * xg + xkg - c.pen_s4_plus.iv, -1e-12, 1e-12,
           "0.03344 = 3 xi_gamma + xi_kappa_gamma");
  l.inside("xi-kg", xk + xg - xkg, -1e-12, 1e-12,
           "xi_kappa_gamma = xi_kappa + xi_gamma");

  // anchor-count arithmetic
  for (int k = 0; k <= 6; ++k)
    l.lt("six-anchors-k" + std::to_string(k), target,
         double(k) * dec_iv(1.01104) -
             (2.0 * pi - double(6 - k) * dec_iv(1.23)) * dec_iv(0.78701),
         "k(1.01104) - (2pi - (6-k)1.23) 0.78701 > target");
  l.lt("three-concentrated", dec_iv(0.5606),
       3.0 * dec_iv(1.01104) - pi * dec_iv(0.78701),
       "3(1.01104) - pi(0.78701) > 0.5606");
  l.lt("gap-angles", 2.0 * pi, 3.0 * dec_iv(1.65) + 2.0 * dec_iv(0.956),
       "3(1.65) + 2(0.956) > 2 pi");
  l.lt("five-anchor-gaps", 2.0 * pi,
       dec_iv(1.23) + 2.0 * dec_iv(1.65) + 2.0 * dec_iv(0.956),
       "1.23 + 2(1.65) + 2(0.956) > 2 pi");
  l.lt("drop-angle-five", 2.0 * pi, dec_iv(2.46) + 4.0 * dec_iv(0.956),
       "2.46 + 4(0.956) > 2 pi");
  l.lt("drop-angle-two", 2.0 * pi, 2.0 * (dec_iv(2.46) + dec_iv(0.956)),
       "2(2.46 + 0.956) > 2 pi");
  l.lt("two-s4plus", target, 2.0 * (dec_iv(0.4) + dec_iv(0.02274)),
       "2(0.4 + 0.02274) > target");
  l.lt("quarter-count", target, 25.0 * dec_iv(0.033),
       "25 quarters squander beyond the target");
  l.lt("s3minus-count", target, dec_iv(0.5606) + 8.0 * dec_iv(0.033),
       "0.5606 + 8(0.033) > target");

  // erasure arithmetic
  l.lt("erase-tall", 2.0 * xgp + xv - dec_iv(0.02274), Interval(0.0),
       "2 xi_gamma' + xi_v - 0.02274 <= 0 (tall diagonal)");
  l.le("erase-short", 2.0 * xg + xk, dec_iv(0.00222),
       "2 xi_gamma + xi_kappa <= 0.00222");
  l.le("pen-balance-1", -dec_iv(0.03883) + 3.0 * xg, dec_iv(0.008),
       "-0.03883 + 3 xi_gamma = 0.008");
  l.le("pen-balance-2", -dec_iv(0.0325) + 2.0 * xg + dec_iv(0.00928),
       dec_iv(0.008), "-0.0325 + 2 xi_gamma + 0.00928 = 0.008");
  l.lt("xi-kg-neg", xkg + xg, dec_iv(0.008), "xi_kappa_gamma + xi_gamma < 0.008");
  l.lt("masked-1", xkg + 2.0 * xv, -dec_iv(0.0063),
       "xi_kappa_gamma + 2 xi_v < -0.0063");
  l.lt("masked-2", xk + 3.0 * xv, -dec_iv(0.0114),
       "xi_kappa + 3 xi_v < -0.0114");
  l.le("masked-3", dec_iv(-0.004131) + xkg + xv, -dec_iv(0.0114),
       "-0.004131 + xi_kappa_gamma + xi_v <= -0.0114");
  l.inside("adjusted-penalty", xg + 2.0 * xv + dec_iv(0.0114) - dec_iv(0.034052),
           -1e-12, 1e-12, "0.034052 = xi_gamma + 2 xi_v + 0.0114");

  // triangle penalties of Section 5
  Interval tri = (xg + 2.0 * xv + xkg) * dec_iv(0.75);
  l.lt("tri-penalty-1", tri, dec_iv(0.0254),
       "(xi_gamma + 2 xi_v + xi_kappa_gamma) 3/4 < 0.0254");
  l.lt("tri-penalty-2", (xg + 2.0 * xv + xkg) * 0.5 + dec_iv(0.008) / 3.0,
       dec_iv(0.0254), "second triangle penalty bound");
  l.lt("tri-penalty-3",
       (xg + 2.0 * xv + dec_iv(0.0114)) * (2.0 / 3.0) + dec_iv(0.008) / 3.0,
       dec_iv(0.0254), "third triangle penalty bound");

  // pi_tau schedule over admissible edge counts
  for (int k0 = 0; k0 <= 7; ++k0)
    for (int k1 = 0; k0 + k1 <= 7; ++k1)
      for (int k2 = 0; k0 + k1 + k2 <= 7; ++k2) {
        Interval v = dec_iv(0.04683) +
                     double(k0 + 2 * k2 - 3) * dec_iv(0.008) / 3.0 +
                     dec_iv(0.0066) * double(k2);
        char nm[32];
        std::snprintf(nm, sizeof nm, "pi-tau-%d%d%d", k0, k1, k2);
        l.inside(nm, v, 0.0, 0.1224, "pi_tau bound within [0, 0.1224]");
      }

  // final comparisons of Section 5
  l.lt("flat-wins-41", c.D(3, 1) + dec_iv(1.47) * pt + xg + 2.0 * xv,
       dec_iv(3.07) * pt, "3.07pt > D(3,1) + 1.47pt + xi_gamma + 2 xi_v");
  l.lt("flat-wins-50",
       c.t_n(5) + 4.0 * xv + xg + 2.0 * dec_iv(1.47) * pt,
       c.D(3, 2) + 2.0 * dec_iv(3.07) * pt,
       "D(3,2) + 2(3.07)pt > t5 + 4 xi_v + xi_gamma + 2(1.47)pt");
  l.lt("pentagon", dec_iv(5.66) * pt,
       dec_iv(3.07) * pt + c.D(4, 1) - 3.0 * xg,
       "3.07pt + D(4,1) - 3 xi_gamma > 5.66pt");
  l.lt("nonagon-a", target, c.t_n(9) + c.t_n(4), "t9 + t4 > target");
  l.lt("nonagon-b", target, c.t_n(9) + dec_iv(4.14) * pt, "t9 + 4.14pt > target");
  l.lt("nonagon-c", target, c.t_n(9) + 4.0 * dec_iv(0.55) * pt,
       "t9 + 4(0.55)pt > target");
  l.lt("decagon", target, c.t_n(10) + dec_iv(0.55) * pt,
       "t10 + 0.55pt > target");
  l.lt("concave-corner", dec_iv(0.297),
       dec_iv(0.32) - 2.0 * dec_iv(0.017) * (c.zpt.iv - c.phi0.iv),
       "0.32 - 2(0.017) phi0' > 0.297");
  l.lt("three-concave", target, 3.0 * dec_iv(0.297) - c.pi_max.iv,
       "3(0.297) - pi_max > target");

  // geometric spot constants used inline
  auto delta_at = [](double x1, double x2, double x3, double x4, double x5,
                     double x6) {
    Edges<Interval> x{dec_iv(x1), dec_iv(x2), dec_iv(x3),
                      dec_iv(x4), dec_iv(x5), dec_iv(x6)};
    return delta_x(x);
  };
  l.lt("deform-448", Interval(0.0),
       delta_at(2.51 * 2.51, 4, 4, 3.2 * 3.2, 4, 2.51 * 2.51),
       "Delta(2.51^2,4,4,3.2^2,4,2.51^2) > 0");
  l.lt("deform-307", Interval(0.0),
       delta_at(4, 4, 2.51 * 2.51, 4, 4, 3.07 * 3.07),
       "Delta(2^2,2^2,(2t0)^2,2^2,2^2,3.07^2) > 0");
  l.lt("deform-32", Interval(0.0),
       delta_at(2.2 * 2.2, 4, 2.51 * 2.51, 4, 4, 3.2 * 3.2),
       "Delta(2.2^2,2^2,(2t0)^2,2^2,2^2,3.2^2) > 0");
  l.lt("special-forced-lo", delta_at(2.51 * 2.51, 4, 4, 3.1145 * 3.1145, 4, 4),
       Interval(0.0), "Delta < 0 just above 3.114467");
  l.lt("special-forced-hi", Interval(0.0),
       delta_at(2.51 * 2.51, 4, 4, 3.1144 * 3.1144, 4, 4),
       "Delta > 0 just below 3.114467");
  l.lt("coplanar-root-lo", Interval(0.0), delta_at(8, 4, 4, 3.35 * 3.35, 4, 8),
       "largest root of Delta(8,4,4,x^2,4,8) above 3.35");
  l.lt("coplanar-root-hi", delta_at(8, 4, 4, 3.37 * 3.37, 4, 8), Interval(0.0),
       "largest root of Delta(8,4,4,x^2,4,8) below 3.37");
  {
    Edges<Interval> y{dec_iv(2.697), dec_iv(2.51), dec_iv(2.0),
                      dec_iv(2.0), dec_iv(2.0), dec_iv(2.0)};
    l.lt("eta-type-bound", c.sqrt2.iv, eta(y[0], y[1], y[2]),
         "eta(2.697, 2.51, 2) > sqrt2");
  }
  {
    Interval a1 = arc(dec_iv(2.51), dec_iv(2.51), dec_iv(3.2));
    l.lt("arc-lower", dec_iv(1.38), a1, "arc(2.51,2.51,3.2) > 1.38");
    Interval a2 = arc(dec_iv(2.0), dec_iv(2.0), dec_iv(3.2));
    l.lt("arc-upper", a2, dec_iv(1.86), "arc(2,2,3.2) < 1.86");
    l.lt("perimeter", 2.0 * pi,
         8.0 * arc(dec_iv(2.51), dec_iv(2.51), dec_iv(2.0)),
         "8 arc(2.51,2.51,2) > 2 pi (no octagons)");
  }

  // side-by-side constants of the special-adjacent family
  {
    const double plain[] = {-3.58, -2.715, -1.517, -0.858, -0.358, -0.186};
    const double joined[] = {-3.58, -2.715, -1.517, -0.858, -0.349, -0.177};
    for (int i = 0; i < 6; ++i) {
      char nm[24];
      std::snprintf(nm, sizeof nm, "score-shift-%d", i + 1);
      Interval diff = dec_iv(joined[i]) - dec_iv(plain[i]);
      l.checks.push_back({nm, "special-adjacent score constants within 0.009",
                          diff.lo >= 0 && diff.hi <= 0.009 + 1e-12, diff,
                          Interval(0.0, 0.009)});
    }
    const double tplain[] = {-3.3407, -2.945, -1.5035, -1.0009,
                             -0.7787, -0.4475, -0.2568};
    const double tjoined[] = {-3.48, -3.06, -1.58, -1.06, -0.83, -0.50, -0.2886};
    for (int i = 0; i < 7; ++i) {
      char nm[24];
      std::snprintf(nm, sizeof nm, "squander-gain-%d", i + 1);
      Interval gain = dec_iv(tplain[i]) - (dec_iv(tjoined[i]) - dec_iv(0.06585));
      l.checks.push_back({nm,
                          "special-adjacent squander constants improve by 0.06445",
                          gain.lo >= 0.06445, gain, Interval(0.06445, 1.0)});
    }
  }
  return l.checks;
}

}  // namespace packbound
