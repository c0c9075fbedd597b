#pragma once

#include <string>
#include <vector>

#include "packbound/grad.hpp"
#include "packbound/interval.hpp"

namespace packbound {

// A named constant carried both as a rigorous enclosure and as the
// midpoint double used by point evaluation.
struct Num {
  Interval iv;
  double d;

  Num() : iv(0.0), d(0) {}
  explicit Num(const Interval& i) : iv(i), d(midpoint(i)) {}
};

template <class T>
T cst(const Num& c) {
  if constexpr (std::is_same_v<T, double>)
    return c.d;
  else if constexpr (std::is_same_v<T, Interval>)
    return c.iv;
  else
    return T(c.iv);
}

// a decimal literal, padded one ulp each way to cover the
// decimal-to-binary conversion
inline Num dec(double v) { return Num(detail::widened(v, v, 1)); }

struct Constants {
  Num pi, sqrt2, sqrt8, two_sqrt2;
  Num zeta_inv;   // 2 arctan(sqrt2/5)
  Num zeta;
  Num pt;         // -pi/3 + 2 zeta_inv
  Num delta_oct;  // (pi - 2 zeta_inv) / sqrt8
  Num t0;         // 1.255
  Num phi0;       // phi(t0, t0)
  Num zpt;        // zeta * pt
  Num target;     // (4 pi zeta - 8) pt
  Num xi_gamma, xi_v, xi_gamma_prime, xi_kappa, xi_kappa_gamma;
  Num pi_max;
  Num eps;  // 0.00005
  Num eps_tau, eps_sigma;
  Num pen_s3_plus, pen_s3_minus, pen_s4_plus;
  Num lambda_tcc[3];  // 1.6, 1.815, 1.945
  // squander / score targets; t_n for n >= 11 equals `target`,
  // s_n = 0 for n >= 10.
  Num t_tab[11];  // t[4..10] used
  Num s_tab[10];  // s[4..9] used

  Interval t_n(int n) const;
  Interval s_n(int n) const;
  Interval D(int n, int k) const;  // t_{n+k} - 0.06585 k
  Interval Z(int n, int k) const;  // s_{n+k} - k eps, Z(3,1) = eps

  static const Constants& get();
};

// phi(h,t) = (2/3)(2 - delta_oct h t (h+t))
template <class T>
T phi_fn(const T& h, const T& t) {
  const T doct = cst<T>(Constants::get().delta_oct);
  return (2.0 / 3.0) * (2.0 - doct * h * t * (h + t));
}

// A(h) = (1 - h/t0)(phi(h,t0) - phi0)
template <class T>
T corr_A(const T& h) {
  const Constants& c = Constants::get();
  const T t0 = cst<T>(c.t0);
  return (1.0 - h / t0) * (phi_fn(h, t0) - cst<T>(c.phi0));
}

// B(y) = A(y/2) + phi0
template <class T>
T corr_B(const T& y) {
  return corr_A(y * 0.5) + cst<T>(Constants::get().phi0);
}

struct ConstantEntry {
  std::string name;
  Interval value;
  std::string provenance;
};
std::vector<ConstantEntry> constant_entries();
std::string constants_json();

}  // namespace packbound
