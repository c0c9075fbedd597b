#include "packbound/constants.hpp"

#include <sstream>

namespace packbound {

namespace {

Constants build() {
  Constants c;
  const Interval two(2.0);
  c.pi = Num(detail::widened(std::acos(-1.0), std::acos(-1.0), 1));
  c.sqrt2 = Num(sqrt(two));
  c.sqrt8 = Num(sqrt(Interval(8.0)));
  c.two_sqrt2 = Num(2.0 * c.sqrt2.iv);
  c.zeta_inv = Num(2.0 * atan(sqrt(two) / 5.0));
  c.zeta = Num(1.0 / c.zeta_inv.iv);
  c.pt = Num(-c.pi.iv / 3.0 + 2.0 * c.zeta_inv.iv);
  c.delta_oct = Num((c.pi.iv - 2.0 * c.zeta_inv.iv) / c.sqrt8.iv);
  c.t0 = dec(1.255);
  // phi0 = phi(t0,t0) = (2/3)(2 - 2 delta_oct t0^3)
  c.phi0 = Num((2.0 / 3.0) * (2.0 - 2.0 * c.delta_oct.iv * powi(c.t0.iv, 3)));
  c.zpt = Num(c.zeta.iv * c.pt.iv);
  c.target = Num((4.0 * c.pi.iv * c.zeta.iv - 8.0) * c.pt.iv);
  c.xi_gamma = dec(0.01561);
  c.xi_v = dec(0.003521);
  c.xi_gamma_prime = dec(0.00935);
  c.xi_kappa = dec(-0.029);
  c.xi_kappa_gamma = dec(-0.01339);
  c.pi_max = dec(0.06688);
  c.eps = dec(0.00005);
  c.eps_tau = dec(0.0066);
  c.eps_sigma = dec(0.009);
  c.pen_s3_plus = dec(0.008);
  c.pen_s3_minus = dec(0.04683);
  c.pen_s4_plus = dec(0.03344);
  c.lambda_tcc[0] = dec(1.6);
  c.lambda_tcc[1] = dec(1.815);
  c.lambda_tcc[2] = dec(1.945);
  const double tv[] = {0.1317, 0.27113, 0.41056, 0.54999, 0.6045, 0.6978, 0.7891};
  for (int n = 4; n <= 10; ++n) c.t_tab[n] = dec(tv[n - 4]);
  const double sv[] = {0.0, -0.05704, -0.11408, -0.17112, -0.22816, -0.1972};
  for (int n = 4; n <= 9; ++n) c.s_tab[n] = dec(sv[n - 4]);
  return c;
}

}  // namespace

const Constants& Constants::get() {
  static const Constants c = build();
  return c;
}

Interval Constants::t_n(int n) const {
  if (n >= 11) return target.iv;
  if (n >= 4 && n <= 10) return t_tab[n].iv;
  throw domain_error("t_n defined for n >= 4");
}

Interval Constants::s_n(int n) const {
  if (n >= 10) return Interval(0.0);
  if (n >= 4 && n <= 9) return s_tab[n].iv;
  throw domain_error("s_n defined for n >= 4");
}

Interval Constants::D(int n, int k) const {
  if (n + k < 4) throw domain_error("D(n,k) needs n+k >= 4");
  return t_n(n + k) - dec(0.06585).iv * double(k);
}

Interval Constants::Z(int n, int k) const {
  if (n == 3 && k == 1) return eps.iv;
  return s_n(n + k) - double(k) * eps.iv;
}

std::vector<ConstantEntry> constant_entries() {
  const Constants& c = Constants::get();
  std::vector<ConstantEntry> v;
  auto add = [&](const std::string& n, const Num& x, const std::string& p) {
    v.push_back({n, x.iv, p});
  };
  add("pi", c.pi, "derived");
  add("sqrt2", c.sqrt2, "derived");
  add("zeta_inv", c.zeta_inv, "defined: 2 arctan(sqrt2/5)");
  add("zeta", c.zeta, "derived");
  add("pt", c.pt, "defined: -pi/3 + 2 zeta_inv");
  add("delta_oct", c.delta_oct, "defined: (pi - 2 zeta_inv)/sqrt8");
  add("t0", c.t0, "stated: 1.255");
  add("phi0", c.phi0, "derived: phi(t0,t0)");
  add("zeta_pt", c.zpt, "derived");
  add("target", c.target, "derived: (4 pi zeta - 8) pt");
  add("xi_gamma", c.xi_gamma, "stated: 0.01561");
  add("xi_v", c.xi_v, "stated: 0.003521");
  add("xi_gamma_prime", c.xi_gamma_prime, "stated: 0.00935");
  add("xi_kappa", c.xi_kappa, "stated: -0.029");
  add("xi_kappa_gamma", c.xi_kappa_gamma, "stated: -0.01339");
  add("pi_max", c.pi_max, "stated: 0.06688");
  add("eps", c.eps, "stated: 0.00005");
  add("eps_tau", c.eps_tau, "stated: 0.0066");
  add("eps_sigma", c.eps_sigma, "stated: 0.009");
  add("penalty_s3_plus", c.pen_s3_plus, "stated: 0.008");
  add("penalty_s3_minus", c.pen_s3_minus, "stated: 0.04683 = 3 xi_gamma");
  add("penalty_s4_plus", c.pen_s4_plus,
      "stated: 0.03344 = 3 xi_gamma + xi_kappa_gamma");
  for (int n = 4; n <= 10; ++n)
    add("t_" + std::to_string(n), c.t_tab[n], "stated");
  for (int n = 4; n <= 9; ++n)
    add("s_" + std::to_string(n), c.s_tab[n], "stated");
  return v;
}

std::string constants_json() {
  std::ostringstream os;
  os.precision(17);
  os << "{\n";
  const auto entries = constant_entries();
  for (size_t i = 0; i < entries.size(); ++i) {
    const auto& e = entries[i];
    os << "  \"" << e.name << "\": {\"lo\": " << e.value.lo
       << ", \"hi\": " << e.value.hi << ", \"provenance\": \"" << e.provenance
       << "\"}" << (i + 1 < entries.size() ? "," : "") << "\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace packbound
