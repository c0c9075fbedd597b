#include "packbound/expr.hpp"

#include <cstdlib>
#include <map>
#include <stdexcept>

#include <json.hpp>

namespace packbound {

using nlohmann::json;

Expr Expr::constant(const std::string& dec) {
  Expr e;
  e.kind = Kind::kConst;
  e.text = dec;
  e.cval = std::strtod(dec.c_str(), nullptr);
  return e;
}
Expr Expr::named(const std::string& name) {
  Expr e;
  e.kind = Kind::kNamed;
  e.text = name;
  return e;
}
Expr Expr::variable(int i) {
  Expr e;
  e.kind = Kind::kVar;
  e.var = i;
  return e;
}
Expr Expr::app(const std::string& fn, std::vector<Slot> slots) {
  Expr e;
  e.kind = Kind::kApp;
  e.text = fn;
  e.slots = std::move(slots);
  return e;
}
Expr Expr::app(const std::string& fn, std::vector<Slot> slots, double param,
               const std::string& param_text) {
  Expr e = app(fn, std::move(slots));
  e.param = param;
  e.has_param = true;
  e.param_text = param_text;
  return e;
}

namespace {
Expr binary(Expr::Kind k, Expr a, Expr b) {
  Expr e;
  e.kind = k;
  e.args.push_back(std::move(a));
  e.args.push_back(std::move(b));
  return e;
}
}  // namespace

Expr operator+(Expr a, Expr b) { return binary(Expr::Kind::kAdd, std::move(a), std::move(b)); }
Expr operator-(Expr a, Expr b) { return binary(Expr::Kind::kSub, std::move(a), std::move(b)); }
Expr operator*(Expr a, Expr b) { return binary(Expr::Kind::kMul, std::move(a), std::move(b)); }
Expr operator/(Expr a, Expr b) { return binary(Expr::Kind::kDiv, std::move(a), std::move(b)); }
Expr operator-(Expr a) {
  Expr e;
  e.kind = Expr::Kind::kNeg;
  e.args.push_back(std::move(a));
  return e;
}
Expr emax(std::vector<Expr> args) {
  Expr e;
  e.kind = Expr::Kind::kMax;
  e.args = std::move(args);
  return e;
}
Expr emin(std::vector<Expr> args) {
  Expr e;
  e.kind = Expr::Kind::kMin;
  e.args = std::move(args);
  return e;
}

Interval named_constant(const std::string& name) {
  const Constants& c = Constants::get();
  if (name == "pt") return c.pt.iv;
  if (name == "zpt") return c.zpt.iv;
  if (name == "phi0") return c.phi0.iv;
  if (name == "target") return c.target.iv;
  if (name == "pi") return c.pi.iv;
  if (name == "sqrt2") return c.sqrt2.iv;
  if (name == "two_sqrt2") return c.two_sqrt2.iv;
  if (name == "t0") return c.t0.iv;
  if (name == "delta_oct") return c.delta_oct.iv;
  if (name == "xi_gamma") return c.xi_gamma.iv;
  if (name == "xi_v") return c.xi_v.iv;
  if (name == "xi_gamma_prime") return c.xi_gamma_prime.iv;
  if (name == "xi_kappa") return c.xi_kappa.iv;
  if (name == "pi_max") return c.pi_max.iv;
  if (name == "sqrt421") return sqrt(Interval(421.0));
  if (name.rfind("t_", 0) == 0) return c.t_n(std::atoi(name.c_str() + 2));
  if (name.rfind("s_", 0) == 0) return c.s_n(std::atoi(name.c_str() + 2));
  if (name.rfind("D_", 0) == 0 && name.size() == 5) {
    return c.D(name[2] - '0', name[4] - '0');
  }
  if (name.rfind("Z_", 0) == 0 && name.size() == 5) {
    return c.Z(name[2] - '0', name[4] - '0');
  }
  throw std::runtime_error("unknown named constant: " + name);
}

namespace {

enum class FnId {
  kDih, kDih2, kDih3, kSol, kDelta, kRad, kVol,
  kEta126, kEta135, kEta234, kEta456,
  kU126, kU135, kU234, kU456,
  kGamma, kVor, kVor0, kVorT, kOctavor, kOctavor0,
  kNuGG, kNuGV, kNuVG, kNuVV, kNuMax, kNuTyped,
  kKappa, kMuFlat, kSigmaHat, kSigmaTilde, kVorXMax,
  kV0, kV1, kQuoPartialX5, kFOverlap,
  kBetaPsiCos135, kBetaPsiArc135, kBetaPsiArc126, kDihRogersCut,
  kArc, kQuadCrossDiag, kChi0,
};

const std::map<std::string, FnId>& fn_table() {
  static const std::map<std::string, FnId> t = {
      {"dih", FnId::kDih}, {"dih2", FnId::kDih2}, {"dih3", FnId::kDih3},
      {"sol", FnId::kSol}, {"delta", FnId::kDelta}, {"rad", FnId::kRad},
      {"vol", FnId::kVol},
      {"eta126", FnId::kEta126}, {"eta135", FnId::kEta135},
      {"eta234", FnId::kEta234}, {"eta456", FnId::kEta456},
      {"u126", FnId::kU126}, {"u135", FnId::kU135},
      {"u234", FnId::kU234}, {"u456", FnId::kU456},
      {"gamma", FnId::kGamma}, {"vor", FnId::kVor}, {"vor0", FnId::kVor0},
      {"vor_t", FnId::kVorT}, {"octavor", FnId::kOctavor},
      {"octavor0", FnId::kOctavor0},
      {"nu_gg", FnId::kNuGG}, {"nu_gv", FnId::kNuGV}, {"nu_vg", FnId::kNuVG},
      {"nu_vv", FnId::kNuVV}, {"nu_max", FnId::kNuMax},
      {"nu_typed", FnId::kNuTyped},
      {"kappa", FnId::kKappa}, {"mu_flat", FnId::kMuFlat},
      {"sigma_hat", FnId::kSigmaHat}, {"sigma_tilde", FnId::kSigmaTilde},
      {"vor_x_max", FnId::kVorXMax},
      {"v0", FnId::kV0}, {"v1", FnId::kV1},
      {"quo_partial_x5", FnId::kQuoPartialX5},
      {"f_overlap", FnId::kFOverlap},
      {"beta_psi_cos135", FnId::kBetaPsiCos135},
      {"beta_psi_arc135", FnId::kBetaPsiArc135},
      {"beta_psi_arc126", FnId::kBetaPsiArc126},
      {"dih_rogers_cut", FnId::kDihRogersCut},
      {"arc", FnId::kArc},
      {"quad_cross_diag", FnId::kQuadCrossDiag},
      {"chi0", FnId::kChi0},
  };
  return t;
}

}  // namespace

bool known_function(const std::string& name) { return fn_table().count(name) > 0; }

namespace {

template <class T>
T slot_value(const Slot& s, const std::vector<T>& env) {
  if (s.var >= 0) {
    if (s.var >= int(env.size())) throw std::runtime_error("slot var out of range");
    return env[s.var];
  }
  return mkconst<T>(s.value);
}

template <class T>
Edges<T> edges_of(const std::vector<Slot>& slots, const std::vector<T>& env) {
  if (slots.size() < 6) throw std::runtime_error("simplex reference needs 6 slots");
  Edges<T> y;
  for (int i = 0; i < 6; ++i) y[i] = slot_value(slots[i], env);
  return y;
}

// the envelope over the four mu-tag assignments factorizes:
// max nu = ( max(gamma,vor)(S) + max(gamma,vor)(S^) + vor0(S) - vor0(S^) ) / 2
template <class T>
T nu_max_fn(const Edges<T>& y) {
  const Edges<T> h = hat(y);
  const T mu1 = max(gamma_fn(y), vor_analytic(y));
  const T mu2 = max(gamma_fn(h), vor_analytic(h));
  return 0.5 * (mu1 + mu2 + vor0_fn(y) - vor0_fn(h));
}

// dih(R(y2/2, eta126, y1/(2 cos psi))) with psi = arc(y1, t0, lambda)
template <class T>
T dih_rogers_cut(const Edges<T>& y, double lambda) {
  const T t0 = cst<T>(Constants::get().t0);
  const T lam = mkconst<T>(lambda);
  const T cpsi = (sqr(y[0]) + sqr(t0) - sqr(lam)) / (2.0 * y[0] * t0);
  const T e126 = eta(y[0], y[1], y[5]);
  return rogers_parts(y[1] * 0.5, e126, y[0] / (2.0 * cpsi)).dih;
}

// cross diagonal |v2 - v4| of the quad (0; v1..v4); slots are
// a1 b1 a2 b2 a3 b3 a4 b4 g with g = |v1 - v3|
template <class T>
T quad_cross_diag(const std::vector<Slot>& slots, const std::vector<T>& env) {
  if (slots.size() != 9) throw std::runtime_error("quad needs 9 slots");
  T a1 = slot_value(slots[0], env), b1 = slot_value(slots[1], env);
  T a2 = slot_value(slots[2], env), b2 = slot_value(slots[3], env);
  T a3 = slot_value(slots[4], env), b3 = slot_value(slots[5], env);
  T a4 = slot_value(slots[6], env), b4 = slot_value(slots[7], env);
  T g = slot_value(slots[8], env);
  Edges<T> s1{a1, a3, a2, b2, b1, g};  // (0, v1, v3, v2)
  Embedding<T> em = embed(s1);
  const Vec3<T> zero{mkconst<T>(0.0), mkconst<T>(0.0), mkconst<T>(0.0)};
  Vec3<T> w = fourth_point(zero, em.p1, em.p2, a4, b4, b3, em.p3);
  return norm(w - em.p3);
}

template <class T>
T beta_arc(const Edges<T>& y, double lambda, bool face126) {
  const T t0 = cst<T>(Constants::get().t0);
  const T lam = mkconst<T>(lambda);
  const T cpsi = (sqr(y[0]) + sqr(t0) - sqr(lam)) / (2.0 * y[0] * t0);
  return face126 ? beta_psi_cos(cpsi, y[0], y[1], y[5])
                 : beta_psi_cos(cpsi, y[0], y[2], y[4]);
}

template <class T>
T apply_fn(const Expr& e, const std::vector<T>& env) {
  const FnId id = fn_table().at(e.text);
  switch (id) {
    case FnId::kArc:
      return arc(slot_value(e.slots.at(0), env), slot_value(e.slots.at(1), env),
                 slot_value(e.slots.at(2), env));
    case FnId::kFOverlap:
      return f_overlap(slot_value(e.slots.at(0), env),
                       slot_value(e.slots.at(1), env));
    case FnId::kQuadCrossDiag:
      return quad_cross_diag(e.slots, env);
    default:
      break;
  }
  const Edges<T> y = edges_of(e.slots, env);
  switch (id) {
    case FnId::kDih: return dih_y(y);
    case FnId::kDih2: return dih2_y(y);
    case FnId::kDih3: return dih3_y(y);
    case FnId::kSol: return sol_y(y);
    case FnId::kDelta: return delta_y(y);
    case FnId::kRad: return rad_y(y);
    case FnId::kVol: return vol_y(y);
    case FnId::kEta126: return eta(y[0], y[1], y[5]);
    case FnId::kEta135: return eta(y[0], y[2], y[4]);
    case FnId::kEta234: return eta(y[1], y[2], y[3]);
    case FnId::kEta456: return eta(y[3], y[4], y[5]);
    case FnId::kU126: return u_fn(sqr(y[0]), sqr(y[1]), sqr(y[5]));
    case FnId::kU135: return u_fn(sqr(y[0]), sqr(y[2]), sqr(y[4]));
    case FnId::kU234: return u_fn(sqr(y[1]), sqr(y[2]), sqr(y[3]));
    case FnId::kU456: return u_fn(sqr(y[3]), sqr(y[4]), sqr(y[5]));
    case FnId::kGamma: return gamma_fn(y);
    case FnId::kVor: return vor_analytic(y);
    case FnId::kVor0: return vor0_fn(y);
    case FnId::kVorT: return vor_trunc(y, e.param);
    case FnId::kOctavor: return octavor_fn(y);
    case FnId::kOctavor0: return octavor0_fn(y);
    case FnId::kNuGG: return nu_fn(y, MuTag::kGamma, MuTag::kGamma);
    case FnId::kNuGV: return nu_fn(y, MuTag::kGamma, MuTag::kVor);
    case FnId::kNuVG: return nu_fn(y, MuTag::kVor, MuTag::kGamma);
    case FnId::kNuVV: return nu_fn(y, MuTag::kVor, MuTag::kVor);
    case FnId::kNuMax: return nu_max_fn(y);
    case FnId::kNuTyped: return nu_typed(y);
    case FnId::kKappa: return kappa_fn(y);
    case FnId::kMuFlat: return mu_flat(y);
    case FnId::kSigmaHat: return sigma_hat(y);
    case FnId::kSigmaTilde: return sigma_tilde(y);
    case FnId::kVorXMax: return vor_x_max(y);
    case FnId::kV0: return v_poly(0, y);
    case FnId::kV1: return v_poly(1, y);
    case FnId::kQuoPartialX5: return quo_partial_x5(y[0], y[2], y[4]);
    case FnId::kBetaPsiCos135: {
      const T cpsi = y[0] / mkconst<T>(e.param);
      return beta_psi_cos(cpsi, y[0], y[2], y[4]);
    }
    case FnId::kBetaPsiArc135: return beta_arc(y, e.param, false);
    case FnId::kBetaPsiArc126: return beta_arc(y, e.param, true);
    case FnId::kDihRogersCut: return dih_rogers_cut(y, e.param);
    case FnId::kChi0: return chi0_fn(y, e.param);
    default:
      throw std::runtime_error("unhandled function " + e.text);
  }
}

}  // namespace

template <class T>
T eval_expr(const Expr& e, const std::vector<T>& env) {
  switch (e.kind) {
    case Expr::Kind::kConst:
      if constexpr (std::is_same_v<T, double>)
        return e.cval;
      else
        return T(dec(e.cval).iv);
    case Expr::Kind::kNamed:
      if constexpr (std::is_same_v<T, double>)
        return midpoint(named_constant(e.text));
      else
        return T(named_constant(e.text));
    case Expr::Kind::kVar:
      return env.at(e.var);
    case Expr::Kind::kAdd:
      return eval_expr(e.args[0], env) + eval_expr(e.args[1], env);
    case Expr::Kind::kSub:
      return eval_expr(e.args[0], env) - eval_expr(e.args[1], env);
    case Expr::Kind::kMul:
      return eval_expr(e.args[0], env) * eval_expr(e.args[1], env);
    case Expr::Kind::kDiv:
      return eval_expr(e.args[0], env) / eval_expr(e.args[1], env);
    case Expr::Kind::kNeg:
      return -eval_expr(e.args[0], env);
    case Expr::Kind::kMax: {
      T r = eval_expr(e.args.at(0), env);
      for (size_t i = 1; i < e.args.size(); ++i) r = max(r, eval_expr(e.args[i], env));
      return r;
    }
    case Expr::Kind::kMin: {
      T r = eval_expr(e.args.at(0), env);
      for (size_t i = 1; i < e.args.size(); ++i) r = min(r, eval_expr(e.args[i], env));
      return r;
    }
    case Expr::Kind::kApp:
      return apply_fn(e, env);
  }
  throw std::runtime_error("bad expr");
}

template double eval_expr<double>(const Expr&, const std::vector<double>&);
template Interval eval_expr<Interval>(const Expr&, const std::vector<Interval>&);
template Grad eval_expr<Grad>(const Expr&, const std::vector<Grad>&);

json expr_to_jsonv(const Expr& e) {
  json j;
  switch (e.kind) {
    case Expr::Kind::kConst:
      j["const"] = e.text;
      break;
    case Expr::Kind::kNamed:
      j["named"] = e.text;
      break;
    case Expr::Kind::kVar:
      j["y"] = e.var;
      break;
    case Expr::Kind::kApp: {
      j["fn"] = e.text;
      if (e.has_param) j["param"] = e.param_text;
      json slots = json::array();
      for (const Slot& s : e.slots) {
        if (s.var >= 0)
          slots.push_back(json{{"var", s.var}});
        else
          slots.push_back(json{{"len", s.text}});
      }
      j["slots"] = slots;
      break;
    }
    default: {
      const char* op = e.kind == Expr::Kind::kAdd   ? "+"
                       : e.kind == Expr::Kind::kSub ? "-"
                       : e.kind == Expr::Kind::kMul ? "*"
                       : e.kind == Expr::Kind::kDiv ? "/"
                       : e.kind == Expr::Kind::kNeg ? "neg"
                       : e.kind == Expr::Kind::kMax ? "max"
                                                    : "min";
      j["op"] = op;
      json args = json::array();
      for (const Expr& a : e.args) args.push_back(expr_to_jsonv(a));
      j["args"] = args;
    }
  }
  return j;
}

Expr expr_from_jsonv(const json& j) {
  if (j.contains("const")) return Expr::constant(j["const"].get<std::string>());
  if (j.contains("named")) return Expr::named(j["named"].get<std::string>());
  if (j.contains("y")) return Expr::variable(j["y"].get<int>());
  if (j.contains("fn")) {
    std::vector<Slot> slots;
    for (const json& s : j["slots"]) {
      Slot sl;
      if (s.contains("var")) {
        sl.var = s["var"].get<int>();
      } else {
        sl.text = s["len"].get<std::string>();
        sl.value = std::strtod(sl.text.c_str(), nullptr);
      }
      slots.push_back(sl);
    }
    std::string fn = j["fn"].get<std::string>();
    if (!known_function(fn)) throw std::runtime_error("unknown function " + fn);
    if (j.contains("param")) {
      std::string pt = j["param"].get<std::string>();
      return Expr::app(fn, std::move(slots), std::strtod(pt.c_str(), nullptr), pt);
    }
    return Expr::app(fn, std::move(slots));
  }
  std::string op = j["op"].get<std::string>();
  std::vector<Expr> args;
  for (const json& a : j["args"]) args.push_back(expr_from_jsonv(a));
  if (op == "neg") return -args.at(0);
  if (op == "max") return emax(std::move(args));
  if (op == "min") return emin(std::move(args));
  Expr l = args.at(0), r = args.at(1);
  if (op == "+") return l + r;
  if (op == "-") return l - r;
  if (op == "*") return l * r;
  if (op == "/") return l / r;
  throw std::runtime_error("unknown op " + op);
}

}  // namespace packbound
