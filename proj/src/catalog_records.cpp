#include <cmath>
#include <random>
#include <cstdio>
#include <map>
#include <stdexcept>

#include "packbound/catalog.hpp"

// The complete machine catalog of the appendix inequality archive:
// one record per numbered item (parameterized families expanded into
// concrete cases).  Unspecified edges default to [2, 2.51].

namespace packbound {

namespace {

const char* kS8 = "2.8284271247461903";  // 2 sqrt 2
const char* kHiSum = "5.02";             // max of y2+y3 on default edges

Expr c(const char* dec) { return Expr::constant(dec); }
Expr nm(const char* name) { return Expr::named(name); }
Expr y(int i) { return Expr::variable(i); }

std::vector<Slot> std6() {
  std::vector<Slot> s(6);
  for (int i = 0; i < 6; ++i) s[i].var = i;
  return s;
}
Slot V(int i) {
  Slot s;
  s.var = i;
  return s;
}
Slot L(const char* len) {
  Slot s;
  s.text = len;
  s.value = std::strtod(len, nullptr);
  return s;
}

Expr S(const char* fn) { return Expr::app(fn, std6()); }
Expr Sp(const char* fn, const char* param) {
  return Expr::app(fn, std6(), std::strtod(param, nullptr), param);
}
Expr A(const char* fn, std::vector<Slot> slots) { return Expr::app(fn, std::move(slots)); }

// tau variants as compositions
Expr tau_of(Expr score, Expr sol) { return nm("zpt") * sol - score; }

struct B {
  InequalityRecord r;

  B(const char* id, const char* sec, int index, const char* statement) {
    r.id = id;
    r.section = sec;
    r.index = index;
    r.statement = statement;
    for (int i = 0; i < 6; ++i)
      r.vars.push_back({"y" + std::to_string(i + 1), 2.0, 2.51, "2", "2.51"});
  }
  B& v(int i, const char* lo, const char* hi) {
    r.vars[i].lo = std::strtod(lo, nullptr);
    r.vars[i].hi = std::strtod(hi, nullptr);
    r.vars[i].lo_text = lo;
    r.vars[i].hi_text = hi;
    return *this;
  }
  B& fix(int i, const char* len) { return v(i, len, len); }
  B& goal(Expr g) {
    r.goal = std::move(g);
    return *this;
  }
  B& lt(Expr lhs, Expr rhs) { return goal(std::move(lhs) - std::move(rhs)); }
  B& gt(Expr lhs, Expr rhs) { return goal(std::move(rhs) - std::move(lhs)); }
  B& con(Expr e, const char* label) {
    r.constraints.push_back({std::move(e), label});
    return *this;
  }
  // constraints asserting a geometrically realizable simplex
  B& simplex_domain(std::vector<Slot> slots = std6()) {
    con(Expr::app("delta", slots), "delta >= 0");
    con(Expr::app("u126", slots), "face 126");
    con(Expr::app("u135", slots), "face 135");
    con(Expr::app("u234", slots), "face 234");
    con(Expr::app("u456", slots), "face 456");
    return *this;
  }
  B& y4_cap() {  // y4 <= y2 + y3
    return con(y(1) + y(2) - y(3), "y4 <= y2+y3");
  }
  B& dih_cap(const char* bound) { return con(c(bound) - S("dih"), "dih cap"); }
  B& reduce_lo(int var) {
    r.mode = Mode::kReduced;
    r.reductions.push_back({var, false});
    return *this;
  }
  B& any2(Expr a, const char* la, Expr b, const char* lb) {
    r.any_of.push_back({{std::move(a), la}, {std::move(b), lb}});
    return *this;
  }
  B& nonstrict() {
    r.strict = false;
    return *this;
  }
  B& note(const char* n) {
    r.notes = n;
    return *this;
  }
  B& cases(const char* tag) {
    r.case_tag = tag;
    return *this;
  }
  B& critical() {
    r.mode = Mode::kCriticalPoint;
    return *this;
  }
  InequalityRecord build() { return r; }
};

Expr cos_arc(Expr a2_plus_b2_minus_c2, Expr two_ab) {
  return a2_plus_b2_minus_c2 / two_ab;
}

// cos of the angle opposite y5 in the (y1,y3) corner
Expr cos_theta135() {
  return cos_arc(y(0) * y(0) + y(2) * y(2) - y(4) * y(4), c("2") * y(0) * y(2));
}
Expr cos_theta126() {
  return cos_arc(y(0) * y(0) + y(1) * y(1) - y(5) * y(5), c("2") * y(0) * y(1));
}
// cos psi for the corner-cell cone: arc(y1, t0, lambda)
Expr cos_psi_arc(const char* lambda) {
  Expr lam = c(lambda);
  return (y(0) * y(0) + nm("t0") * nm("t0") - lam * lam) /
         (c("2") * y(0) * nm("t0"));
}

void sectionA1(Catalog& cat) {
  cat.add(B("757995764", "A1", 1, "beta_psi(y1,y3,y5) < dih3, cos psi = y1/2.77")
              .v(1, "2", "2.23").v(2, "2", "2.23").v(3, "2.77", kS8).fix(5, "2")
              .lt(Sp("beta_psi_cos135", "2.77"), S("dih3"))
              .con(y(0) / c("2.77") - cos_theta135(), "psi <= theta")
              .simplex_domain()
              .build());
  cat.add(B("735258244", "A1", 2, "beta_psi(y1,y3,y5) < dih3, cos psi = y1/2.51")
              .fix(3, "3.2").fix(4, "2.51").fix(5, "2")
              .lt(Sp("beta_psi_cos135", "2.51"), S("dih3"))
              .con(y(0) / c("2.51") - cos_theta135(), "psi <= theta")
              .simplex_domain()
              .build());
  cat.add(B("343330051", "A1", 3, "beta_psi(y1,y2,y6) < dih2, psi = arc(y1,t0,1.6)")
              .v(3, "2", "3.2").fix(4, "2.51").fix(5, "2.51")
              .lt(Sp("beta_psi_arc126", "1.6"), S("dih2"))
              .con(cos_psi_arc("1.6") - cos_theta126(), "psi <= theta")
              .simplex_domain()
              .build());
  cat.add(B("49446087", "A1", 4, "beta_psi(y1,y2,y6) < dih2, psi = arc(y1,t0,1.6)")
              .v(0, "2.2", "2.51").v(3, "2", "3.2").fix(4, "3.2").fix(5, "2")
              .lt(Sp("beta_psi_arc126", "1.6"), S("dih2"))
              .con(cos_psi_arc("1.6") - cos_theta126(), "psi <= theta")
              .simplex_domain()
              .build());
  cat.add(B("799187442", "A1", 5, "dih(R(y2/2,eta126,y1/(2 cos psi))) < dih2")
              .v(0, "2", "2.2").fix(2, "2.51").fix(3, "3.2").fix(4, "3.2").fix(5, "2")
              .lt(Sp("dih_rogers_cut", "1.6"), S("dih2"))
              .con(y(0) / (c("2") * cos_psi_arc("1.6")) - S("eta126"),
                   "cutting cone reaches the face")
              .simplex_domain()
              .build());
  cat.add(B("275706375", "A1", 6, "vor(Q,1.385) < 0.00005, eta456 >= sqrt2")
              .v(3, "2.77", kS8)
              .lt(Sp("vor_t", "1.385"), c("0.00005"))
              .con(S("eta456") - nm("sqrt2"), "eta456 >= sqrt2")
              .simplex_domain()
              .build());
  cat.add(B("324536936", "A1", 7, "vor(Q,1.385) < 0.00005, eta234 >= sqrt2")
              .v(3, "2.77", kS8)
              .lt(Sp("vor_t", "1.385"), c("0.00005"))
              .con(S("eta234") - nm("sqrt2"), "eta234 >= sqrt2")
              .simplex_domain()
              .build());
  cat.add(B("983547118", "A1", 8, "tau(Q,1.385) > 0.0682, eta456 >= sqrt2")
              .v(3, "2.77", kS8)
              .gt(tau_of(Sp("vor_t", "1.385"), S("sol")), c("0.0682"))
              .con(S("eta456") - nm("sqrt2"), "eta456 >= sqrt2")
              .simplex_domain()
              .build());
  cat.add(B("206278009", "A1", 9, "tau(Q,1.385) > 0.0682, eta234 >= sqrt2")
              .v(3, "2.77", kS8)
              .gt(tau_of(Sp("vor_t", "1.385"), S("sol")), c("0.0682"))
              .con(S("eta234") - nm("sqrt2"), "eta234 >= sqrt2")
              .simplex_domain()
              .build());
}

struct Line {
  const char* id;
  const char* a;
  const char* b;
};

// upright-quarter nu bounds, linear in dih
void sectionA2A3(Catalog& cat) {
  const Line a2[] = {{"413688580", "-4.3223", "4.10113"},
                     {"805296510", "-0.9871", "0.80449"},
                     {"136610219", "-0.8756", "0.70186"},
                     {"379204810", "-0.3404", "0.24573"},
                     {"878731435", "-0.0024", "0.00154"},
                     {"891740103", "0.1196", "-0.07611"}};
  for (int i = 0; i < 6; ++i) {
    cat.add(B(a2[i].id, "A2", i + 1, "nu < a + b dih on upright quarters")
                .v(0, "2.51", kS8)
                .lt(S("nu_max"), c(a2[i].a) + c(a2[i].b) * S("dih"))
                .simplex_domain()
                .note("nu bounded over every mu-tag assignment")
                .build());
  }
  const Line a3[] = {{"334002329", "-4.42873", "4.16523"},
                     {"883139937", "-1.01104", "0.78701"},
                     {"507989176", "-0.99937", "0.77627"},
                     {"244435805", "-0.34877", "0.21916"},
                     {"930176500", "-0.11434", "0.05107"},
                     {"815681339", "0.07749", "-0.07106"}};
  for (int i = 0; i < 6; ++i) {
    cat.add(B(a3[i].id, "A3", i + 1, "-tau_nu < a + b dih on upright quarters")
                .v(0, "2.51", kS8)
                .lt(S("nu_max") - nm("zpt") * S("sol"),
                    c(a3[i].a) + c(a3[i].b) * S("dih"))
                .simplex_domain()
                .build());
  }
}

void sectionA4toA7(Catalog& cat) {
  const Line a4[] = {{"649592321", "-3.421", "2.28501"},
                     {"600996944", "-2.616", "1.67382"},
                     {"70667639", "-1.4486", "0.8285"},
                     {"99182343", "-0.79", "0.390925"},
                     {"578762805", "-0.3088", "0.12012"},
                     {"557125557", "-0.1558", "0.0501"}};
  const Line a5[] = {{"719735900", "-3.3407", "2.1747"},
                     {"359616783", "-2.945", "1.87427"},
                     {"440833181", "-1.5035", "0.83046"},
                     {"578578364", "-1.0009", "0.48263"},
                     {"327398152", "-0.7787", "0.34833"},
                     {"314861952", "-0.4475", "0.1694"},
                     {"234753056", "-0.2568", "0.0822"}};
  for (int i = 0; i < 6; ++i) {
    cat.add(B(a4[i].id, "A4", i + 1, "vor_x < a + b dih, anchored simplex")
                .v(0, "2.51", kS8).v(3, "2.51", kS8)
                .lt(S("vor_x_max"), c(a4[i].a) + c(a4[i].b) * S("dih"))
                .dih_cap("2.46")
                .simplex_domain()
                .build());
  }
  for (int i = 0; i < 7; ++i) {
    cat.add(B(a5[i].id, "A5", i + 1, "-tau_x < a + b dih, anchored simplex")
                .v(0, "2.51", kS8).v(3, "2.51", kS8)
                .lt(S("vor_x_max") - nm("zpt") * S("sol"),
                    c(a5[i].a) + c(a5[i].b) * S("dih"))
                .dih_cap("2.46")
                .simplex_domain()
                .build());
  }
  const Line a6[] = {{"555481748", "-3.58", "2.28501"},
                     {"615152889", "-2.715", "1.67382"},
                     {"647971645", "-1.517", "0.8285"},
                     {"516606403", "-0.858", "0.390925"},
                     {"690552204", "-0.358", "0.12012"},
                     {"852763473", "-0.186", "0.0501"}};
  const Line a7[] = {{"679673664", "-3.48", "2.1747"},
                     {"926514235", "-3.06", "1.87427"},
                     {"459744700", "-1.58", "0.83046"},
                     {"79400832", "-1.06", "0.48263"},
                     {"277388353", "-0.83", "0.34833"},
                     {"839852751", "-0.50", "0.1694"},
                     {"787458652", "-0.29", "0.0822"}};
  for (int i = 0; i < 6; ++i) {
    cat.add(B(a6[i].id, "A6", i + 1, "vor0 < a + b dih, long fourth edge")
                .v(0, "2.51", kS8).v(3, kS8, "3.2")
                .lt(S("vor0"), c(a6[i].a) + c(a6[i].b) * S("dih"))
                .dih_cap("2.46")
                .simplex_domain()
                .build());
  }
  for (int i = 0; i < 7; ++i) {
    cat.add(B(a7[i].id, "A7", i + 1, "-tau0 < a + b dih, long fourth edge")
                .v(0, "2.51", kS8).v(3, kS8, "3.2")
                .lt(S("vor0") - nm("zpt") * S("sol"),
                    c(a7[i].a) + c(a7[i].b) * S("dih"))
                .dih_cap("2.46")
                .simplex_domain()
                .build());
  }
}

void sectionA8(Catalog& cat) {
  struct D8 {
    const char* id;
    const char* bound;
    const char* y4lo;
    const char* y1lo;
    const char* y1hi;
  };
  const D8 rows[] = {{"499014780", "1.23", "2.51", "2.51", kS8},
                     {"901845849", "1.4167", kS8, "2.51", kS8},
                     {"410091263", "1.65", "3.2", "2.51", kS8},
                     {"125103581", "0.956", "2", "2.51", kS8},
                     {"770716154", "1.714", "3.2", "2.7", kS8},
                     {"666090270", "1.714", "3.2", "2.51", "2.7"}};
  int idx[] = {1, 2, 3, 4, 6, 7};
  for (int i = 0; i < 6; ++i) {
    B b(rows[i].id, "A8", idx[i], "dih lower bound along the diagonal");
    b.v(0, rows[i].y1lo, rows[i].y1hi).v(3, rows[i].y4lo, kHiSum);
    if (idx[i] == 7) b.v(1, "2", "2.25");
    b.gt(S("dih"), c(rows[i].bound)).y4_cap().simplex_domain();
    cat.add(b.build());
  }
  cat.add(B("504968542", "A8", 5, "dih > 0.28")
              .v(0, "2.51", kS8).v(3, "2", kHiSum).v(4, "2", kS8)
              .gt(S("dih"), c("0.28"))
              .y4_cap()
              .simplex_domain()
              .build());
  cat.add(B("971555266", "A8", 8, "dih < 2.184 on upright quarters")
              .v(0, "2.51", kS8)
              .lt(S("dih"), c("2.184"))
              .simplex_domain()
              .build());
}

void sectionA9(Catalog& cat) {
  auto base = [](const char* id, int idx, const char* st) {
    B b(id, "A9", idx, st);
    return b;
  };
  {
    B b = base("956875054", 1, "kappa < -0.003521");
    b.v(0, "2.696", kS8).v(1, "2.45", "2.51").v(5, "2.45", "2.51")
        .v(3, "2.77", kHiSum)
        .lt(S("kappa"), -c("0.003521"))
        .y4_cap().simplex_domain();
    cat.add(b.build());
  }
  {
    B b = base("664200787", 2, "kappa < -0.017, eta234 >= sqrt2");
    b.v(0, "2.51", "2.696").v(3, "2.77", kS8)
        .lt(S("kappa"), -c("0.017"))
        .con(S("eta234") - nm("sqrt2"), "eta234 >= sqrt2")
        .simplex_domain();
    cat.add(b.build());
  }
  {
    B b = base("390273147", 3, "kappa < -0.017, eta456 >= sqrt2");
    b.v(0, "2.51", "2.696").v(3, "2.77", kS8)
        .lt(S("kappa"), -c("0.017"))
        .con(S("eta456") - nm("sqrt2"), "eta456 >= sqrt2")
        .simplex_domain();
    cat.add(b.build());
  }
  {
    B b = base("654422246", 4, "kappa < -0.02274, monotone in y4");
    b.v(0, "2.57", kS8).v(3, "3.2", kHiSum)
        .lt(S("kappa"), -c("0.02274"))
        .y4_cap().simplex_domain().reduce_lo(3);
    cat.add(b.build());
  }
  {
    B b = base("366536370", 5, "kappa < -0.029, monotone in y4");
    b.v(0, "2.51", "2.57").v(3, "3.2", kHiSum)
        .lt(S("kappa"), nm("xi_kappa"))
        .y4_cap().simplex_domain().reduce_lo(3);
    cat.add(b.build());
  }
  {
    B b = base("62532125", 6, "kappa < -0.03883, short frame edges");
    b.v(0, "2.51", "2.57").v(1, "2", "2.25").v(2, "2", "2.25")
        .v(4, "2", "2.25").v(5, "2", "2.25").v(3, "3.2", "4.5")
        .lt(S("kappa"), -c("0.03883"))
        .y4_cap().simplex_domain().reduce_lo(3);
    cat.add(b.build());
  }
  {
    B b = base("370631902", 7, "kappa < -0.0325");
    b.v(0, "2.51", "2.57").v(1, "2", "2.25").v(2, "2", "2.25")
        .v(4, "2", "2.25").v(3, "3.2", "4.76")
        .lt(S("kappa"), -c("0.0325"))
        .y4_cap().simplex_domain().reduce_lo(3);
    cat.add(b.build());
  }
}

void sectionA10A11(Catalog& cat) {
  auto quarter = [](const char* id, int idx, const char* st) {
    B b(id, "A10", idx, st);
    b.v(0, "2.51", kS8);
    return b;
  };
  cat.add(quarter("214637273", 1, "gamma < octavor0, tall diagonal")
              .v(0, "2.696", kS8)
              .lt(S("gamma"), S("octavor0"))
              .simplex_domain()
              .build());
  cat.add(quarter("751772680", 2, "gamma < octavor0 + 0.01561")
              .lt(S("gamma"), S("octavor0") + nm("xi_gamma"))
              .simplex_domain()
              .build());
  cat.add(quarter("366146051", 3, "gamma < octavor0 + 0.00935")
              .v(0, "2.57", kS8)
              .lt(S("gamma"), S("octavor0") + nm("xi_gamma_prime"))
              .simplex_domain()
              .build());
  cat.add(quarter("675766140", 4, "gamma < octavor0 + 0.00928")
              .v(0, "2.51", "2.57").v(1, "2.25", "2.51")
              .lt(S("gamma"), S("octavor0") + c("0.00928"))
              .simplex_domain()
              .build());
  cat.add(quarter("520734758", 5, "gamma < octavor0")
              .v(0, "2.51", "2.57").v(1, "2.25", "2.51").v(5, "2.25", "2.51")
              .lt(S("gamma"), S("octavor0"))
              .simplex_domain()
              .build());

  auto a11 = [](const char* id, int idx, const char* st) {
    B b(id, "A11", idx, st);
    b.v(0, "2.51", kS8);
    return b;
  };
  cat.add(a11("378432183", 1, "octavor < octavor0")
              .v(0, "2.696", kS8).v(1, "2", "2.45").v(2, "2", "2.45")
              .lt(S("octavor"), S("octavor0"))
              .simplex_domain()
              .build());
  cat.add(a11("572206659", 2, "octavor < octavor0")
              .v(0, "2.696", kS8).v(1, "2.45", "2.51").v(4, "2.45", "2.51")
              .lt(S("octavor"), S("octavor0"))
              .simplex_domain()
              .build());
  cat.add(a11("310679005", 3, "vor < vor0 + 0.003521")
              .lt(S("vor"), S("vor0") + nm("xi_v"))
              .simplex_domain()
              .build());
  cat.add(a11("284970880", 4, "vor < vor0 - 0.003521")
              .v(0, "2.696", kS8).v(1, "2.45", "2.51").v(5, "2.45", "2.51")
              .v(3, "2.51", "2.77")
              .lt(S("vor"), S("vor0") - nm("xi_v"))
              .simplex_domain()
              .build());
  cat.add(a11("972111620", 5, "vor < vor0 - 0.009")
              .v(0, "2.51", "2.696").v(3, "2.51", kS8)
              .lt(S("vor"), S("vor0") - c("0.009"))
              .simplex_domain()
              .build());
  cat.add(a11("875762896", 6, "octavor < octavor0, eta126 >= sqrt2")
              .v(0, "2.51", "2.57")
              .lt(S("octavor"), S("octavor0"))
              .con(S("eta126") - nm("sqrt2"), "eta126 >= sqrt2")
              .simplex_domain()
              .build());
  cat.add(a11("385332676", 7, "octavor < octavor0 - 0.004131")
              .v(2, "2", "2.2")
              .lt(S("octavor"), S("octavor0") - c("0.004131"))
              .con(nm("sqrt2") - S("eta126"), "eta126 <= sqrt2")
              .con(S("eta135") - nm("sqrt2"), "eta135 >= sqrt2")
              .simplex_domain()
              .build());
}

void sectionA12(Catalog& cat) {
  cat.add(B("970291025", "A12", 1, "tau_V(S) > 0.13 + 0.2(dih - pi/2)")
              .v(0, "2.51", kS8).v(1, "2.51", kS8)
              .gt(tau_of(S("vor"), S("sol")),
                  c("0.13") + c("0.2") * (S("dih") - nm("pi") / c("2")))
              .con(nm("sqrt2") - S("eta126"), "eta126 <= sqrt2")
              .simplex_domain()
              .build());
  cat.add(B("524345535", "A12", 2, "tau_V(S,sqrt2) > 0.13 + 0.2(dih - pi/2)")
              .v(0, "2.51", kS8).v(1, "2.51", kS8)
              .gt(tau_of(Sp("vor_t", "1.4142135623730951"), S("sol")),
                  c("0.13") + c("0.2") * (S("dih") - nm("pi") / c("2")))
              .con(S("eta126") - nm("sqrt2"), "eta126 >= sqrt2")
              .simplex_domain()
              .build());
  cat.add(B("812894433", "A12", 3, "nu < -0.3429 + 0.24573 dih, tall quarters")
              .v(0, "2.75", kS8)
              .lt(S("nu_max"), c("-0.3429") + c("0.24573") * S("dih"))
              .simplex_domain()
              .build());
  cat.add(B("404793781", "A12", 4, "vor_x < -0.0571 for anchored simplices")
              .v(0, "2.51", "2.75").v(3, "2.51", kS8)
              .lt(S("vor_x_max"), -c("0.0571"))
              .dih_cap("2.2")
              .simplex_domain()
              .build());
}

void sectionA13(Catalog& cat) {
  cat.add(B("705592875", "A13", 1, "tau_nu > 0.033 on upright quarters")
              .v(0, "2.51", kS8)
              .gt(tau_of(S("nu_max"), S("sol")), c("0.033"))
              .simplex_domain()
              .note("the envelope nu_max gives the least tau_nu")
              .build());
  cat.add(B("747727191", "A13", 2, "tau0 > 0.06585 - 0.0066 at y4 = 2 sqrt 2")
              .fix(3, kS8)
              .gt(tau_of(S("vor0"), S("sol")), c("0.05925"))
              .simplex_domain()
              .build());
  cat.add(B("474496219", "A13", 3, "vor0 < 0.009 at y4 = 2 sqrt 2")
              .fix(3, kS8)
              .lt(S("vor0"), c("0.009"))
              .simplex_domain()
              .build());
  cat.add(B("649551700", "A13", 4, "vor0(S(2,y2,y3,y4,2,2)) < 0.0461")
              .fix(0, "2").fix(4, "2").fix(5, "2").v(3, kS8, "3.2")
              .lt(S("vor0"), c("0.0461"))
              .simplex_domain()
              .build());
  cat.add(B("74657942", "A13", 5, "vor0(S(2.51,2,y3,y4,2,2)) <= 0")
              .fix(0, "2.51").fix(1, "2").fix(4, "2").fix(5, "2").v(3, kS8, "3.2")
              .goal(S("vor0"))
              .nonstrict()
              .note("sharp; holds by inspection")
              .simplex_domain()
              .build());
  cat.add(B("897129160", "A13", 6, "vor0(S(y1,y2,2.51,y4,2,2)) < 0")
              .fix(2, "2.51").fix(4, "2").fix(5, "2").v(3, kS8, "3.2")
              .goal(S("vor0"))
              .simplex_domain()
              .build());
  cat.add(B("760840103", "A13", 7, "tau0(S(2,y2,y3,y4,2,2)) > 0.014")
              .fix(0, "2").fix(4, "2").fix(5, "2").v(3, kS8, "3.2")
              .gt(tau_of(S("vor0"), S("sol")), c("0.014"))
              .simplex_domain()
              .build());
  cat.add(B("675901554", "A13", 8, "tau0(S(2.51,2,2,y4,2,2)) >= 0")
              .fix(0, "2.51").fix(1, "2").fix(2, "2").fix(4, "2").fix(5, "2")
              .v(3, kS8, "3.2")
              .goal(Expr::constant("0") - tau_of(S("vor0"), S("sol")))
              .nonstrict()
              .note("sharp; holds by inspection")
              .simplex_domain()
              .build());
  cat.add(B("712696695", "A13", 9, "tau0(S(y1,y2,2.51,y4,2,2)) > 0.06585")
              .fix(2, "2.51").fix(4, "2").fix(5, "2").v(3, kS8, "3.2")
              .gt(tau_of(S("vor0"), S("sol")), c("0.06585"))
              .simplex_domain()
              .build());
  cat.add(B("269048407", "A13", 10, "nu < vor0 + 0.01(pi/2 - dih)")
              .v(0, "2.696", kS8)
              .lt(S("nu_max"), S("vor0") + c("0.01") * (nm("pi") / c("2") - S("dih")))
              .simplex_domain()
              .build());
  cat.add(B("553285469", "A13", 11, "nu < vor0")
              .v(0, "2.6", "2.696").v(3, "2.1", "2.51")
              .lt(S("nu_max"), S("vor0"))
              .simplex_domain()
              .build());
  cat.add(B("293389410", "A13", 12, "mu < vor0 + 0.0268 on flat quarters")
              .v(3, "2.51", kS8)
              .lt(S("mu_flat"), S("vor0") + c("0.0268"))
              .simplex_domain()
              .build());
  cat.add(B("695069283", "A13", 13, "mu < vor0 + 0.02, central vertex <= 2.17")
              .v(0, "2", "2.17").v(3, "2.51", kS8)
              .lt(S("mu_flat"), S("vor0") + c("0.02"))
              .simplex_domain()
              .build());
  cat.add(B("814398901", "A13", 14, "dih > 1.32 at y4 = 2 sqrt 2")
              .fix(3, kS8)
              .gt(S("dih"), c("1.32"))
              .simplex_domain()
              .build());
  cat.add(B("352079526", "A13", 15, "tau_hat > 3.07 pt when dih <= 1.32")
              .v(3, "2.51", kS8)
              .lt(S("sigma_hat"), nm("zpt") * S("sol") - c("3.07") * nm("pt"))
              .dih_cap("1.32")
              .simplex_domain()
              .build());
  cat.add(B("179025673", "A13", 16, "tau0 > 3.07pt + xi_v + 2 xi_gamma'")
              .v(3, "2.51", kS8)
              .lt(S("vor0"), nm("zpt") * S("sol") - c("3.07") * nm("pt") -
                                 nm("xi_v") - c("2") * nm("xi_gamma_prime"))
              .con(S("eta456") - nm("sqrt2"), "eta456 >= sqrt2")
              .dih_cap("1.32")
              .simplex_domain()
              .build());
}

void sectionA14(Catalog& cat) {
  auto vrec = [](const char* id, int idx, const char* st) {
    B b(id, "A14", idx, st);
    return b;
  };
  {
    B b = vrec("424011442", 1, "V0 < 0");
    b.v(3, "2", kHiSum).v(4, "2", "3.2").v(5, "2", "3.2")
        .goal(S("v0"))
        .y4_cap()
        .con(y(5) - y(4), "y6 >= y5")
        .simplex_domain();
    cat.add(b.build());
  }
  {
    B b = vrec("140881233", 2, "V1 < 0");
    b.v(3, "2", kHiSum).v(4, "2", "3.2").v(5, "2", "3.2")
        .goal(S("v1"))
        .y4_cap()
        .con(y(5) - y(4), "y6 >= y5")
        .simplex_domain();
    cat.add(b.build());
  }
  {
    B b = vrec("601456709", 3, "V_j + 0.82 sqrt(421) < 0");
    b.v(3, kS8, "3.2").v(4, "2", "2.189")
        .goal(emax({S("v0"), S("v1")}) + c("0.82") * nm("sqrt421"))
        .simplex_domain();
    cat.add(b.build());
  }
  {
    B b = vrec("292977281", 4, "V_j + 0.82 sqrt(421) < 0, y4 >= 3.2");
    b.v(3, "3.2", kHiSum).v(4, "2", "2.189").v(5, "2", "3.2")
        .goal(emax({S("v0"), S("v1")}) + c("0.82") * nm("sqrt421"))
        .y4_cap()
        .simplex_domain();
    cat.add(b.build());
  }
  {
    B b = vrec("927286061", 5, "V_j + 0.5 sqrt(421) < 0");
    b.v(3, kS8, "3.2").v(4, "2.189", "2.51")
        .goal(emax({S("v0"), S("v1")}) + c("0.5") * nm("sqrt421"))
        .simplex_domain();
    cat.add(b.build());
  }
  {
    B b = vrec("340409511", 6, "V_j + 0.5 sqrt(421) < 0, y4 >= 3.2");
    b.v(3, "3.2", kHiSum).v(4, "2.189", "3.2").v(5, "2", "3.2")
        .goal(emax({S("v0"), S("v1")}) + c("0.5") * nm("sqrt421"))
        .y4_cap()
        .simplex_domain();
    cat.add(b.build());
  }
  {
    B b = vrec("727498658", 7, "delta < 421 when eta135 <= t0");
    b.v(3, kS8, kHiSum).v(4, "2", "3.2").v(5, "2", "3.2")
        .lt(S("delta"), c("421"))
        .y4_cap()
        .con(nm("t0") - S("eta135"), "eta135 <= t0")
        .simplex_domain();
    cat.add(b.build());
  }
  cat.add(B("484314425", "A14", 8, "quoin drift bound 0.82")
              .fix(1, "2").fix(3, "2").fix(5, "2")
              .lt(S("quo_partial_x5"), c("0.82"))
              .note("a function of y1, y3, y5 only")
              .build());
  cat.add(B("440223030", "A14", 9, "quoin drift bound 0.5, y5 >= 2.189")
              .fix(1, "2").fix(3, "2").fix(5, "2").v(4, "2.189", "2.51")
              .lt(S("quo_partial_x5"), c("0.5"))
              .build());
  {
    InequalityRecord r;
    r.id = "115756648";
    r.section = "A14";
    r.index = 10;
    r.statement = "f(y1,y2) >= 0.887 at lambda = 1.945";
    r.vars = {{"y1", 2.0, 2.51, "2", "2.51"}, {"y2", 2.0, 2.51, "2", "2.51"}};
    r.goal = c("0.887") - A("f_overlap", {V(0), V(1)});
    cat.add(std::move(r));
  }
}

void sectionA15(Catalog& cat) {
  struct C15 {
    const char* id;
    const char* y5;
    const char* y6;
    const char* y4hi;
    const char* fns;  // "both", "vor0", "tau0"
    int index;
  };
  const C15 rows[] = {
      {"329882546", "2", "2", "4", "both", 1},
      {"427688691", "2", "2.51", "4.51", "both", 2},
      {"562103670", "2", kS8, "4.8284271247461903", "both", 3},
      {"564506426", "2.51", "2.51", "5.02", "both", 4},
      {"288224597", "2.51", kS8, "5.02", "both", 5},
      {"979916330", kS8, kS8, "5.02", "vor0", 6},
      {"749968927", kS8, kS8, "5.02", "tau0", 6},
  };
  for (const auto& row : rows) {
    B b(row.id, "A15", row.index,
        "D^2 f > 0 wherever D f = 0 (f of x1; critical-point mode)");
    b.v(3, kS8, row.y4hi).fix(4, row.y5).fix(5, row.y6);
    b.y4_cap().simplex_domain().critical();
    b.r.goal = c("0");  // unused in critical mode
    if (std::string(row.fns) == "both")
      b.r.critical_fns = {"vor0", "neg_tau0"};
    else if (std::string(row.fns) == "vor0")
      b.r.critical_fns = {"vor0"};
    else
      b.r.critical_fns = {"neg_tau0"};
    if (row.index == 6) b.cases(row.fns);
    cat.add(b.build());
  }
}

void sectionA16(Catalog& cat) {
  cat.add(B("695180203", "A16", 1, "tau_tilde > 0.06585 on flat quarters")
              .v(3, "2.51", kS8)
              .lt(S("sigma_tilde"), nm("zpt") * S("sol") - c("0.06585"))
              .simplex_domain()
              .build());
  cat.add(B("690626704", "A16", 2, "sigma_tilde <= 0 on flat quarters")
              .v(3, "2.51", kS8)
              .goal(S("sigma_tilde"))
              .nonstrict()
              .note("sharp at S(2,2,2,2sqrt2,2,2)")
              .simplex_domain()
              .build());
  cat.add(B("807023313", "A16", 3, "vor(S) < Z(3,2) for type A simplices")
              .v(3, "2.51", "2.697").v(4, "2.51", "2.697")
              .lt(S("vor"), nm("Z_3_2"))
              .con(nm("sqrt2") - S("eta456"), "eta456 <= sqrt2")
              .simplex_domain()
              .build());
  cat.add(B("590577214", "A16", 4, "tau_V(S) > 0.13943 for type A simplices")
              .v(3, "2.51", "2.697").v(4, "2.51", "2.697")
              .gt(tau_of(S("vor"), S("sol")), c("0.13943"))
              .con(nm("sqrt2") - S("eta456"), "eta456 <= sqrt2")
              .simplex_domain()
              .build());
  cat.add(B("949210508", "A16", 5, "vor0 < Z(3,2) outside type A")
              .v(3, "2.51", kS8).v(4, "2.51", kS8)
              .lt(S("vor0"), nm("Z_3_2"))
              .any2(S("eta456") - nm("sqrt2"), "eta456 >= sqrt2",
                    emax({y(3), y(4)}) - c("2.77"), "a long diagonal")
              .simplex_domain()
              .build());
  cat.add(B("671961774", "A16", 6, "tau0 > 0.13943 outside type A")
              .v(3, "2.51", kS8).v(4, "2.51", kS8)
              .gt(tau_of(S("vor0"), S("sol")), c("0.13943"))
              .any2(S("eta456") - nm("sqrt2"), "eta456 >= sqrt2",
                    emax({y(3), y(4)}) - c("2.77"), "a long diagonal")
              .simplex_domain()
              .build());
}

void sectionA17A18(Catalog& cat) {
  struct KCase {
    int k0, k1, k2;
    const char* pt;  // pi'_tau as decimal
    const char* ps;  // pi'_sigma
  };
  // schedules of Section 5: tau penalties and sigma penalties
  const KCase ks[] = {
      {0, 3, 0, "0", "0"},
      {0, 2, 1, "0.050763333333333333", "0.009"},
      {0, 1, 2, "0.062696666666666667", "0.028666666666666667"},
      {0, 0, 3, "0.07463", "0.043"},
      {1, 1, 1, "0.0254", "0.017"},
      {1, 0, 2, "0.065363333333333333", "0.031333333333333333"},
  };
  auto cls = [](B& b, int slot, int cls_id) {
    if (cls_id == 0)
      b.v(slot, "2", "2.51");
    else if (cls_id == 1)
      b.v(slot, "2.51", kS8);
    else
      b.v(slot, kS8, "3.2");
  };
  for (const auto& k : ks) {
    // assign the longest classes to y4 first
    int classes[3];
    int p = 0;
    for (int i = 0; i < k.k2; ++i) classes[p++] = 2;
    for (int i = 0; i < k.k1; ++i) classes[p++] = 1;
    for (int i = 0; i < k.k0; ++i) classes[p++] = 0;
    char tag[32];
    std::snprintf(tag, sizeof tag, "k0=%d,k1=%d,k2=%d", k.k0, k.k1, k.k2);
    const char* dn = (k.k1 + k.k2 == 3) ? "D_3_3" : "D_3_2";
    const char* zn = (k.k1 + k.k2 == 3) ? "Z_3_3" : "Z_3_2";
    {
      B b("645264496", "A17", 1, "tau0 - pi'_tau > D(3, k1+k2)");
      cls(b, 3, classes[0]);
      cls(b, 4, classes[1]);
      cls(b, 5, classes[2]);
      b.cases(tag);
      b.gt(tau_of(S("vor0"), S("sol")), nm(dn) + c(k.pt));
      b.y4_cap().simplex_domain();
      cat.add(b.build());
    }
    {
      B b("612259047", "A18", 1, "vor0 + pi'_sigma < Z(3, k1+k2)");
      cls(b, 3, classes[0]);
      cls(b, 4, classes[1]);
      cls(b, 5, classes[2]);
      b.cases(tag);
      b.lt(S("vor0") + c(k.ps), nm(zn));
      b.y4_cap().simplex_domain();
      cat.add(b.build());
    }
  }
  cat.add(B("910154674", "A17", 2, "tau0 - 0.034052 > D(3,2)")
              .v(3, "2.6", kS8).v(4, kS8, "3.2")
              .gt(tau_of(S("vor0"), S("sol")), nm("D_3_2") + c("0.034052"))
              .simplex_domain()
              .build());
  cat.add(B("877743345", "A17", 3, "tau0 - 0.040652 > D(3,2)")
              .fix(3, "2.51").fix(4, "3.2").fix(5, "2")
              .gt(tau_of(S("vor0"), S("sol")), nm("D_3_2") + c("0.040652"))
              .simplex_domain()
              .build());
}

// composite quad records: two simplices over a shared diagonal g
struct QuadSpec {
  // heights a1..a4, rim edges b1..b4 (slots or fixed), diagonal var g
  Slot a1, b1, a2, b2, a3, b3, a4, b4;
};

void add_quad_exprs(B& b, const QuadSpec& q, int gvar, Expr& score, Expr& squander) {
  // S1 = (0,v1,v2,v3), S2 = (0,v3,v4,v1)
  std::vector<Slot> s1 = {q.a1, q.a2, q.a3, q.b2, V(gvar), q.b1};
  std::vector<Slot> s2 = {q.a3, q.a4, q.a1, q.b4, V(gvar), q.b3};
  score = A("vor0", s1) + A("vor0", s2);
  squander = nm("zpt") * (A("sol", s1) + A("sol", s2)) - score;
  b.con(A("delta", s1), "delta S1 >= 0");
  b.con(A("delta", s2), "delta S2 >= 0");
  std::vector<Slot> qs = {q.a1, q.b1, q.a2, q.b2, q.a3, q.b3, q.a4, q.b4, V(gvar)};
  b.r.notes += "[cross diagonal over slots]";
  b.con(A("quad_cross_diag", qs) - c("3.2"), "other diagonal >= 3.2");
}

void sectionA19(Catalog& cat) {
  // vector (a1,2,2,2,2,2,a4,b4), both diagonals in [2 sqrt 2, 3.2]
  struct C19 {
    const char* tag;
    const char* b4lo;
    const char* b4hi;
    bool tau;
    const char* bound;
  };
  const C19 rows[] = {
      {"tau,b4-short", "2.51", kS8, true, "0.235"},
      {"vor,b4-short", "2.51", kS8, false, "-0.075"},
      {"tau,b4-long", kS8, "3.2", true, "0.3109"},
      {"vor,b4-long", kS8, "3.2", false, "-0.137"},
  };
  for (const auto& row : rows) {
    InequalityRecord r;
    r.id = "357477295";
    r.section = "A19";
    r.index = 1;
    r.case_tag = row.tag;
    r.statement = "quadrilateral with overlapping special simplices";
    r.vars = {{"a1", 2.0, 2.51, "2", "2.51"},
              {"a4", 2.0, 2.51, "2", "2.51"},
              {"b4", std::strtod(row.b4lo, nullptr), std::strtod(row.b4hi, nullptr),
               row.b4lo, row.b4hi},
              {"g", std::strtod(kS8, nullptr), 3.2, kS8, "3.2"}};
    B b("", "", 0, "");
    b.r = r;
    std::vector<Slot> s1 = {V(0), L("2"), L("2"), L("2"), V(3), L("2")};
    std::vector<Slot> s2 = {L("2"), V(1), V(0), V(2), V(3), L("2")};
    Expr score = A("vor0", s1) + A("vor0", s2);
    Expr squander = nm("zpt") * (A("sol", s1) + A("sol", s2)) - score;
    b.con(A("delta", s1), "delta S1 >= 0");
    b.con(A("delta", s2), "delta S2 >= 0");
    std::vector<Slot> qs = {V(0), L("2"), L("2"), L("2"),
                            L("2"), L("2"), V(1), V(2), V(3)};
    b.con(A("quad_cross_diag", qs) - nm("two_sqrt2"), "cross diagonal >= 2sqrt2");
    b.con(c("3.2") - A("quad_cross_diag", qs), "cross diagonal <= 3.2");
    if (row.tau)
      b.r.goal = c(row.bound) - squander;
    else
      b.r.goal = score - c(row.bound);
    cat.add(b.build());
  }
}

void sectionA20(Catalog& cat) {
  const char* heights[] = {"2", "2.51"};
  const char* b4opts[] = {"2.51", kS8};
  const char* b3opts[] = {"2", "2.51", kS8};
  auto kcounts = [&](const char* b3, const char* b4, int& k0, int& k1, int& k2) {
    k0 = 2;  // b1 = b2 = 2
    k1 = 0;
    k2 = 0;
    for (const char* e : {b3, b4}) {
      if (std::string(e) == "2") ++k0;
      else if (std::string(e) == "2.51") ++k1;
      else ++k2;
    }
  };
  for (const char* b4 : b4opts)
    for (const char* b3 : b3opts) {
      if (std::strtod(b4, nullptr) < std::strtod(b3, nullptr)) continue;
      if (std::string(b4) == "2.51" && std::string(b3) == "2")
        continue;  // no such subcluster (degenerate delta)
      for (const char* a2 : heights)
        for (const char* a4 : heights) {
          int k0, k1, k2;
          kcounts(b3, b4, k0, k1, k2);
          char tag[64];
          std::snprintf(tag, sizeof tag, "a2=%s,a4=%s,b3=%s,b4=%s", a2, a4,
                        b3, std::string(b4) == "2.51" ? "2.51" : "2s2");
          char zname[16], dname[16];
          std::snprintf(zname, sizeof zname, "Z_4_%d", k1 + k2);
          std::snprintf(dname, sizeof dname, "D_4_%d", k1 + k2);
          // penalties
          double psig = (k0 + 2 * k2) * 0.008 / 3 + 0.009 * k2;
          double ptau = 0.04683 + (k0 + 2 * k2 - 3) * 0.008 / 3 + 0.0066 * k2;
          char psig_s[32], ptau_s[32];
          std::snprintf(psig_s, sizeof psig_s, "%.12f", psig);
          std::snprintf(ptau_s, sizeof ptau_s, "%.12f", ptau);
          for (int item = 1; item <= 2; ++item) {
            B b(item == 1 ? "193776341" : "898647773", "A20", item,
                "quadrilateral with one special diagonal");
            b.r.vars = {{"g", std::strtod(kS8, nullptr), 3.2, kS8, "3.2"}};
            b.cases(tag);
            QuadSpec q{L("2"), L("2"), L(a2), L("2"), L("2"), L(b3), L(a4), L(b4)};
            Expr score, squander;
            add_quad_exprs(b, q, 0, score, squander);
            if (item == 1)
              b.r.goal = score + c(psig_s) - nm(zname);
            else
              b.r.goal = nm(dname) + c(ptau_s) - squander;
            cat.add(b.build());
          }
        }
    }
  // items 3..6: two specials, narrow patterns
  for (int item = 3; item <= 6; ++item) {
    const char* id = item == 3 ? "844634710"
                     : item == 4 ? "328845176"
                     : item == 5 ? "233273785"
                                 : "966955550";
    std::vector<const char*> b3s;
    if (item <= 4) b3s = {"2.51", kS8};
    else b3s = {"2"};
    for (const char* a2 : heights)
      for (const char* b3 : b3s) {
        char tag[64];
        std::snprintf(tag, sizeof tag, "a2=%s,b3=%s", a2,
                      std::string(b3) == kS8 ? "2s2" : b3);
        B b(id, "A20", item, "quadrilateral, special at b4 = 2 sqrt 2");
        b.r.vars = {{"g", std::strtod(kS8, nullptr), 3.2, kS8, "3.2"}};
        b.cases(tag);
        QuadSpec q{L("2"), L("2"), L(a2), L("2"), L("2"), L(b3), L("2"), L(kS8)};
        Expr score, squander;
        add_quad_exprs(b, q, 0, score, squander);
        if (item == 3)
          b.r.goal = score - (nm("Z_4_2") - c("0.0461") - c("0.009") -
                              c("2") * c("0.008"));
        else if (item == 4)
          b.r.goal = (nm("D_5_1") + c("0.04683") + c("0.008") +
                      c("2") * c("0.0066")) - squander;
        else if (item == 5)
          b.r.goal = score - (nm("s_5") - c("0.0461") - c("0.008"));
        else
          b.r.goal = (nm("t_5") + c("0.008")) - squander;
        cat.add(b.build());
      }
  }
}

void sectionA21(Catalog& cat) {
  for (int item = 1; item <= 2; ++item) {
    InequalityRecord r;
    r.id = item == 1 ? "275286804" : "627654828";
    r.section = "A21";
    r.index = item;
    r.statement = "pentagonal arrangement of two specials";
    r.vars = {{"g1", std::strtod(kS8, nullptr), 3.2, kS8, "3.2"},
              {"g2", std::strtod(kS8, nullptr), 3.2, kS8, "3.2"}};
    std::vector<Slot> s1 = {L("2"), L("2"), L("2"), V(0), L("2"), L("2")};
    std::vector<Slot> s2 = {L("2"), L("2"), L("2"), V(1), L("2"), L("2")};
    std::vector<Slot> s3 = {L("2"), L("2"), L("2"), V(0), V(1), L("2")};
    Expr score = A("vor0", s1) + A("vor0", s2) + A("vor0", s3);
    Expr sol = A("sol", s1) + A("sol", s2) + A("sol", s3);
    B b("", "", 0, "");
    b.r = r;
    b.con(A("delta", s3), "delta >= 0");
    if (item == 1)
      b.r.goal = score - (nm("s_5") - c("0.008"));
    else
      b.r.goal = (nm("t_5") + c("0.008")) - (nm("zpt") * sol - score);
    cat.add(b.build());
  }
  cat.add(B("995177961", "A21", 3, "hexagonal: vor0 < s6 - penalties")
              .fix(0, "2").fix(1, "2").fix(2, "2")
              .v(3, kS8, "3.2").v(4, kS8, "3.2").v(5, kS8, "3.2")
              .lt(S("vor0"), nm("s_6") - c("2") * c("0.008") - c("3") * c("0.0461"))
              .simplex_domain()
              .build());
  cat.add(B("735892048", "A21", 4, "hexagonal: tau0 > t6 + pi_max")
              .fix(0, "2").fix(1, "2").fix(2, "2")
              .v(3, kS8, "3.2").v(4, kS8, "3.2").v(5, kS8, "3.2")
              .gt(tau_of(S("vor0"), S("sol")), nm("t_6") + nm("pi_max"))
              .simplex_domain()
              .build());
}

void sectionA22A23(Catalog& cat) {
  const Line a22[] = {{"53502142", "-3.58", "2.28501"},
                      {"134398524", "-2.715", "1.67382"},
                      {"371491817", "-1.517", "0.8285"},
                      {"832922998", "-0.858", "0.390925"},
                      {"724796759", "-0.349", "0.12012"},
                      {"431940343", "-0.177", "0.0501"}};
  // union of an anchored simplex (vars 0-5) and the adjacent special
  // S' = S(2, w2, w3, y4, 2, 2) with w2, w3 the extra vars 6, 7
  auto union_builder = [](const char* id, const char* sec, int idx,
                          const char* st) {
    B b(id, sec, idx, st);
    b.v(0, "2.51", kS8).v(3, kS8, "3.2");
    b.r.vars.push_back({"w2", 2.0, 2.51, "2", "2.51"});
    b.r.vars.push_back({"w3", 2.0, 2.51, "2", "2.51"});
    std::vector<Slot> sp = {L("2"), V(6), V(7), V(3), L("2"), L("2")};
    b.con(A("delta", sp), "special delta >= 0");
    b.dih_cap("2.46").simplex_domain();
    return b;
  };
  std::vector<Slot> sp = {L("2"), V(6), V(7), V(3), L("2"), L("2")};
  for (int i = 0; i < 6; ++i) {
    B b = union_builder(a22[i].id, "A22", i + 1,
                        "vor0 of anchored simplex + special < a + b dih");
    b.lt(S("vor0") + A("vor0", sp), c(a22[i].a) + c(a22[i].b) * S("dih"));
    cat.add(b.build());
  }
  const Line a22q[] = {{"980721294", "-1.79", "2.28501"},
                       {"989564937", "-1.3575", "1.67382"},
                       {"263355808", "-0.7585", "0.8285"},
                       {"445132132", "-0.429", "0.390925"}};
  for (int i = 0; i < 4; ++i) {
    cat.add(B(a22q[i].id, "A22", 7 + i, "vor0 < a/2 + b dih, quarter with y5 = 2.51")
                .v(0, "2.51", kS8).fix(4, "2.51")
                .lt(S("vor0"), c(a22q[i].a) + c(a22q[i].b) * S("dih"))
                .simplex_domain()
                .build());
  }
  cat.add(B("806767374", "A22", 11, "vor0 < (-0.349)/2 + 0.12012 dih + 0.2(dih-1.23)")
              .v(0, "2.51", kS8).fix(4, "2.51")
              .lt(S("vor0"), c("-0.1745") + c("0.12012") * S("dih") +
                                 c("0.2") * (S("dih") - c("1.23")))
              .simplex_domain()
              .build());
  cat.add(B("511038592", "A22", 12, "vor0 < (-0.177)/2 + 0.0501 dih + 0.2(dih-1.23)")
              .v(0, "2.51", kS8).fix(4, "2.51")
              .lt(S("vor0"), c("-0.0885") + c("0.0501") * S("dih") +
                                 c("0.2") * (S("dih") - c("1.23")))
              .simplex_domain()
              .build());

  const Line a23[] = {{"4591018", "-3.48", "2.1747"},
                      {"193728878", "-3.06", "1.87427"},
                      {"2724096", "-1.58", "0.83046"},
                      {"213514168", "-1.06", "0.48263"},
                      {"750768322", "-0.83", "0.34833"},
                      {"371464244", "-0.50", "0.1694"},
                      {"657011065", "-0.2886", "0.0822"}};
  for (int i = 0; i < 7; ++i) {
    B b = union_builder(a23[i].id, "A23", i + 1,
                        "-tau0(union) + 0.06585 < a + b dih");
    Expr tau_union = nm("zpt") * (S("sol") + A("sol", sp)) -
                     (S("vor0") + A("vor0", sp));
    b.lt(c("0.06585") - tau_union, c(a23[i].a) + c(a23[i].b) * S("dih"));
    cat.add(b.build());
  }
  cat.add(B("66753311", "A23", 8, "tau0(special) > 0.06585, y1 = 2.51")
              .fix(0, "2.51").v(3, kS8, "3").fix(4, "2").fix(5, "2")
              .gt(tau_of(S("vor0"), S("sol")), c("0.06585"))
              .simplex_domain()
              .build());
  cat.add(B("762922223", "A23", 9, "tau0(special) > 0.06585, long diagonal")
              .fix(0, "2.51").v(1, "2.2", "2.51").v(3, "3", "3.2")
              .fix(4, "2").fix(5, "2")
              .gt(tau_of(S("vor0"), S("sol")), c("0.06585"))
              .simplex_domain()
              .build());
  const Line a23q[] = {{"953023504", "-1.74", "2.1747"},
                       {"887276655", "-1.53", "1.87427"},
                       {"246315515", "-0.79", "0.83046"},
                       {"784421604", "-0.53", "0.48263"},
                       {"258632246", "-0.415", "0.34833"}};
  for (int i = 0; i < 5; ++i) {
    cat.add(B(a23q[i].id, "A23", 10 + i,
              "-tau0 + 0.06585/2 < a/2 + b dih, quarter with y5 = 2.51")
                .v(0, "2.51", kS8).fix(4, "2.51")
                .lt(c("0.032925") - tau_of(S("vor0"), S("sol")),
                    c(a23q[i].a) + c(a23q[i].b) * S("dih"))
                .simplex_domain()
                .build());
  }
  cat.add(B("404164527", "A23", 15, "-tau0 + 0.06585/2 < -0.25 + 0.1694 dih + 0.03(dih-1.23)")
              .v(0, "2.51", kS8).fix(4, "2.51")
              .lt(c("0.032925") - tau_of(S("vor0"), S("sol")),
                  c("-0.25") + c("0.1694") * S("dih") +
                      c("0.03") * (S("dih") - c("1.23")))
              .simplex_domain()
              .build());
  cat.add(B("163088471", "A23", 16, "-tau0 + 0.06585/2 < -0.1443 + 0.0822 dih + 0.2(dih-1.23)")
              .v(0, "2.51", kS8).fix(4, "2.51")
              .lt(c("0.032925") - tau_of(S("vor0"), S("sol")),
                  c("-0.1443") + c("0.0822") * S("dih") +
                      c("0.2") * (S("dih") - c("1.23")))
              .simplex_domain()
              .build());
}

void sectionA24(Catalog& cat) {
  cat.add(B("968721007", "A24", 1, "tau0 + 0.0822 dih > 0.159")
              .v(0, "2.51", kS8).v(5, "2.51", "2.75").fix(1, "2").fix(3, "2")
              .gt(tau_of(S("vor0"), S("sol")) + c("0.0822") * S("dih"),
                  c("0.159"))
              .simplex_domain()
              .build());
  cat.add(B("783968228", "A24", 2, "dih < 1.23 when y6 is long")
              .v(0, "2.51", kS8).fix(1, "2.51").fix(3, "2").v(5, "2.51", "5.3")
              .lt(S("dih"), c("1.23"))
              .simplex_domain()
              .build());
  cat.add(B("745174731", "A24", 3, "dih < 1.23 when y6 >= 2.75")
              .v(0, "2.51", kS8).fix(1, "2").fix(3, "2").v(5, "2.75", "4.8")
              .lt(S("dih"), c("1.23"))
              .simplex_domain()
              .build());
}

}  // namespace

namespace {
// ingest-time domain sanity: flag boxes where sampling finds no
// feasible point rather than silently accepting them
void flag_empty_domains(Catalog& c) {
  std::mt19937_64 rng(20240601);
  for (auto& rec : const_cast<std::vector<InequalityRecord>&>(c.all())) {
    bool found = false;
    std::vector<double> p(rec.vars.size());
    for (int t = 0; t < 2000 && !found; ++t) {
      for (size_t i = 0; i < p.size(); ++i) {
        std::uniform_real_distribution<double> d(rec.vars[i].lo, rec.vars[i].hi);
        p[i] = d(rng);
      }
      bool ok = true;
      for (const auto& cn : rec.constraints) {
        try {
          if (eval_expr<double>(cn.expr, p) < -1e-9) { ok = false; break; }
        } catch (const domain_error&) { ok = false; break; }
      }
      if (ok)
        for (const auto& cl : rec.any_of) {
          bool any = false;
          for (const auto& cn : cl) {
            try {
              if (eval_expr<double>(cn.expr, p) >= -1e-9) { any = true; break; }
            } catch (const domain_error&) {}
          }
          if (!any) { ok = false; break; }
        }
      found = ok;
    }
    if (!found) rec.notes += "[flagged: no feasible sample found at ingest]";
  }
}
}  // namespace

const Catalog& Catalog::builtin() {
  static const Catalog cat = [] {
    Catalog c;
    sectionA1(c);
    sectionA2A3(c);
    sectionA4toA7(c);
    sectionA8(c);
    sectionA9(c);
    sectionA10A11(c);
    sectionA12(c);
    sectionA13(c);
    sectionA14(c);
    sectionA15(c);
    sectionA16(c);
    sectionA17A18(c);
    sectionA19(c);
    sectionA20(c);
    sectionA21(c);
    sectionA22A23(c);
    sectionA24(c);
    flag_empty_domains(c);
    return c;
  }();
  return cat;
}

std::vector<const InequalityRecord*> Catalog::lookup(const std::string& id) const {
  std::vector<const InequalityRecord*> out;
  for (const auto& r : records_)
    if (r.id == id) out.push_back(&r);
  return out;
}

std::vector<const InequalityRecord*> Catalog::section(const std::string& sec) const {
  std::vector<const InequalityRecord*> out;
  for (const auto& r : records_)
    if (r.section == sec) out.push_back(&r);
  return out;
}

std::vector<std::string> desk_scale_ids() {
  return {"971555266", "499014780", "410091263", "805296510", "883139937",
          "747727191", "474496219", "814398901", "366536370", "115756648"};
}

}  // namespace packbound
