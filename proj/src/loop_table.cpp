#include <algorithm>
#include <functional>
#include <cmath>
#include <sstream>

#include "packbound/constants.hpp"
#include "packbound/lp.hpp"

// Reproduction of the loop linear-programming table: worst case over
// all admissible type assignments per (n, k), with the drop rule for a
// single simplex of dihedral angle beyond 2.46.

namespace packbound {

namespace {

const char* kind_name(SimplexKind k) {
  switch (k) {
    case SimplexKind::kQuarter: return "quarter";
    case SimplexKind::kAnchored: return "anchored";
    case SimplexKind::kLongEdge: return "long";
    default: return "special";
  }
}

std::string describe(const LoopModel& m) {
  std::ostringstream os;
  for (size_t i = 0; i < m.kinds.size(); ++i)
    os << (i ? "+" : "") << kind_name(m.kinds[i]);
  if (m.dropped) os << "+dropped";
  return os.str();
}

// all multisets of long types of size k
void long_assignments(int k, std::vector<std::vector<SimplexKind>>& out) {
  const SimplexKind kinds[3] = {SimplexKind::kAnchored, SimplexKind::kLongEdge,
                                SimplexKind::kSpecialAdj};
  std::vector<SimplexKind> cur;
  std::function<void(int, int)> rec = [&](int start, int left) {
    if (left == 0) {
      out.push_back(cur);
      return;
    }
    for (int i = start; i < 3; ++i) {
      cur.push_back(kinds[i]);
      rec(i, left - 1);
      cur.pop_back();
    }
  };
  rec(0, k);
}

struct Worst {
  bool have = false;
  double d = 0, z = 0;
  std::string dd, zd;
};

Worst worst_over_assignments(int n, int k) {
  Worst w;
  std::vector<std::vector<SimplexKind>> longs;
  long_assignments(k, longs);
  for (const auto& ls : longs) {
    // drop branch options: keep all, or drop one long simplex
    for (int drop = -1; drop < int(ls.size()); ++drop) {
      if (drop >= 0 && (drop > 0 && ls[drop] == ls[drop - 1])) continue;
      LoopModel m;
      m.dropped = drop >= 0;
      for (int i = 0; i < int(ls.size()); ++i)
        if (i != drop) m.kinds.push_back(ls[i]);
      for (int i = 0; i < n - k; ++i) m.kinds.push_back(SimplexKind::kQuarter);
      LpResult dres = lp_solve(m, LoopObjective::kMinSquander);
      LpResult zres = lp_solve(m, LoopObjective::kMaxScore);
      if (dres.feasible) {
        if (!w.have || dres.value < w.d) {
          w.d = dres.value;
          w.dd = describe(m);
        }
      }
      if (zres.feasible) {
        if (!w.have || zres.value > w.z) {
          w.z = zres.value;
          w.zd = describe(m);
        }
      }
      if (dres.feasible || zres.feasible) w.have = true;
    }
  }
  return w;
}

}  // namespace

std::vector<LoopTableRow> lp_table() {
  const Constants& C = Constants::get();
  std::vector<LoopTableRow> rows;
  {
    LoopTableRow r;
    r.n = 4;
    r.k = 0;
    r.imported_d = true;
    r.d_lp = 0.1362;  // imported companion bound, not reproduced here
    r.d_target = midpoint(C.D(4, 0));
    r.z_target = midpoint(C.Z(4, 0));
    Worst w = worst_over_assignments(4, 0);
    r.z_lp = w.z;
    r.z_assignment = w.zd;
    r.d_assignment = "imported";
    rows.push_back(r);
  }
  const int plain[][2] = {{4, 1}, {4, 2}, {4, 3}, {5, 0}, {5, 1}};
  for (auto& nk : plain) {
    LoopTableRow r;
    r.n = nk[0];
    r.k = nk[1];
    Worst w = worst_over_assignments(r.n, r.k);
    r.d_lp = w.d;
    r.z_lp = w.z;
    r.d_assignment = w.dd;
    r.z_assignment = w.zd;
    r.d_target = midpoint(C.D(r.n, r.k));
    r.z_target = midpoint(C.Z(r.n, r.k));
    rows.push_back(r);
  }
  {
    LoopTableRow r;
    r.n = 5;
    r.k = 2;
    r.k_or_more = true;
    r.has_z = false;
    bool first = true;
    for (int k = 2; k <= 4; ++k) {
      Worst w = worst_over_assignments(5, k);
      if (!w.have) continue;
      if (first || w.d < r.d_lp) {
        r.d_lp = w.d;
        r.d_assignment = w.dd;
        first = false;
      }
    }
    r.d_target = midpoint(C.target.iv);
    rows.push_back(r);
  }
  return rows;
}

std::string lp_table_csv() {
  std::ostringstream os;
  os << "n,k,D_LP,D,Z_LP,Z,imported,D_assignment,Z_assignment\n";
  os.precision(10);
  for (const auto& r : lp_table()) {
    os << r.n << "," << (r.k_or_more ? ">=" : "") << r.k << "," << r.d_lp << ","
       << r.d_target << ",";
    if (r.has_z)
      os << r.z_lp << "," << r.z_target;
    else
      os << "*,*";
    os << "," << (r.imported_d ? "yes" : "no") << "," << r.d_assignment << ","
       << r.z_assignment << "\n";
  }
  return os.str();
}

std::vector<std::pair<std::string, double>> z41_refinement() {
  std::vector<std::pair<std::string, double>> out;
  // branch 1: the non-quarter has a long fourth edge (>= 2 sqrt 2)
  {
    LoopModel m{{SimplexKind::kLongEdge, SimplexKind::kQuarter,
                 SimplexKind::kQuarter, SimplexKind::kQuarter},
                false};
    out.push_back({"y4 >= 2sqrt2", lp_solve(m, LoopObjective::kMaxScore).value});
  }
  // branch 2: anchored with dih >= 2.2 (tighten its lower bound)
  {
    // reuse the dense solver with a custom lower bound by shifting
    LoopModel m{{SimplexKind::kAnchored, SimplexKind::kQuarter,
                 SimplexKind::kQuarter, SimplexKind::kQuarter},
                false};
    // a quick scan over dih_1 in [2.2, 2.46]: score of the anchored
    // simplex is its line envelope; remaining angle goes to quarters
    (void)m;
    double best = -1e9;
    const double pi = std::acos(-1.0);
    auto qenv = [&](double d) {
      const double lines[][2] = {{-4.3223, 4.10113}, {-0.9871, 0.80449},
                                 {-0.8756, 0.70186}, {-0.3404, 0.24573},
                                 {-0.0024, 0.00154}, {0.1196, -0.07611}};
      double v = 1e9;
      for (auto& l : lines) v = std::min(v, l[0] + l[1] * d);
      return v;
    };
    auto aenv = [&](double d) {
      const double lines[][2] = {{-3.421, 2.28501}, {-2.616, 1.67382},
                                 {-1.4486, 0.8285}, {-0.79, 0.390925},
                                 {-0.3088, 0.12012}, {-0.1558, 0.0501}};
      double v = 1e9;
      for (auto& l : lines) v = std::min(v, l[0] + l[1] * d);
      return v;
    };
    for (int i = 0; i <= 2000; ++i) {
      double d1 = 2.2 + (2.46 - 2.2) * i / 2000.0;
      double rest = (2 * pi - d1) / 3;
      if (rest < 0.956 || rest > 2.184) continue;
      best = std::max(best, aenv(d1) + 3 * qenv(rest));
    }
    out.push_back({"dih >= 2.2", best});
  }
  // branch 3: dih <= 2.2 and y1 <= 2.75: the anchored score is below
  // -0.0571 outright
  {
    const double pi = std::acos(-1.0);
    double best = -1e9;
    auto qenv = [&](double d) {
      const double lines[][2] = {{-4.3223, 4.10113}, {-0.9871, 0.80449},
                                 {-0.8756, 0.70186}, {-0.3404, 0.24573},
                                 {-0.0024, 0.00154}, {0.1196, -0.07611}};
      double v = 1e9;
      for (auto& l : lines) v = std::min(v, l[0] + l[1] * d);
      return v;
    };
    for (int i = 0; i <= 2000; ++i) {
      double d1 = 1.23 + (2.2 - 1.23) * i / 2000.0;
      double rest = (2 * pi - d1) / 3;
      if (rest < 0.956 || rest > 2.184) continue;
      best = std::max(best, -0.0571 + 3 * qenv(rest));
    }
    out.push_back({"dih <= 2.2, y1 <= 2.75", best});
  }
  // branch 4: y1 >= 2.75: the quarters also obey the stronger line
  {
    const double pi = std::acos(-1.0);
    double best = -1e9;
    auto qenv = [&](double d) {
      const double lines[][2] = {{-4.3223, 4.10113}, {-0.9871, 0.80449},
                                 {-0.8756, 0.70186}, {-0.3404, 0.24573},
                                 {-0.0024, 0.00154}, {0.1196, -0.07611},
                                 {-0.3429, 0.24573}};
      double v = 1e9;
      for (auto& l : lines) v = std::min(v, l[0] + l[1] * d);
      return v;
    };
    auto aenv = [&](double d) {
      const double lines[][2] = {{-3.421, 2.28501}, {-2.616, 1.67382},
                                 {-1.4486, 0.8285}, {-0.79, 0.390925},
                                 {-0.3088, 0.12012}, {-0.1558, 0.0501}};
      double v = 1e9;
      for (auto& l : lines) v = std::min(v, l[0] + l[1] * d);
      return v;
    };
    for (int i = 0; i <= 2000; ++i) {
      double d1 = 1.23 + (2.2 - 1.23) * i / 2000.0;
      double rest = (2 * pi - d1) / 3;
      if (rest < 0.956 || rest > 2.184) continue;
      best = std::max(best, aenv(d1) + 3 * qenv(rest));
    }
    out.push_back({"y1 >= 2.75", best});
  }
  return out;
}

}  // namespace packbound
