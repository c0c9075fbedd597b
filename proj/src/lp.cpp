#include "packbound/lp.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

// Dense two-phase simplex with Bland's rule.  The loop problems have
// at most a dozen variables, so no effort is spent on sparsity.

namespace packbound {

namespace {

constexpr double kEps = 1e-11;

struct Tableau {
  int m = 0, n = 0;             // constraints, structural+slack columns
  std::vector<double> t;        // (m+1) x (n+1), last row = objective
  std::vector<int> basis;
  std::vector<bool> enterable;

  double& at(int r, int c) { return t[size_t(r) * (n + 1) + c]; }
  double at(int r, int c) const { return t[size_t(r) * (n + 1) + c]; }

  void pivot(int pr, int pc) {
    const double pv = at(pr, pc);
    for (int c = 0; c <= n; ++c) at(pr, c) /= pv;
    for (int r = 0; r <= m; ++r) {
      if (r == pr) continue;
      const double f = at(r, pc);
      if (f == 0) continue;
      for (int c = 0; c <= n; ++c) at(r, c) -= f * at(pr, c);
    }
    basis[pr] = pc;
  }

  // Bland: smallest-index entering column, smallest-index leaving row
  bool iterate() {
    for (;;) {
      int pc = -1;
      for (int c = 0; c < n; ++c) {
        if (!enterable[c]) continue;
        if (at(m, c) > kEps) {
          pc = c;
          break;
        }
      }
      if (pc < 0) return true;  // optimal
      int pr = -1;
      double best = 0;
      for (int r = 0; r < m; ++r) {
        if (at(r, pc) > kEps) {
          double ratio = at(r, n) / at(r, pc);
          if (pr < 0 || ratio < best - kEps ||
              (ratio < best + kEps && basis[r] < basis[pr])) {
            best = ratio;
            pr = r;
          }
        }
      }
      if (pr < 0) return false;  // unbounded
      pivot(pr, pc);
    }
  }
};

}  // namespace

LpSolution lp_solve_dense(const std::vector<double>& c,
                          const std::vector<LpRow>& rows) {
  const int nx = int(c.size());
  const int m = int(rows.size());
  // normalize rhs >= 0
  std::vector<LpRow> r = rows;
  for (auto& row : r) {
    if (row.b < 0) {
      for (double& v : row.a) v = -v;
      row.b = -row.b;
      row.rel = row.rel == '<' ? '>' : row.rel == '>' ? '<' : '=';
    }
  }
  int nslack = 0, nart = 0;
  for (const auto& row : r) {
    if (row.rel == '<') ++nslack;
    else if (row.rel == '>') { ++nslack; ++nart; }
    else ++nart;
  }
  Tableau T;
  T.m = m;
  T.n = nx + nslack + nart;
  T.t.assign(size_t(m + 1) * (T.n + 1), 0.0);
  T.basis.assign(m, -1);
  T.enterable.assign(T.n, true);
  int scol = nx, acol = nx + nslack;
  std::vector<int> slack_of(m, -1), art_of(m, -1);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < nx; ++j) T.at(i, j) = r[i].a[j];
    T.at(i, T.n) = r[i].b;
    if (r[i].rel == '<') {
      T.at(i, scol) = 1;
      T.basis[i] = scol;
      slack_of[i] = scol;
      ++scol;
    } else if (r[i].rel == '>') {
      T.at(i, scol) = -1;
      slack_of[i] = scol;
      ++scol;
      T.at(i, acol) = 1;
      T.basis[i] = acol;
      art_of[i] = acol;
      ++acol;
    } else {
      T.at(i, acol) = 1;
      T.basis[i] = acol;
      art_of[i] = acol;
      ++acol;
    }
  }
  LpSolution sol;
  // phase 1: maximize -sum(artificials)
  if (nart > 0) {
    for (int i = 0; i < m; ++i) {
      if (art_of[i] < 0) continue;
      for (int cix = 0; cix <= T.n; ++cix) T.at(m, cix) += T.at(i, cix);
    }
    for (int i = 0; i < m; ++i)
      if (art_of[i] >= 0) T.at(m, art_of[i]) = 0;
    if (!T.iterate()) return sol;
    if (T.at(m, T.n) > 1e-8) return sol;  // infeasible
    // drive remaining artificials out of the basis where possible
    for (int i = 0; i < m; ++i) {
      if (T.basis[i] >= nx + nslack) {
        for (int cix = 0; cix < nx + nslack; ++cix) {
          if (std::abs(T.at(i, cix)) > 1e-9) {
            T.pivot(i, cix);
            break;
          }
        }
      }
    }
    for (int cix = nx + nslack; cix < T.n; ++cix) T.enterable[cix] = false;
  }
  // phase 2 objective
  for (int cix = 0; cix <= T.n; ++cix) T.at(m, cix) = 0;
  for (int j = 0; j < nx; ++j) T.at(m, j) = c[j];
  for (int i = 0; i < m; ++i) {
    const int b = T.basis[i];
    if (b < nx && c[b] != 0) {
      const double f = c[b];
      for (int cix = 0; cix <= T.n; ++cix) T.at(m, cix) -= f * T.at(i, cix);
      T.at(m, b) = 0;
    }
  }
  if (!T.iterate()) {
    sol.feasible = true;
    sol.bounded = false;
    return sol;
  }
  sol.feasible = true;
  sol.objective = -T.at(m, T.n);
  sol.x.assign(nx, 0.0);
  for (int i = 0; i < m; ++i)
    if (T.basis[i] < nx) sol.x[T.basis[i]] = T.at(i, T.n);
  // dual values from the reduced costs of the slack/artificial columns
  sol.dual.assign(m, 0.0);
  for (int i = 0; i < m; ++i) {
    const int col = art_of[i] >= 0 ? art_of[i] : slack_of[i];
    double y = -T.at(m, col);
    if (art_of[i] < 0 && r[i].rel == '>') y = -y;  // surplus has -1 column
    // account for rhs sign flips done above
    if (rows[i].b < 0) y = -y;
    sol.dual[i] = y;
  }
  double dual_obj = 0;
  for (int i = 0; i < m; ++i) dual_obj += sol.dual[i] * rows[i].b;
  sol.duality_gap = std::abs(dual_obj - sol.objective);
  return sol;
}

// ------------------------- loop model -------------------------

namespace {

struct KindData {
  // score upper bounds and squander lower bounds, linear in dih
  std::vector<std::pair<double, double>> score;     // sigma <= a + b dih
  std::vector<std::pair<double, double>> squander;  // tau >= a + b dih
  double dih_lo, dih_hi;
};

const KindData& kind_data(SimplexKind k) {
  static const KindData quarter = {
      {{-4.3223, 4.10113}, {-0.9871, 0.80449}, {-0.8756, 0.70186},
       {-0.3404, 0.24573}, {-0.0024, 0.00154}, {0.1196, -0.07611}},
      {{4.42873, -4.16523}, {1.01104, -0.78701}, {0.99937, -0.77627},
       {0.34877, -0.21916}, {0.11434, -0.05107}, {-0.07749, 0.07106}},
      0.956, 2.184};
  static const KindData anchored = {
      {{-3.421, 2.28501}, {-2.616, 1.67382}, {-1.4486, 0.8285},
       {-0.79, 0.390925}, {-0.3088, 0.12012}, {-0.1558, 0.0501}},
      {{3.3407, -2.1747}, {2.945, -1.87427}, {1.5035, -0.83046},
       {1.0009, -0.48263}, {0.7787, -0.34833}, {0.4475, -0.1694},
       {0.2568, -0.0822}},
      1.23, 2.46};
  static const KindData longe = {
      {{-3.58, 2.28501}, {-2.715, 1.67382}, {-1.517, 0.8285},
       {-0.858, 0.390925}, {-0.358, 0.12012}, {-0.186, 0.0501}},
      {{3.48, -2.1747}, {3.06, -1.87427}, {1.58, -0.83046}, {1.06, -0.48263},
       {0.83, -0.34833}, {0.50, -0.1694}, {0.29, -0.0822}},
      1.4167, 2.46};
  // the special-adjacent family: score constants differ from the long
  // family by at most 0.009 and squander constants improve by 0.06585
  static const KindData special = [] {
    KindData d = longe;
    d.score[4].first = -0.349;
    d.score[5].first = -0.177;
    for (auto& ln : d.squander) ln.first += 0.06585;
    d.squander[6].first -= 0.0014;
    return d;
  }();
  switch (k) {
    case SimplexKind::kQuarter: return quarter;
    case SimplexKind::kAnchored: return anchored;
    case SimplexKind::kLongEdge: return longe;
    default: return special;
  }
}

}  // namespace

LpResult lp_solve(const LoopModel& model, LoopObjective objective) {
  const int n = int(model.kinds.size());
  const double pi = std::acos(-1.0);
  const double angle_budget = model.dropped ? 2 * pi - 2.46 : 2 * pi;
  // variables: u_i = dih_i - lb_i >= 0, then v_i = score/squander_i + M >= 0
  const double M = 16.0;
  std::vector<double> c(2 * n, 0.0);
  std::vector<LpRow> rows;
  double lbsum = 0;
  for (int i = 0; i < n; ++i) lbsum += kind_data(model.kinds[i]).dih_lo;
  const bool maxing = objective == LoopObjective::kMaxScore;
  for (int i = 0; i < n; ++i) {
    const KindData& kd = kind_data(model.kinds[i]);
    c[n + i] = maxing ? 1.0 : -1.0;
    // dih upper bound
    LpRow ub;
    ub.a.assign(2 * n, 0.0);
    ub.a[i] = 1;
    ub.rel = '<';
    ub.b = kd.dih_hi - kd.dih_lo;
    rows.push_back(ub);
    const auto& lines = maxing ? kd.score : kd.squander;
    for (const auto& [a0, b0] : lines) {
      // score: v - M <= a0 + b0 (lb + u)   ->  v - b0 u <= a0 + b0 lb + M
      // squander: v - M >= a0 + b0 (lb + u) -> v - b0 u >= a0 + b0 lb + M
      LpRow rr;
      rr.a.assign(2 * n, 0.0);
      rr.a[n + i] = 1;
      rr.a[i] = -b0;
      rr.b = a0 + b0 * kd.dih_lo + M;
      rr.rel = maxing ? '<' : '>';
      rows.push_back(rr);
    }
  }
  LpRow sum;
  sum.a.assign(2 * n, 0.0);
  for (int i = 0; i < n; ++i) sum.a[i] = 1;
  sum.rel = model.dropped ? '<' : '=';
  sum.b = angle_budget - lbsum;
  rows.push_back(sum);

  LpResult res;
  if (sum.b < -1e-12) return res;  // angle lower bounds exceed the budget
  LpSolution sol = lp_solve_dense(c, rows);
  if (!sol.feasible || !sol.bounded) return res;
  res.feasible = true;
  res.value = maxing ? sol.objective - n * M : -sol.objective + n * M;
  res.duality_gap = sol.duality_gap;
  res.dih.resize(n);
  for (int i = 0; i < n; ++i)
    res.dih[i] = kind_data(model.kinds[i]).dih_lo + sol.x[i];
  return res;
}

}  // namespace packbound
