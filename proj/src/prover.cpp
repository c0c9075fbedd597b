#include "packbound/prover.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <random>
#include <thread>

namespace packbound {

namespace {

constexpr double kPointTol = 1e-9;
constexpr double kNonstrictSlack = 1e-9;

enum class CellOutcome { kCertified, kPruned, kSplit, kExhausted, kViolated };

struct CellResult {
  CellOutcome outcome = CellOutcome::kSplit;
  int split_dim = -1;
  double upper = std::numeric_limits<double>::infinity();
  Counterexample ce;
};

struct Problem {
  const InequalityRecord* rec = nullptr;
  // per-variable evaluation ranges: goal uses the cell; constraints use
  // the cell widened to `con_hull` on reduced variables (a feasible
  // point anywhere above the slice keeps the slice cell alive)
  std::vector<int> reduced_vars;
  std::vector<Interval> con_ranges;
  double certify_below = 0.0;

  std::vector<Interval> constraint_env(const std::vector<Interval>& box) const {
    std::vector<Interval> env = box;
    for (size_t i = 0; i < reduced_vars.size(); ++i)
      env[reduced_vars[i]] = con_ranges[i];
    return env;
  }
};

bool finite(const Interval& v) { return v.finite(); }

// trivalent feasibility of one cell under the record constraints
enum class Feas { kInfeasible, kFeasible, kUnknown };

Feas feasibility(const Problem& p, const std::vector<Interval>& box) {
  const auto env = p.constraint_env(box);
  bool all_sure = true;
  for (const Constraint& c : p.rec->constraints) {
    Interval v;
    try {
      v = eval_expr<Interval>(c.expr, env);
    } catch (const domain_error&) {
      all_sure = false;
      continue;
    }
    if (v.hi < 0) return Feas::kInfeasible;
    if (!(v.lo >= 0)) all_sure = false;
  }
  for (const auto& clause : p.rec->any_of) {
    bool any_possible = false, any_sure = false;
    for (const Constraint& c : clause) {
      try {
        Interval v = eval_expr<Interval>(c.expr, env);
        if (v.hi >= 0) any_possible = true;
        if (v.lo >= 0) any_sure = true;
      } catch (const domain_error&) {
        any_possible = true;
      }
    }
    if (!any_possible) return Feas::kInfeasible;
    if (!any_sure) all_sure = false;
  }
  return all_sure ? Feas::kFeasible : Feas::kUnknown;
}

bool point_feasible(const InequalityRecord& rec, const std::vector<double>& pt) {
  for (const Constraint& c : rec.constraints) {
    try {
      if (eval_expr<double>(c.expr, pt) < -kPointTol) return false;
    } catch (const domain_error&) {
      return false;
    }
  }
  for (const auto& clause : rec.any_of) {
    bool ok = false;
    for (const Constraint& c : clause) {
      try {
        if (eval_expr<double>(c.expr, pt) >= -kPointTol) {
          ok = true;
          break;
        }
      } catch (const domain_error&) {
      }
    }
    if (!ok) return false;
  }
  return true;
}

std::vector<Interval> point_box(const std::vector<double>& pt) {
  std::vector<Interval> b;
  b.reserve(pt.size());
  for (double v : pt) b.emplace_back(v);
  return b;
}

// upper bound for the goal over the cell: direct interval evaluation,
// sharpened by a mean-value form and by collapsing variables whose
// partial has a certain sign onto the favourable endpoint
double goal_upper(const Problem& p, const std::vector<Interval>& box,
                  std::vector<double>* sensitivity) {
  double upper = std::numeric_limits<double>::infinity();
  try {
    upper = eval_expr<Interval>(p.rec->goal, box).hi;
  } catch (const domain_error&) {
  }
  const size_t n = box.size();
  std::vector<Grad> genv(n);
  bool grad_ok = true;
  for (size_t i = 0; i < n; ++i) genv[i] = Grad::var(box[i], int(i));
  Grad g;
  try {
    g = eval_expr<Grad>(p.rec->goal, genv);
  } catch (const domain_error&) {
    grad_ok = false;
  }
  if (grad_ok) {
    for (size_t i = 0; i < n; ++i)
      if (!finite(g.d[i]) && width(box[i]) > 0) grad_ok = false;
  }
  if (grad_ok) {
    if (sensitivity) {
      sensitivity->assign(n, 1.0);
      for (size_t i = 0; i < n; ++i)
        (*sensitivity)[i] =
            std::max(std::abs(g.d[i].lo), std::abs(g.d[i].hi));
    }
    // mean value form around the midpoint
    std::vector<double> mid(n);
    for (size_t i = 0; i < n; ++i) mid[i] = midpoint(box[i]);
    try {
      double mv = eval_expr<Interval>(p.rec->goal, point_box(mid)).hi;
      for (size_t i = 0; i < n; ++i) {
        double half = 0.5 * width(box[i]);
        mv += std::max(std::abs(g.d[i].lo), std::abs(g.d[i].hi)) * half;
      }
      upper = std::min(upper, mv);
    } catch (const domain_error&) {
    }
    // monotone collapse
    std::vector<Interval> slice = box;
    bool any = false;
    for (size_t i = 0; i < n; ++i) {
      if (width(box[i]) <= 0) continue;
      if (g.d[i].hi <= 0) {
        slice[i] = Interval(box[i].lo);
        any = true;
      } else if (g.d[i].lo >= 0) {
        slice[i] = Interval(box[i].hi);
        any = true;
      }
    }
    if (any) {
      try {
        upper = std::min(upper, eval_expr<Interval>(p.rec->goal, slice).hi);
      } catch (const domain_error&) {
      }
    }
  } else if (sensitivity) {
    sensitivity->assign(n, 1.0);
  }
  return upper;
}

// critical-point certificate: every listed f satisfies
// Df != 0 or D^2 f > 0 over the cell (derivatives in x1)
bool critical_certified(const InequalityRecord& rec,
                        const std::vector<Interval>& box) {
  const size_t n = box.size();
  for (const std::string& fname : rec.critical_fns) {
    std::vector<Jet2> env(n);
    for (size_t i = 0; i < n; ++i) env[i] = Jet2(box[i]);
    // seed x1 = y1^2 as the jet variable
    Interval x1 = sqr(box[0]);
    env[0] = sqrt(Jet2::var(x1));
    Jet2 f;
    try {
      Edges<Jet2> y;
      for (int i = 0; i < 6; ++i) y[i] = env[i];
      Jet2 v0 = vor0_fn(y);
      if (fname == "vor0") {
        f = v0;
      } else {  // neg_tau0 = vor0 - zpt sol
        f = v0 - cst<Jet2>(Constants::get().zpt) * sol_y(y);
      }
    } catch (const domain_error&) {
      return false;
    }
    bool df_nonzero = f.d1.hi < 0 || f.d1.lo > 0;
    bool d2_positive = f.d2.lo > 0;
    if (!(df_nonzero || d2_positive)) return false;
  }
  return true;
}

CellResult process_cell(const Problem& p, const Cell& cell, const Budget& budget) {
  CellResult res;
  Feas fs = feasibility(p, cell.box);
  if (fs == Feas::kInfeasible) {
    res.outcome = CellOutcome::kPruned;
    return res;
  }
  const size_t n = cell.box.size();
  std::vector<double> sens;
  bool certified = false;
  if (p.rec->mode == Mode::kCriticalPoint) {
    certified = critical_certified(*p.rec, cell.box);
    sens.assign(n, 1.0);
    res.upper = certified ? -1.0 : 1.0;
  } else {
    res.upper = goal_upper(p, cell.box, &sens);
    certified = res.upper < p.certify_below;
  }
  if (certified) {
    res.outcome = CellOutcome::kCertified;
    return res;
  }
  // try the cell midpoint as a counterexample (plain floating point)
  if (p.rec->mode != Mode::kCriticalPoint) {
    std::vector<double> mid(n);
    for (size_t i = 0; i < n; ++i) mid[i] = midpoint(cell.box[i]);
    if (point_feasible(*p.rec, mid)) {
      try {
        double v = eval_expr<double>(p.rec->goal, mid);
        if (v > kPointTol) {
          res.outcome = CellOutcome::kViolated;
          res.ce.point = mid;
          res.ce.violation = v;
          return res;
        }
      } catch (const domain_error&) {
      }
    }
  }
  // split along the widest scaled direction
  int dim = -1;
  double best = 0;
  for (size_t i = 0; i < n; ++i) {
    double w = width(cell.box[i]);
    if (w < budget.min_width) continue;
    double score = w * std::max(sens.empty() ? 1.0 : sens[i], 1e-6);
    if (score > best) {
      best = score;
      dim = int(i);
    }
  }
  if (dim < 0 || cell.depth >= budget.max_depth) {
    res.outcome = CellOutcome::kExhausted;
    return res;
  }
  res.outcome = CellOutcome::kSplit;
  res.split_dim = dim;
  return res;
}

// gradient-sign proof for a monotonicity directive: shows the goal is
// nonincreasing (fix at lo) or nondecreasing (fix at hi) in the
// variable over the whole feasible box
bool prove_partial_sign(const InequalityRecord& rec, int var, bool nonneg,
                        long max_cells) {
  Problem p;
  p.rec = &rec;
  std::vector<Cell> frontier(1);
  for (const auto& v : rec.vars) frontier[0].box.emplace_back(v.lo, v.hi);
  long processed = 0;
  while (!frontier.empty()) {
    if (++processed > max_cells) return false;
    Cell cell = frontier.back();
    frontier.pop_back();
    if (feasibility(p, cell.box) == Feas::kInfeasible) continue;
    bool ok = false;
    int dim = -1;
    double best = 0;
    try {
      std::vector<Grad> genv(cell.box.size());
      for (size_t i = 0; i < cell.box.size(); ++i)
        genv[i] = Grad::var(cell.box[i], int(i));
      Grad g = eval_expr<Grad>(rec.goal, genv);
      ok = nonneg ? g.d[var].lo >= 0 : g.d[var].hi <= 0;
    } catch (const domain_error&) {
    }
    if (ok) continue;
    for (size_t i = 0; i < cell.box.size(); ++i) {
      double w = width(cell.box[i]);
      if (w > best) {
        best = w;
        dim = int(i);
      }
    }
    if (dim < 0 || best < 1e-3 || cell.depth > 40) return false;
    auto [lo, hi] = split(cell.box[dim]);
    Cell a = cell, b = cell;
    a.box[dim] = lo;
    b.box[dim] = hi;
    a.depth = b.depth = cell.depth + 1;
    frontier.push_back(a);
    frontier.push_back(b);
  }
  return true;
}

}  // namespace

Interval Prover::eval_goal(const InequalityRecord& rec,
                           const std::vector<Interval>& box) {
  return eval_expr<Interval>(rec.goal, box);
}

VerifyReport Prover::verify(const InequalityRecord& rec, const Budget& budget) const {
  return verify_resumable(rec, budget, nullptr, nullptr, 0);
}

VerifyReport Prover::verify_resumable(
    const InequalityRecord& rec, const Budget& budget, const ProverState* resume,
    const std::function<void(const ProverState&)>& checkpoint,
    long checkpoint_every) const {
  const auto t_start = std::chrono::steady_clock::now();
  VerifyReport rep;
  rep.key = rec.key();
  rep.id = rec.id;
  rep.section = rec.section;

  Problem p;
  p.rec = &rec;
  p.certify_below = rec.strict ? 0.0 : kNonstrictSlack;

  Cell root;
  for (const auto& v : rec.vars) root.box.emplace_back(v.lo, v.hi);

  // validate and apply the declared monotonicity reductions
  if (rec.mode == Mode::kReduced) {
    for (const Reduction& d : rec.reductions) {
      bool ok = prove_partial_sign(rec, d.var, d.fix_at_hi, 4000);
      if (ok) {
        p.reduced_vars.push_back(d.var);
        p.con_ranges.push_back(root.box[d.var]);
        const VarSpec& vs = rec.vars[d.var];
        root.box[d.var] =
            d.fix_at_hi ? Interval(vs.hi) : Interval(vs.lo);
        rep.reductions_applied.push_back(
            vs.name + " := " + (d.fix_at_hi ? vs.hi_text : vs.lo_text) +
            " (partial sign proved)");
      } else {
        rep.reductions_applied.push_back(rec.vars[d.var].name +
                                         " reduction rejected");
      }
    }
  }

  std::vector<Cell> level;
  if (resume && !resume->pending.empty()) {
    level = resume->pending;
    rep.cells = resume->cells;
    rep.depth = resume->depth;
  } else {
    level.push_back(root);
  }

  bool exhausted = false;
  std::optional<Counterexample> found;
  std::uint64_t found_label = ~0ull;
  std::optional<Cell> worst;
  double worst_upper = -std::numeric_limits<double>::infinity();
  long last_checkpoint = rep.cells;

  while (!level.empty()) {
    if (rep.cells >= budget.max_cells) {
      exhausted = true;
      if (!worst && !level.empty()) worst = level.front();
      break;
    }
    std::vector<CellResult> results(level.size());
    auto work = [&](size_t begin, size_t end) {
      for (size_t i = begin; i < end; ++i)
        results[i] = process_cell(p, level[i], budget);
    };
    const int nw = std::max(1, workers_);
    if (nw == 1 || level.size() < 32) {
      work(0, level.size());
    } else {
      std::vector<std::thread> threads;
      size_t chunk = (level.size() + nw - 1) / nw;
      for (int w = 0; w < nw; ++w) {
        size_t b = w * chunk, e = std::min(level.size(), b + chunk);
        if (b < e) threads.emplace_back(work, b, e);
      }
      for (auto& t : threads) t.join();
    }
    std::vector<Cell> next;
    for (size_t i = 0; i < level.size(); ++i) {
      ++rep.cells;
      rep.depth = std::max(rep.depth, level[i].depth);
      const CellResult& r = results[i];
      switch (r.outcome) {
        case CellOutcome::kCertified:
        case CellOutcome::kPruned:
          break;
        case CellOutcome::kViolated:
          if (!found || level[i].label < found_label) {
            found = r.ce;
            found_label = level[i].label;
          }
          break;
        case CellOutcome::kExhausted:
          exhausted = true;
          if (r.upper > worst_upper) {
            worst_upper = r.upper;
            worst = level[i];
          }
          break;
        case CellOutcome::kSplit: {
          auto [lo, hi] = split(level[i].box[r.split_dim]);
          Cell a = level[i], b = level[i];
          a.box[r.split_dim] = lo;
          b.box[r.split_dim] = hi;
          a.depth = b.depth = level[i].depth + 1;
          a.label = level[i].label * 2;
          b.label = level[i].label * 2 + 1;
          next.push_back(std::move(a));
          next.push_back(std::move(b));
          break;
        }
      }
    }
    if (found) break;
    level = std::move(next);
    if (checkpoint && checkpoint_every > 0 &&
        rep.cells - last_checkpoint >= checkpoint_every && !level.empty()) {
      ProverState st;
      st.key = rec.key();
      st.cells = rep.cells;
      st.depth = rep.depth;
      st.pending = level;
      checkpoint(st);
      last_checkpoint = rep.cells;
    }
  }

  if (found) {
    rep.status = Status::kFailed;
    rep.counterexample = found;
  } else if (exhausted) {
    rep.status = Status::kBudgetExhausted;
    rep.worst_cell = worst;
  } else {
    rep.status = Status::kProved;
  }
  rep.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t_start)
          .count();
  return rep;
}

std::optional<Counterexample> Prover::falsify(const InequalityRecord& rec,
                                              int effort) const {
  std::mt19937_64 rng(seed_ ^ 0x9e3779b97f4a7c15ull);
  const size_t n = rec.vars.size();
  std::optional<Counterexample> best;
  auto value = [&](const std::vector<double>& pt) -> double {
    if (!point_feasible(rec, pt)) return -std::numeric_limits<double>::infinity();
    try {
      return eval_expr<double>(rec.goal, pt);
    } catch (const domain_error&) {
      return -std::numeric_limits<double>::infinity();
    }
  };
  for (int start = 0; start < effort; ++start) {
    std::vector<double> pt(n);
    for (size_t i = 0; i < n; ++i) {
      std::uniform_real_distribution<double> d(rec.vars[i].lo, rec.vars[i].hi);
      pt[i] = d(rng);
    }
    double v = value(pt);
    if (!std::isfinite(v)) continue;
    // coordinate-descent polish
    double step = 0.25;
    while (step > 1e-7) {
      bool improved = false;
      for (size_t i = 0; i < n; ++i) {
        const double w = rec.vars[i].hi - rec.vars[i].lo;
        if (w <= 0) continue;
        for (double sgn : {1.0, -1.0}) {
          std::vector<double> q = pt;
          q[i] = std::clamp(q[i] + sgn * step * w, rec.vars[i].lo,
                            rec.vars[i].hi);
          double qv = value(q);
          if (qv > v) {
            v = qv;
            pt = q;
            improved = true;
          }
        }
      }
      if (!improved) step *= 0.5;
    }
    if (v > kPointTol && (!best || v > best->violation)) {
      best = Counterexample{pt, v};
    }
  }
  return best;
}

InequalityRecord Prover::negate(const InequalityRecord& rec) {
  InequalityRecord r = rec;
  r.goal = -rec.goal;
  r.case_tag = rec.case_tag.empty() ? "negated" : rec.case_tag + ",negated";
  r.statement = "negation of: " + rec.statement;
  return r;
}

}  // namespace packbound
