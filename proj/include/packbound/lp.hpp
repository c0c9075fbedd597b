#pragma once

#include <optional>
#include <string>
#include <vector>

#include "packbound/interval.hpp"

namespace packbound {

// Small dense LP: maximize c.x subject to rows (a.x rel b), x >= 0.
// Two-phase simplex with Bland's rule; returns the dual as well so
// callers can cross-check the duality gap.
struct LpRow {
  std::vector<double> a;
  char rel;  // '<', '>', '='
  double b;
};

struct LpSolution {
  bool feasible = false;
  bool bounded = true;
  double objective = 0;
  std::vector<double> x;
  std::vector<double> dual;
  double duality_gap = 0;
};

LpSolution lp_solve_dense(const std::vector<double>& c,
                          const std::vector<LpRow>& rows);

// ---- loops of anchored simplices around an upright diagonal ----

enum class SimplexKind {
  kQuarter,      // fourth edge in [2, 2.51]
  kAnchored,     // fourth edge in [2.51, 2 sqrt 2]
  kLongEdge,     // fourth edge in [2 sqrt 2, 3.2]
  kSpecialAdj,   // long fourth edge with an adjacent special simplex
};

struct LoopModel {
  std::vector<SimplexKind> kinds;  // one per anchored simplex kept
  bool dropped = false;            // one simplex with dih > 2.46 removed
};

enum class LoopObjective { kMaxScore, kMinSquander };

struct LpResult {
  bool feasible = false;
  double value = 0;
  std::vector<double> dih;
  double duality_gap = 0;
};

LpResult lp_solve(const LoopModel& model, LoopObjective objective);

struct LoopTableRow {
  int n = 0, k = 0;
  bool k_or_more = false;
  bool imported_d = false;
  double d_lp = 0, d_target = 0;
  bool has_z = true;
  double z_lp = 0, z_target = 0;
  std::string d_assignment, z_assignment;
};

std::vector<LoopTableRow> lp_table();
std::string lp_table_csv();

// the refinement chain for the score bound in the (4,1) case; every
// branch value must come out below Z(4,1)
std::vector<std::pair<std::string, double>> z41_refinement();

}  // namespace packbound
