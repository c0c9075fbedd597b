#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "packbound/catalog.hpp"

namespace packbound {

struct Budget {
  long max_cells = 1000000;
  int max_depth = 60;
  double min_width = 1e-4;
};

enum class Status { kProved, kFailed, kBudgetExhausted };

inline const char* status_name(Status s) {
  switch (s) {
    case Status::kProved: return "PROVED";
    case Status::kFailed: return "FAILED";
    default: return "BUDGET_EXHAUSTED";
  }
}

struct Counterexample {
  std::vector<double> point;
  double violation = 0;
};

struct Cell {
  std::vector<Interval> box;
  int depth = 0;
  std::uint64_t label = 1;
};

struct VerifyReport {
  std::string key, id, section;
  Status status = Status::kBudgetExhausted;
  long cells = 0;
  int depth = 0;
  double seconds = 0;
  std::optional<Counterexample> counterexample;
  std::vector<std::string> reductions_applied;
  std::optional<Cell> worst_cell;
};

// resumable state: the pending frontier of a run
struct ProverState {
  std::string key;
  long cells = 0;
  int depth = 0;
  std::vector<Cell> pending;
};

class Prover {
 public:
  explicit Prover(int workers = 1, std::uint64_t seed = 0)
      : workers_(workers), seed_(seed) {}

  VerifyReport verify(const InequalityRecord& rec, const Budget& budget) const;
  VerifyReport verify_resumable(
      const InequalityRecord& rec, const Budget& budget,
      const ProverState* resume,
      const std::function<void(const ProverState&)>& checkpoint,
      long checkpoint_every) const;

  std::optional<Counterexample> falsify(const InequalityRecord& rec,
                                        int effort = 2000) const;

  static InequalityRecord negate(const InequalityRecord& rec);

  // interval evaluation of a record goal over a cell box
  static Interval eval_goal(const InequalityRecord& rec,
                            const std::vector<Interval>& box);

 private:
  int workers_;
  std::uint64_t seed_;
};

}  // namespace packbound
