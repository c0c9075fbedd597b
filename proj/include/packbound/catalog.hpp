#pragma once

#include <optional>
#include <string>
#include <vector>

#include "packbound/expr.hpp"

namespace packbound {

struct VarSpec {
  std::string name;
  double lo = 0, hi = 0;
  std::string lo_text, hi_text;
};

// constraint: expr >= 0 over the feasible set
struct Constraint {
  Expr expr;
  std::string label;
};

// monotonicity directive: fix a variable at one endpoint, justified by
// the stated sign of the goal's partial derivative (re-proved by the
// prover before use)
struct Reduction {
  int var = 0;
  bool fix_at_hi = false;  // false: fix at lower endpoint
};

enum class Mode { kPlain, kCriticalPoint, kReduced };

struct InequalityRecord {
  std::string id;        // the nine-digit identifier
  std::string section;   // "A1".."A24"
  int index = 0;         // position within the section
  std::string case_tag;  // expansion label for parameterized families
  std::string statement;
  std::vector<VarSpec> vars;
  Expr goal;  // claim: goal < 0 on the feasible set
  bool strict = true;
  std::vector<Constraint> constraints;
  std::vector<std::vector<Constraint>> any_of;  // disjunctive clauses
  Mode mode = Mode::kPlain;
  std::vector<Reduction> reductions;
  std::vector<std::string> critical_fns;  // kCriticalPoint: f names
  std::string notes;

  std::string key() const {
    return case_tag.empty() ? id : id + ":" + case_tag;
  }
};

class Catalog {
 public:
  static const Catalog& builtin();
  static Catalog from_json(const std::string& json);

  std::string to_json() const;

  const std::vector<InequalityRecord>& all() const { return records_; }
  std::vector<const InequalityRecord*> lookup(const std::string& id) const;
  std::vector<const InequalityRecord*> section(const std::string& sec) const;
  size_t manifest_count() const { return records_.size(); }

  void add(InequalityRecord r) { records_.push_back(std::move(r)); }

 private:
  std::vector<InequalityRecord> records_;
};

// every record id of the desk-scale proved subset (acceptance)
std::vector<std::string> desk_scale_ids();

// in-text arithmetic ledger
struct LedgerCheck {
  std::string name;
  std::string claim;
  bool pass = false;
  Interval lhs, rhs;  // claim: lhs < rhs (or as described)
};
std::vector<LedgerCheck> run_ledger();

}  // namespace packbound
