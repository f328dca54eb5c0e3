// Small CDCL solver: two watched literals, first-UIP learning, activity
// based branching with phase saving, Luby restarts, assumptions.
#pragma once

#include <cstdint>
#include <vector>

namespace relsyl::detail {

using Lit = int;  // 2 * var + (negated ? 1 : 0)

inline Lit pos_lit(int var) { return 2 * var; }
inline Lit neg_lit(int var) { return 2 * var + 1; }
inline Lit negate(Lit l) { return l ^ 1; }
inline int lit_var(Lit l) { return l >> 1; }
inline bool lit_negated(Lit l) { return (l & 1) != 0; }

enum class SatResult { Sat, Unsat, Unknown };

class SatSolver {
 public:
  int new_var();
  int num_vars() const { return static_cast<int>(value_.size()); }
  // Returns false once the clause set is known to be unsatisfiable.
  bool add_clause(std::vector<Lit> lits);
  // conflict_budget < 0 means unlimited.
  SatResult solve(const std::vector<Lit>& assumptions = {}, long long conflict_budget = -1);
  bool model_value(int var) const { return model_[var] == 1; }
  long long conflicts() const { return conflicts_; }

 private:
  static constexpr std::int8_t kUndef = 2;

  std::int8_t lit_value(Lit l) const {
    std::int8_t v = value_[lit_var(l)];
    return v == kUndef ? kUndef : static_cast<std::int8_t>(v ^ (l & 1));
  }
  int level() const { return static_cast<int>(trail_lim_.size()); }
  void enqueue(Lit l, int reason);
  int propagate();
  void analyze(int conflict, std::vector<Lit>& learnt, int& back_level);
  void cancel_until(int lvl);
  void attach(int clause);
  int pick_branch();
  void bump(int var);
  void heap_insert(int var);
  void heap_up(int pos);
  void heap_down(int pos);
  int heap_pop();

  std::vector<std::vector<Lit>> clauses_;
  std::vector<std::vector<int>> watches_;
  std::vector<std::int8_t> value_;
  std::vector<std::int8_t> phase_;
  std::vector<std::int8_t> model_;
  std::vector<int> level_;
  std::vector<int> reason_;
  std::vector<double> activity_;
  std::vector<char> seen_;
  std::vector<Lit> trail_;
  std::vector<int> trail_lim_;
  std::vector<int> heap_;
  std::vector<int> heap_pos_;
  std::size_t qhead_ = 0;
  double var_inc_ = 1.0;
  long long conflicts_ = 0;
  bool ok_ = true;
};

}  // namespace relsyl::detail
