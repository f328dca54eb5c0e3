#include "sat_solver.hpp"

#include <algorithm>

namespace relsyl::detail {

namespace {

double luby(double y, int x) {
  int size = 1;
  int seq = 0;
  while (size < x + 1) {
    ++seq;
    size = 2 * size + 1;
  }
  while (size - 1 != x) {
    size = (size - 1) >> 1;
    --seq;
    x = x % size;
  }
  double r = 1;
  for (int i = 0; i < seq; ++i) r *= y;
  return r;
}

}  // namespace

int SatSolver::new_var() {
  int v = num_vars();
  value_.push_back(kUndef);
  phase_.push_back(1);  // prefer false
  model_.push_back(kUndef);
  level_.push_back(0);
  reason_.push_back(-1);
  activity_.push_back(0.0);
  seen_.push_back(0);
  watches_.emplace_back();
  watches_.emplace_back();
  heap_pos_.push_back(-1);
  heap_insert(v);
  return v;
}

bool SatSolver::add_clause(std::vector<Lit> lits) {
  if (!ok_) return false;
  cancel_until(0);
  std::sort(lits.begin(), lits.end());
  std::vector<Lit> kept;
  for (std::size_t i = 0; i < lits.size(); ++i) {
    Lit l = lits[i];
    if (i > 0 && l == lits[i - 1]) continue;
    if (i > 0 && l == negate(lits[i - 1])) return true;  // tautology
    std::int8_t v = lit_value(l);
    if (v == 1) return true;
    if (v == 0) continue;
    kept.push_back(l);
  }
  if (kept.empty()) {
    ok_ = false;
    return false;
  }
  if (kept.size() == 1) {
    enqueue(kept[0], -1);
    if (propagate() >= 0) ok_ = false;
    return ok_;
  }
  clauses_.push_back(std::move(kept));
  attach(static_cast<int>(clauses_.size()) - 1);
  return true;
}

void SatSolver::attach(int c) {
  const auto& cl = clauses_[c];
  watches_[cl[0]].push_back(c);
  watches_[cl[1]].push_back(c);
}

void SatSolver::enqueue(Lit l, int reason) {
  int v = lit_var(l);
  value_[v] = lit_negated(l) ? 0 : 1;
  level_[v] = level();
  reason_[v] = reason;
  trail_.push_back(l);
}

// Watches are keyed by the literal itself; a clause is visited when one of
// its two watched literals becomes false.
int SatSolver::propagate() {
  while (qhead_ < trail_.size()) {
    Lit p = trail_[qhead_++];
    Lit false_lit = negate(p);
    auto& ws = watches_[false_lit];
    std::size_t i = 0;
    std::size_t j = 0;
    while (i < ws.size()) {
      int c = ws[i++];
      auto& cl = clauses_[c];
      if (cl[0] == false_lit) std::swap(cl[0], cl[1]);
      if (lit_value(cl[0]) == 1) {
        ws[j++] = c;
        continue;
      }
      bool moved = false;
      for (std::size_t k = 2; k < cl.size(); ++k) {
        if (lit_value(cl[k]) != 0) {
          std::swap(cl[1], cl[k]);
          watches_[cl[1]].push_back(c);
          moved = true;
          break;
        }
      }
      if (moved) continue;
      ws[j++] = c;
      if (lit_value(cl[0]) == 0) {
        while (i < ws.size()) ws[j++] = ws[i++];
        ws.resize(j);
        qhead_ = trail_.size();
        return c;
      }
      enqueue(cl[0], c);
    }
    ws.resize(j);
  }
  return -1;
}

void SatSolver::analyze(int conflict, std::vector<Lit>& learnt, int& back_level) {
  learnt.clear();
  learnt.push_back(0);
  int pending = 0;
  Lit p = -1;
  std::size_t index = trail_.size();
  int c = conflict;
  do {
    const auto& cl = clauses_[c];
    for (std::size_t k = (p == -1 ? 0 : 1); k < cl.size(); ++k) {
      Lit q = cl[k];
      int v = lit_var(q);
      if (seen_[v] || level_[v] == 0) continue;
      seen_[v] = 1;
      bump(v);
      if (level_[v] >= level()) {
        ++pending;
      } else {
        learnt.push_back(q);
      }
    }
    while (!seen_[lit_var(trail_[--index])]) {
    }
    p = trail_[index];
    c = reason_[lit_var(p)];
    seen_[lit_var(p)] = 0;
    --pending;
    if (pending > 0 && c >= 0) {
      // reason clauses keep the implied literal in position 0
      auto& rc = clauses_[c];
      if (rc[0] != p) {
        for (std::size_t k = 1; k < rc.size(); ++k) {
          if (rc[k] == p) {
            std::swap(rc[0], rc[k]);
            break;
          }
        }
      }
    }
  } while (pending > 0);
  learnt[0] = negate(p);
  back_level = 0;
  std::size_t max_i = 1;
  for (std::size_t k = 1; k < learnt.size(); ++k) {
    int lv = level_[lit_var(learnt[k])];
    if (lv > back_level) {
      back_level = lv;
      max_i = k;
    }
  }
  if (learnt.size() > 1) std::swap(learnt[1], learnt[max_i]);
  for (Lit l : learnt) seen_[lit_var(l)] = 0;
}

void SatSolver::cancel_until(int lvl) {
  if (level() <= lvl) return;
  for (std::size_t i = trail_.size(); i > static_cast<std::size_t>(trail_lim_[lvl]); --i) {
    int v = lit_var(trail_[i - 1]);
    phase_[v] = value_[v] == 1 ? 0 : 1;
    value_[v] = kUndef;
    reason_[v] = -1;
    if (heap_pos_[v] < 0) heap_insert(v);
  }
  trail_.resize(trail_lim_[lvl]);
  trail_lim_.resize(lvl);
  qhead_ = trail_.size();
}

void SatSolver::bump(int v) {
  activity_[v] += var_inc_;
  if (activity_[v] > 1e100) {
    for (double& a : activity_) a *= 1e-100;
    var_inc_ *= 1e-100;
  }
  if (heap_pos_[v] >= 0) heap_up(heap_pos_[v]);
}

void SatSolver::heap_insert(int v) {
  heap_pos_[v] = static_cast<int>(heap_.size());
  heap_.push_back(v);
  heap_up(heap_pos_[v]);
}

void SatSolver::heap_up(int pos) {
  int v = heap_[pos];
  while (pos > 0) {
    int parent = (pos - 1) / 2;
    if (activity_[heap_[parent]] >= activity_[v]) break;
    heap_[pos] = heap_[parent];
    heap_pos_[heap_[pos]] = pos;
    pos = parent;
  }
  heap_[pos] = v;
  heap_pos_[v] = pos;
}

void SatSolver::heap_down(int pos) {
  int v = heap_[pos];
  int n = static_cast<int>(heap_.size());
  while (true) {
    int child = 2 * pos + 1;
    if (child >= n) break;
    if (child + 1 < n && activity_[heap_[child + 1]] > activity_[heap_[child]]) ++child;
    if (activity_[heap_[child]] <= activity_[v]) break;
    heap_[pos] = heap_[child];
    heap_pos_[heap_[pos]] = pos;
    pos = child;
  }
  heap_[pos] = v;
  heap_pos_[v] = pos;
}

int SatSolver::heap_pop() {
  int top = heap_[0];
  heap_pos_[top] = -1;
  int last = heap_.back();
  heap_.pop_back();
  if (!heap_.empty()) {
    heap_[0] = last;
    heap_pos_[last] = 0;
    heap_down(0);
  }
  return top;
}

int SatSolver::pick_branch() {
  while (!heap_.empty()) {
    int v = heap_pop();
    if (value_[v] == kUndef) return v;
  }
  return -1;
}

SatResult SatSolver::solve(const std::vector<Lit>& assumptions, long long conflict_budget) {
  if (!ok_) return SatResult::Unsat;
  cancel_until(0);
  if (propagate() >= 0) {
    ok_ = false;
    return SatResult::Unsat;
  }
  long long start = conflicts_;
  int restarts = 0;
  long long restart_at = conflicts_ + static_cast<long long>(100 * luby(2, restarts));
  std::vector<Lit> learnt;
  while (true) {
    int conflict = propagate();
    if (conflict >= 0) {
      ++conflicts_;
      if (level() == 0) {
        ok_ = false;
        return SatResult::Unsat;
      }
      int back_level = 0;
      analyze(conflict, learnt, back_level);
      cancel_until(back_level);
      if (learnt.size() == 1) {
        enqueue(learnt[0], -1);
      } else {
        clauses_.push_back(learnt);
        int c = static_cast<int>(clauses_.size()) - 1;
        attach(c);
        enqueue(learnt[0], c);
      }
      var_inc_ /= 0.95;
      continue;
    }
    if (conflict_budget >= 0 && conflicts_ - start > conflict_budget) {
      cancel_until(0);
      return SatResult::Unknown;
    }
    if (conflicts_ >= restart_at) {
      ++restarts;
      restart_at = conflicts_ + static_cast<long long>(100 * luby(2, restarts));
      cancel_until(0);
      continue;
    }
    Lit next = -1;
    while (level() < static_cast<int>(assumptions.size())) {
      Lit a = assumptions[level()];
      std::int8_t v = lit_value(a);
      if (v == 1) {
        trail_lim_.push_back(static_cast<int>(trail_.size()));
      } else if (v == 0) {
        cancel_until(0);
        return SatResult::Unsat;
      } else {
        next = a;
        break;
      }
    }
    if (next == -1) {
      int v = pick_branch();
      if (v < 0) {
        for (int i = 0; i < num_vars(); ++i) model_[i] = value_[i];
        cancel_until(0);
        return SatResult::Sat;
      }
      next = phase_[v] ? neg_lit(v) : pos_lit(v);
    }
    trail_lim_.push_back(static_cast<int>(trail_.size()));
    enqueue(next, -1);
  }
}

}  // namespace relsyl::detail
