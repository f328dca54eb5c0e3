#include "relsyl/semantics.hpp"

#include <algorithm>
#include <bit>
#include <random>
#include <stdexcept>
#include <unordered_map>

#include "relsyl/errors.hpp"
#include "sat_solver.hpp"

namespace relsyl {

// ----------------------------------------------------------- ElementSet

ElementSet::ElementSet(std::size_t universe) : n_(universe), w_((universe + 63) / 64, 0) {}

ElementSet ElementSet::full(std::size_t universe) {
  ElementSet s(universe);
  for (auto& w : s.w_) w = ~std::uint64_t{0};
  if (universe % 64 != 0 && !s.w_.empty()) s.w_.back() = (std::uint64_t{1} << (universe % 64)) - 1;
  return s;
}

void ElementSet::set(std::size_t i, bool on) {
  if (i >= n_) throw std::out_of_range("element outside domain");
  std::uint64_t bit = std::uint64_t{1} << (i & 63);
  if (on) {
    w_[i >> 6] |= bit;
  } else {
    w_[i >> 6] &= ~bit;
  }
}

bool ElementSet::empty() const {
  for (auto w : w_) {
    if (w) return false;
  }
  return true;
}

std::size_t ElementSet::count() const {
  std::size_t c = 0;
  for (auto w : w_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

bool ElementSet::subset_of(const ElementSet& other) const {
  for (std::size_t i = 0; i < w_.size(); ++i) {
    if (w_[i] & ~other.w_[i]) return false;
  }
  return true;
}

bool ElementSet::intersects(const ElementSet& other) const {
  for (std::size_t i = 0; i < w_.size(); ++i) {
    if (w_[i] & other.w_[i]) return true;
  }
  return false;
}

ElementSet ElementSet::complement() const {
  ElementSet c = full(n_);
  for (std::size_t i = 0; i < w_.size(); ++i) c.w_[i] &= ~w_[i];
  return c;
}

ElementSet& ElementSet::operator&=(const ElementSet& other) {
  for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= other.w_[i];
  return *this;
}

ElementSet& ElementSet::operator|=(const ElementSet& other) {
  for (std::size_t i = 0; i < w_.size(); ++i) w_[i] |= other.w_[i];
  return *this;
}

std::vector<std::size_t> ElementSet::elements() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < n_; ++i) {
    if (test(i)) out.push_back(i);
  }
  return out;
}

// ---------------------------------------------------------- FiniteModel

FiniteModel::FiniteModel(std::size_t size) : empty_(size) {
  for (std::size_t i = 0; i < size; ++i) labels_.push_back(std::to_string(i));
}

FiniteModel::FiniteModel(std::vector<std::string> labels)
    : labels_(std::move(labels)), empty_(labels_.size()) {
  std::vector<std::string> sorted = labels_;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw std::invalid_argument("duplicate domain element");
  }
}

std::optional<std::size_t> FiniteModel::index_of(std::string_view label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (labels_[i] == label) return i;
  }
  return std::nullopt;
}

void FiniteModel::set_noun(const std::string& p, ElementSet s) {
  if (s.universe() != size()) throw std::invalid_argument("noun extension has wrong universe");
  nouns_[p] = std::move(s);
}

void FiniteModel::add_to_noun(const std::string& p, std::size_t e) {
  auto it = nouns_.try_emplace(p, ElementSet(size())).first;
  it->second.set(e);
}

void FiniteModel::declare_noun(const std::string& p) { nouns_.try_emplace(p, ElementSet(size())); }

void FiniteModel::declare_verb(const std::string& r) {
  verbs_.try_emplace(r, std::vector<ElementSet>(size(), ElementSet(size())));
}

void FiniteModel::add_pair(const std::string& r, std::size_t a, std::size_t b) {
  declare_verb(r);
  verbs_[r].at(a).set(b);
}

const ElementSet& FiniteModel::noun(const std::string& p) const {
  auto it = nouns_.find(p);
  return it == nouns_.end() ? empty_ : it->second;
}

const ElementSet& FiniteModel::successors(const std::string& r, std::size_t a) const {
  auto it = verbs_.find(r);
  return it == verbs_.end() ? empty_ : it->second.at(a);
}

bool FiniteModel::related(const std::string& r, std::size_t a, std::size_t b) const {
  return successors(r, a).test(b);
}

std::vector<std::string> FiniteModel::noun_names() const {
  std::vector<std::string> out;
  for (const auto& [k, v] : nouns_) out.push_back(k);
  return out;
}

std::vector<std::string> FiniteModel::verb_names() const {
  std::vector<std::string> out;
  for (const auto& [k, v] : verbs_) out.push_back(k);
  return out;
}

bool FiniteModel::operator==(const FiniteModel& other) const {
  if (labels_ != other.labels_) return false;
  auto nouns = noun_names();
  for (const auto& p : other.noun_names()) nouns.push_back(p);
  for (const auto& p : nouns) {
    if (!(noun(p) == other.noun(p))) return false;
  }
  auto verbs = verb_names();
  for (const auto& r : other.verb_names()) verbs.push_back(r);
  for (const auto& r : verbs) {
    for (std::size_t a = 0; a < size(); ++a) {
      if (!(successors(r, a) == other.successors(r, a))) return false;
    }
  }
  return true;
}

// ----------------------------------------------------------- evaluation

ElementSet eval_term(const FiniteModel& m, const Term& t) {
  switch (t.kind()) {
    case TermKind::Noun:
      return m.noun(t.name());
    case TermKind::Not:
      return eval_term(m, t.body()).complement();
    case TermKind::AllOf: {
      ElementSet body = eval_term(m, t.body());
      ElementSet out(m.size());
      for (std::size_t a = 0; a < m.size(); ++a) {
        if (body.subset_of(m.successors(t.name(), a))) out.set(a);
      }
      return out;
    }
    case TermKind::SomeOf: {
      ElementSet body = eval_term(m, t.body());
      ElementSet out(m.size());
      for (std::size_t a = 0; a < m.size(); ++a) {
        if (body.intersects(m.successors(t.name(), a))) out.set(a);
      }
      return out;
    }
  }
  throw std::logic_error("bad term kind");
}

bool satisfies(const FiniteModel& m, const Sentence& s) {
  const auto& ts = s.terms();
  switch (s.kind()) {
    case SentenceKind::All:
      return eval_term(m, ts[0]).subset_of(eval_term(m, ts[1]));
    case SentenceKind::Some:
      return eval_term(m, ts[0]).intersects(eval_term(m, ts[1]));
    case SentenceKind::AllOrSome:
      return eval_term(m, ts[0]).subset_of(eval_term(m, ts[1])) ||
             eval_term(m, ts[2]).intersects(eval_term(m, ts[3]));
    case SentenceKind::EmptyMeet:
    case SentenceKind::NonemptyMeet: {
      ElementSet meet = ElementSet::full(m.size());
      for (const Term& t : ts) meet &= eval_term(m, t);
      return (s.kind() == SentenceKind::EmptyMeet) == meet.empty();
    }
  }
  throw std::logic_error("bad sentence kind");
}

bool satisfies_all(const FiniteModel& m, const std::vector<Sentence>& sentences) {
  return std::all_of(sentences.begin(), sentences.end(),
                     [&](const Sentence& s) { return satisfies(m, s); });
}

bool is_countermodel(const FiniteModel& m, const std::vector<Sentence>& gamma,
                     const Sentence& phi) {
  return satisfies_all(m, gamma) && !satisfies(m, phi);
}

// --------------------------------------------------------- model search

namespace {

using detail::Lit;
using detail::SatResult;
using detail::SatSolver;

// Propositional encoding of "there is a model with exactly m elements".
class ModelEncoder {
 public:
  ModelEncoder(const std::set<std::string>& nouns, const std::set<std::string>& verbs, int m)
      : m_(m) {
    true_lit_ = detail::pos_lit(sat_.new_var());
    sat_.add_clause({true_lit_});
    for (const auto& p : nouns) {
      auto& vars = nouns_[p];
      for (int a = 0; a < m; ++a) vars.push_back(sat_.new_var());
      for (int a = m - 1; a >= 0; --a) order_.push_back(vars[a]);
    }
    for (const auto& r : verbs) {
      auto& vars = verbs_[r];
      for (int i = 0; i < m * m; ++i) vars.push_back(sat_.new_var());
      for (int i = m * m - 1; i >= 0; --i) order_.push_back(vars[i]);
    }
  }

  SatSolver& solver() { return sat_; }
  const std::vector<int>& order() const { return order_; }

  void require(const Sentence& s, bool value) {
    Lit l = sentence(s);
    sat_.add_clause({value ? l : detail::negate(l)});
  }

  FiniteModel extract() const {
    FiniteModel model(static_cast<std::size_t>(m_));
    for (const auto& [p, vars] : nouns_) {
      model.declare_noun(p);
      for (int a = 0; a < m_; ++a) {
        if (sat_.model_value(vars[a])) model.add_to_noun(p, a);
      }
    }
    for (const auto& [r, vars] : verbs_) {
      model.declare_verb(r);
      for (int a = 0; a < m_; ++a) {
        for (int b = 0; b < m_; ++b) {
          if (sat_.model_value(vars[a * m_ + b])) model.add_pair(r, a, b);
        }
      }
    }
    return model;
  }

 private:
  Lit gate_and(const std::vector<Lit>& lits) {
    if (lits.empty()) return true_lit_;
    if (lits.size() == 1) return lits[0];
    Lit g = detail::pos_lit(sat_.new_var());
    std::vector<Lit> back{g};
    for (Lit l : lits) {
      sat_.add_clause({detail::negate(g), l});
      back.push_back(detail::negate(l));
    }
    sat_.add_clause(back);
    return g;
  }

  Lit gate_or(const std::vector<Lit>& lits) {
    std::vector<Lit> neg;
    for (Lit l : lits) neg.push_back(detail::negate(l));
    return detail::negate(gate_and(neg));
  }

  const std::vector<Lit>& term(const Term& t) {
    auto found = terms_.find(t);
    if (found != terms_.end()) return found->second;
    std::vector<Lit> lits(m_);
    switch (t.kind()) {
      case TermKind::Noun: {
        const auto& vars = nouns_.at(t.name());
        for (int a = 0; a < m_; ++a) lits[a] = detail::pos_lit(vars[a]);
        break;
      }
      case TermKind::Not: {
        const auto& body = term(t.body());
        for (int a = 0; a < m_; ++a) lits[a] = detail::negate(body[a]);
        break;
      }
      case TermKind::AllOf:
      case TermKind::SomeOf: {
        std::vector<Lit> body = term(t.body());
        const auto& rel = verbs_.at(t.name());
        bool all = t.kind() == TermKind::AllOf;
        for (int a = 0; a < m_; ++a) {
          std::vector<Lit> parts;
          for (int b = 0; b < m_; ++b) {
            Lit r = detail::pos_lit(rel[a * m_ + b]);
            // all: every b in the body is related; some: one such b is.
            parts.push_back(all ? detail::negate(gate_and({body[b], detail::negate(r)}))
                                : gate_and({body[b], r}));
          }
          lits[a] = all ? gate_and(parts) : gate_or(parts);
        }
        break;
      }
    }
    return terms_.emplace(t, std::move(lits)).first->second;
  }

  Lit sentence(const Sentence& s) {
    const auto& ts = s.terms();
    auto inclusion = [&](const Term& x, const Term& y) {
      std::vector<Lit> lx = term(x);
      const auto& ly = term(y);
      std::vector<Lit> parts;
      for (int a = 0; a < m_; ++a) parts.push_back(detail::negate(gate_and({lx[a], detail::negate(ly[a])})));
      return gate_and(parts);
    };
    auto meet = [&](const std::vector<Term>& xs) {
      std::vector<Lit> parts;
      for (int a = 0; a < m_; ++a) {
        std::vector<Lit> here;
        for (const Term& x : xs) here.push_back(term(x)[a]);
        parts.push_back(gate_and(here));
      }
      return gate_or(parts);
    };
    switch (s.kind()) {
      case SentenceKind::All:
        return inclusion(ts[0], ts[1]);
      case SentenceKind::Some:
        return meet({ts[0], ts[1]});
      case SentenceKind::AllOrSome:
        return gate_or({inclusion(ts[0], ts[1]), meet({ts[2], ts[3]})});
      case SentenceKind::EmptyMeet:
        return detail::negate(meet(ts));
      case SentenceKind::NonemptyMeet:
        return meet(ts);
    }
    throw std::logic_error("bad sentence kind");
  }

  int m_;
  SatSolver sat_;
  Lit true_lit_;
  std::map<std::string, std::vector<int>> nouns_;
  std::map<std::string, std::vector<int>> verbs_;
  std::unordered_map<Term, std::vector<Lit>> terms_;
  std::vector<int> order_;
};

SatResult run(SatSolver& sat, const std::vector<Lit>& assumptions, long long* budget) {
  long long before = sat.conflicts();
  SatResult r = sat.solve(assumptions, budget ? *budget : -1);
  if (budget) *budget -= sat.conflicts() - before;
  if (r == SatResult::Unknown) throw BudgetError("model search exceeded its conflict budget");
  return r;
}

}  // namespace

std::optional<FiniteModel> first_model(const std::vector<Sentence>& hold,
                                       const std::vector<Sentence>& fail, int size,
                                       long long* budget) {
  if (size < 0) throw std::invalid_argument("negative domain size");
  std::vector<Sentence> all = hold;
  all.insert(all.end(), fail.begin(), fail.end());
  std::set<std::string> nouns = nouns_in(all);
  std::set<std::string> verbs = verbs_in(all);
  if (size == 0) {
    FiniteModel empty(std::size_t{0});
    for (const auto& p : nouns) empty.declare_noun(p);
    for (const auto& r : verbs) empty.declare_verb(r);
    for (const auto& s : hold) {
      if (!satisfies(empty, s)) return std::nullopt;
    }
    for (const auto& s : fail) {
      if (satisfies(empty, s)) return std::nullopt;
    }
    return empty;
  }
  ModelEncoder enc(nouns, verbs, size);
  for (const auto& s : hold) enc.require(s, true);
  for (const auto& s : fail) enc.require(s, false);
  SatSolver& sat = enc.solver();
  if (run(sat, {}, budget) == SatResult::Unsat) return std::nullopt;
  // Walk the variables from most to least significant, keeping each one
  // false whenever some model extends the choices made so far.
  std::vector<Lit> fixed;
  for (int v : enc.order()) {
    fixed.push_back(detail::neg_lit(v));
    if (!sat.model_value(v)) continue;
    if (run(sat, fixed, budget) == SatResult::Unsat) fixed.back() = detail::pos_lit(v);
  }
  // The last satisfying call fixed every primary variable.
  if (run(sat, fixed, budget) != SatResult::Sat) throw InternalError("model search lost its model");
  return enc.extract();
}

OracleResult oracle_consequence(const std::vector<Sentence>& gamma, const Sentence& phi,
                                int max_size, const OracleOptions& options) {
  if (max_size < 0) throw std::invalid_argument("negative size bound");
  long long budget = options.budget;
  OracleResult result;
  result.bound = max_size;
  std::vector<int> sizes;
  for (int m = 1; m <= max_size; ++m) sizes.push_back(m);
  sizes.push_back(0);
  for (int m : sizes) {
    auto model = first_model(gamma, {phi}, m, &budget);
    if (!model) continue;
    if (!is_countermodel(*model, gamma, phi)) {
      throw InternalError("oracle produced a model that fails direct evaluation");
    }
    result.found = true;
    result.countermodel = std::move(*model);
    return result;
  }
  return result;
}

FiniteModel random_model(const Vocabulary& vocab, int max_domain, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::size_t size = static_cast<std::size_t>(rng() % static_cast<std::uint64_t>(max_domain + 1));
  FiniteModel m(size);
  for (const auto& p : vocab.nouns) {
    m.declare_noun(p);
    for (std::size_t a = 0; a < size; ++a) {
      if (rng() & 1) m.add_to_noun(p, a);
    }
  }
  for (const auto& r : vocab.verbs) {
    m.declare_verb(r);
    for (std::size_t a = 0; a < size; ++a) {
      for (std::size_t b = 0; b < size; ++b) {
        if (rng() & 1) m.add_pair(r, a, b);
      }
    }
  }
  return m;
}

}  // namespace relsyl
