#include "relsyl/saturation.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace relsyl {

// ------------------------------------------------------------ universes

namespace {

std::size_t arity_of(SentenceKind k) {
  switch (k) {
    case SentenceKind::All:
    case SentenceKind::Some: return 2;
    case SentenceKind::AllOrSome: return 4;
    default: break;
  }
  throw std::invalid_argument("saturation universes hold all/some/disjunctive sentences only");
}

bool family_contains(const SentenceFamily& f, const Sentence& s) {
  if (f.kind != s.kind()) return false;
  for (std::size_t i = 0; i < f.positions.size(); ++i) {
    if (!f.positions[i].count(s.term(i))) return false;
  }
  if (f.last_pairs && !f.last_pairs->count({s.term(2), s.term(3)})) return false;
  return true;
}

std::size_t family_size(const SentenceFamily& f) {
  if (!f.last_pairs) {
    std::size_t n = 1;
    for (const auto& p : f.positions) n *= p.size();
    return n;
  }
  std::size_t pairs = 0;
  for (const auto& [u, v] : *f.last_pairs) {
    if (f.positions[2].count(u) && f.positions[3].count(v)) ++pairs;
  }
  return f.positions[0].size() * f.positions[1].size() * pairs;
}

}  // namespace

bool SentenceUniverse::contains(const Sentence& s) const {
  for (const auto& f : families_) {
    if (family_contains(f, s)) return true;
  }
  return false;
}

std::size_t SentenceUniverse::size() const {
  std::size_t n = 0;
  for (const auto& f : families_) n += family_size(f);
  return n;
}

std::vector<Sentence> SentenceUniverse::members() const {
  std::vector<Sentence> out;
  for (const auto& f : families_) {
    std::vector<Term> cur(f.positions.size());
    auto rec = [&](auto&& self, std::size_t i) -> void {
      if (i == f.positions.size()) {
        if (f.last_pairs && !f.last_pairs->count({cur[2], cur[3]})) return;
        out.push_back(Sentence::make(f.kind, cur));
        return;
      }
      for (const Term& t : f.positions[i]) {
        cur[i] = t;
        self(self, i + 1);
      }
    };
    rec(rec, 0);
  }
  std::sort(out.begin(), out.end());
  return out;
}

TermSet SentenceUniverse::terms() const {
  TermSet out;
  for (const auto& f : families_) {
    for (const auto& p : f.positions) out.insert(p.begin(), p.end());
  }
  return out;
}

SentenceUniverse g1(const std::vector<Sentence>& delta) {
  SentenceUniverse u("g1");
  u.add_family({SentenceKind::All, {term_closure(delta), extended_terms(delta)}, std::nullopt});
  return u;
}

SentenceUniverse g2plus(const std::vector<Sentence>& delta) {
  TermSet t = term_closure(delta);
  TermSet tp = extended_terms(delta);
  SentenceUniverse u("g2plus");
  u.add_family({SentenceKind::All, {t, tp}, std::nullopt});
  u.add_family({SentenceKind::Some, {t, t}, std::nullopt});
  u.add_family({SentenceKind::AllOrSome, {t, tp, t, t}, std::nullopt});
  return u;
}

SentenceUniverse g2plus_restricted(const std::vector<Sentence>& delta,
                                   const std::set<std::pair<Term, Term>>& last_pairs) {
  TermSet t = term_closure(delta);
  TermSet tp = extended_terms(delta);
  SentenceUniverse u("g2plus-restricted");
  u.add_family({SentenceKind::All, {t, tp}, std::nullopt});
  u.add_family({SentenceKind::Some, {t, t}, std::nullopt});
  u.add_family({SentenceKind::AllOrSome, {t, tp, t, t}, last_pairs});
  return u;
}

SentenceUniverse square_universe(const TermSet& terms, bool with_some) {
  SentenceUniverse u(with_some ? "all/some over terms" : "all over terms");
  u.add_family({SentenceKind::All, {terms, terms}, std::nullopt});
  if (with_some) u.add_family({SentenceKind::Some, {terms, terms}, std::nullopt});
  return u;
}

// --------------------------------------------------------------- engine

namespace {

constexpr int kMaxTerms = 1 << 15;

// Immutable part of a saturation problem: term table, universe, rules.
struct Problem {
  struct TermRec {
    TermKind kind;
    int name;  // noun or verb symbol id
    int body;  // -1 for nouns
  };
  struct Family {
    SentenceKind kind;
    std::size_t arity;
    std::vector<std::vector<char>> member;  // per position, indexed by term id
    std::vector<std::vector<int>> list;     // per position, sorted term ids
    bool restricted = false;
    std::unordered_set<std::uint64_t> pairs;
  };

  std::vector<Term> terms;
  std::vector<TermRec> rec;
  std::unordered_map<Term, int> term_ids;
  std::unordered_map<std::string, int> symbol_ids;
  std::vector<std::string> symbols;
  std::unordered_map<std::uint64_t, int> compound;
  std::vector<Family> families;
  std::size_t universe_size = 0;
  std::vector<RuleTemplate> rules;

  static std::uint64_t compound_key(TermKind k, int name, int body) {
    return (static_cast<std::uint64_t>(k) << 60) | (static_cast<std::uint64_t>(name + 1) << 30) |
           static_cast<std::uint64_t>(body);
  }

  int symbol(const std::string& s) {
    auto [it, fresh] = symbol_ids.try_emplace(s, static_cast<int>(symbols.size()));
    if (fresh) symbols.push_back(s);
    return it->second;
  }

  int find_symbol(const std::string& s) const {
    auto it = symbol_ids.find(s);
    return it == symbol_ids.end() ? -1 : it->second;
  }

  int term_id(const Term& t) const {
    auto it = term_ids.find(t);
    return it == term_ids.end() ? -1 : it->second;
  }

  Problem(const std::vector<RuleTemplate>& rule_list, const SentenceUniverse& u) {
    TermSet all;
    for (const Term& t : u.terms()) {
      TermSet sub = subterms(t);
      all.insert(sub.begin(), sub.end());
    }
    if (all.size() >= static_cast<std::size_t>(kMaxTerms)) {
      throw std::length_error("saturation universe has too many terms");
    }
    // ids follow canonical order; subterms are registered first as needed
    for (const Term& t : all) {
      int id = static_cast<int>(terms.size());
      terms.push_back(t);
      term_ids.emplace(t, id);
    }
    rec.resize(terms.size());
    for (std::size_t i = 0; i < terms.size(); ++i) {
      const Term& t = terms[i];
      TermRec r{t.kind(), -1, -1};
      if (t.kind() != TermKind::Not) r.name = symbol(t.name());
      if (t.kind() != TermKind::Noun) r.body = term_ids.at(t.body());
      rec[i] = r;
      if (t.kind() != TermKind::Noun) {
        compound.emplace(compound_key(t.kind(), r.name, r.body), static_cast<int>(i));
      }
    }
    for (const auto& f : u.families()) {
      Family fam;
      fam.kind = f.kind;
      fam.arity = arity_of(f.kind);
      if (f.positions.size() != fam.arity) throw std::invalid_argument("family arity mismatch");
      for (const auto& pos : f.positions) {
        std::vector<char> mem(terms.size(), 0);
        std::vector<int> lst;
        for (const Term& t : pos) {
          int id = term_ids.at(t);
          mem[id] = 1;
          lst.push_back(id);
        }
        std::sort(lst.begin(), lst.end());
        fam.member.push_back(std::move(mem));
        fam.list.push_back(std::move(lst));
      }
      if (f.last_pairs) {
        fam.restricted = true;
        for (const auto& [a, b] : *f.last_pairs) {
          int ia = term_id(a);
          int ib = term_id(b);
          if (ia >= 0 && ib >= 0) fam.pairs.insert(pair_key(ia, ib));
        }
      }
      families.push_back(std::move(fam));
    }
    universe_size = u.size();
    rules = rule_list;
    std::sort(rules.begin(), rules.end(),
              [](const RuleTemplate& a, const RuleTemplate& b) { return a.name < b.name; });
  }

  static std::uint64_t pair_key(int a, int b) {
    return (static_cast<std::uint64_t>(a) << 32) | static_cast<std::uint32_t>(b);
  }

  bool in_universe(SentenceKind kind, const std::array<int, 4>& a) const {
    for (const auto& f : families) {
      if (f.kind != kind) continue;
      bool ok = true;
      for (std::size_t i = 0; ok && i < f.arity; ++i) ok = f.member[i][a[i]] != 0;
      if (ok && f.restricted) ok = f.pairs.count(pair_key(a[2], a[3])) != 0;
      if (ok) return true;
    }
    return false;
  }
};

struct Fact {
  SentenceKind kind;
  std::array<int, 4> a;
};

std::uint64_t fact_key(SentenceKind kind, const std::array<int, 4>& a) {
  std::uint64_t k = static_cast<std::uint64_t>(kind);
  for (int i = 0; i < 4; ++i) k |= static_cast<std::uint64_t>(a[i] + 1) << (3 + 15 * i);
  return k;
}

struct Bindings {
  std::vector<int> term;
  std::vector<int> verb;
  std::vector<int> trail;  // >= 0: term var, < 0: ~verb var
};

}  // namespace

class SaturationEngine {
 public:
  struct Deriv {
    int rule;  // -1 for premises
    std::array<int, 3> prem;
    int round;
  };

  SaturationEngine(std::shared_ptr<const Problem> problem) : p_(std::move(problem)) {}

  // Adds premises; returns true if any was new.
  bool add_premises(const std::vector<Sentence>& gamma) {
    std::vector<std::pair<std::array<int, 4>, SentenceKind>> fresh;
    for (const Sentence& s : gamma) {
      auto f = to_fact(s);
      if (!f || !p_->in_universe(f->kind, f->a)) continue;
      if (fact_ids_.count(fact_key(f->kind, f->a))) continue;
      fresh.push_back({f->a, f->kind});
    }
    std::sort(fresh.begin(), fresh.end(), [](const auto& x, const auto& y) {
      return std::tie(x.second, x.first) < std::tie(y.second, y.first);
    });
    fresh.erase(std::unique(fresh.begin(), fresh.end()), fresh.end());
    delta_begin_ = facts_.size();
    for (const auto& [a, kind] : fresh) insert(Fact{kind, a}, Deriv{-1, {-1, -1, -1}, rounds_});
    delta_end_ = facts_.size();
    return delta_end_ > delta_begin_;
  }

  void run(const SaturationOptions& opts, bool with_axioms) {
    std::optional<std::uint64_t> stop;
    if (opts.stop_at) {
      auto f = to_fact(*opts.stop_at);
      if (f) stop = fact_key(f->kind, f->a);
    }
    while (true) {
      if (stop && fact_ids_.count(*stop)) return;
      limit_ = static_cast<int>(facts_.size());
      cands_.clear();
      for (std::size_t r = 0; r < p_->rules.size(); ++r) {
        const RuleTemplate& rule = p_->rules[r];
        Bindings b;
        b.term.assign(rule.term_vars.size(), -1);
        b.verb.assign(rule.verb_vars.size(), -1);
        std::array<int, 3> prem{-1, -1, -1};
        if (rule.premises.empty()) {
          if (with_axioms) conclude(static_cast<int>(r), b, prem);
          continue;
        }
        for (std::size_t i = 0; i < rule.premises.size(); ++i) {
          const SentencePattern& sp = rule.premises[i];
          for (std::size_t f = delta_begin_; f < delta_end_; ++f) {
            if (facts_[f].kind != sp.kind) continue;
            std::size_t mark = b.trail.size();
            if (match_fact(sp, facts_[f], b)) {
              prem[i] = static_cast<int>(f);
              join(static_cast<int>(r), 1u << i, b, prem);
              prem[i] = -1;
            }
            undo(b, mark);
          }
        }
      }
      with_axioms = false;
      if (cands_.empty()) return;
      std::vector<std::uint64_t> keys;
      keys.reserve(cands_.size());
      for (const auto& [k, c] : cands_) keys.push_back(k);
      std::sort(keys.begin(), keys.end(), [&](std::uint64_t x, std::uint64_t y) {
        const Cand& cx = cands_.at(x);
        const Cand& cy = cands_.at(y);
        return std::tie(cx.fact.kind, cx.fact.a) < std::tie(cy.fact.kind, cy.fact.a);
      });
      ++rounds_;
      delta_begin_ = facts_.size();
      for (std::uint64_t k : keys) {
        const Cand& c = cands_.at(k);
        insert(c.fact, Deriv{c.rule, c.prem, rounds_});
      }
      delta_end_ = facts_.size();
    }
  }

  std::optional<Fact> to_fact(const Sentence& s) const {
    if (s.kind() == SentenceKind::EmptyMeet || s.kind() == SentenceKind::NonemptyMeet) {
      return std::nullopt;
    }
    return to_fact(s.kind(), s.terms());
  }

  std::optional<Fact> to_fact(SentenceKind kind, const std::vector<Term>& ts) const {
    Fact f{kind, {-1, -1, -1, -1}};
    if (ts.size() > 4) return std::nullopt;
    for (std::size_t i = 0; i < ts.size(); ++i) {
      int id = p_->term_id(ts[i]);
      if (id < 0) return std::nullopt;
      f.a[i] = id;
    }
    return f;
  }

  int find(const Sentence& s) const {
    auto f = to_fact(s);
    if (!f) return -1;
    auto it = fact_ids_.find(fact_key(f->kind, f->a));
    return it == fact_ids_.end() ? -1 : it->second;
  }

  bool contains(SentenceKind kind, const std::vector<Term>& ts) const {
    auto f = to_fact(kind, ts);
    return f && fact_ids_.count(fact_key(f->kind, f->a));
  }

  Sentence sentence(int id) const {
    const Fact& f = facts_[id];
    std::vector<Term> ts;
    std::size_t n = arity_of(f.kind);
    for (std::size_t i = 0; i < n; ++i) ts.push_back(p_->terms[f.a[i]]);
    return Sentence::make(f.kind, std::move(ts));
  }

  const Deriv& deriv(int id) const { return deriv_[id]; }
  std::size_t size() const { return facts_.size(); }
  int rounds() const { return rounds_; }
  const Problem& problem() const { return *p_; }

  ProofPtr proof(int id, std::unordered_map<int, ProofPtr>& memo) const {
    auto it = memo.find(id);
    if (it != memo.end()) return it->second;
    const Deriv& d = deriv_[id];
    ProofPtr out;
    if (d.rule < 0) {
      out = premise_leaf(sentence(id));
    } else {
      const RuleTemplate& rule = p_->rules[d.rule];
      std::vector<ProofPtr> kids;
      for (std::size_t i = 0; i < rule.premises.size(); ++i) kids.push_back(proof(d.prem[i], memo));
      out = make_proof(sentence(id), rule.name, std::move(kids));
    }
    memo.emplace(id, out);
    return out;
  }

 private:
  struct Cand {
    Fact fact;
    int rule;
    std::array<int, 3> prem;
  };

  void insert(const Fact& f, const Deriv& d) {
    int id = static_cast<int>(facts_.size());
    facts_.push_back(f);
    deriv_.push_back(d);
    fact_ids_.emplace(fact_key(f.kind, f.a), id);
    by_kind_[static_cast<int>(f.kind)].push_back(id);
    for (auto& [km, index] : indexes_) {
      if (km.first != static_cast<int>(f.kind)) continue;
      index[index_key(km.second, f.a)].push_back(id);
    }
  }

  static std::uint64_t index_key(unsigned mask, const std::array<int, 4>& a) {
    std::uint64_t k = 0;
    for (int i = 0; i < 4; ++i) {
      if (mask & (1u << i)) k = (k << 16) | static_cast<std::uint64_t>(a[i]);
    }
    return k;
  }

  const std::vector<int>& lookup(SentenceKind kind, unsigned mask, const std::array<int, 4>& a) {
    auto km = std::make_pair(static_cast<int>(kind), static_cast<int>(mask));
    auto it = indexes_.find(km);
    if (it == indexes_.end()) {
      auto& index = indexes_[km];
      for (int id : by_kind_[km.first]) index[index_key(mask, facts_[id].a)].push_back(id);
      it = indexes_.find(km);
    }
    auto hit = it->second.find(index_key(mask, a));
    return hit == it->second.end() ? empty_ : hit->second;
  }

  static void undo(Bindings& b, std::size_t mark) {
    while (b.trail.size() > mark) {
      int v = b.trail.back();
      b.trail.pop_back();
      if (v >= 0) {
        b.term[v] = -1;
      } else {
        b.verb[~v] = -1;
      }
    }
  }

  bool match_term(const TermPattern* pat, int t, Bindings& b) const {
    const auto& r = p_->rec[t];
    switch (pat->kind) {
      case TermPattern::Kind::Var:
        if (b.term[pat->var] < 0) {
          b.term[pat->var] = t;
          b.trail.push_back(pat->var);
          return true;
        }
        return b.term[pat->var] == t;
      case TermPattern::Kind::Not:
        return r.kind == TermKind::Not && match_term(pat->body.get(), r.body, b);
      case TermPattern::Kind::AllOf:
      case TermPattern::Kind::SomeOf: {
        TermKind want = pat->kind == TermPattern::Kind::AllOf ? TermKind::AllOf : TermKind::SomeOf;
        if (r.kind != want) return false;
        if (b.verb[pat->var] < 0) {
          b.verb[pat->var] = r.name;
          b.trail.push_back(~pat->var);
        } else if (b.verb[pat->var] != r.name) {
          return false;
        }
        return match_term(pat->body.get(), r.body, b);
      }
    }
    return false;
  }

  bool match_fact(const SentencePattern& sp, const Fact& f, Bindings& b) const {
    for (std::size_t i = 0; i < sp.args.size(); ++i) {
      if (!match_term(sp.args[i].get(), f.a[i], b)) return false;
    }
    return true;
  }

  // -2: pattern has unbound variables, -1: instance not in the term table
  int instantiate_id(const TermPattern* pat, const Bindings& b) const {
    switch (pat->kind) {
      case TermPattern::Kind::Var:
        return b.term[pat->var] < 0 ? -2 : b.term[pat->var];
      case TermPattern::Kind::Not: {
        int body = instantiate_id(pat->body.get(), b);
        if (body < 0) return body;
        auto it = p_->compound.find(Problem::compound_key(TermKind::Not, -1, body));
        return it == p_->compound.end() ? -1 : it->second;
      }
      case TermPattern::Kind::AllOf:
      case TermPattern::Kind::SomeOf: {
        int body = instantiate_id(pat->body.get(), b);
        if (b.verb[pat->var] < 0) return body == -1 ? -1 : -2;
        if (body < 0) return body;
        TermKind k = pat->kind == TermPattern::Kind::AllOf ? TermKind::AllOf : TermKind::SomeOf;
        auto it = p_->compound.find(Problem::compound_key(k, b.verb[pat->var], body));
        return it == p_->compound.end() ? -1 : it->second;
      }
    }
    return -1;
  }

  void join(int r, unsigned done, Bindings& b, std::array<int, 3>& prem) {
    const RuleTemplate& rule = p_->rules[r];
    std::size_t n = rule.premises.size();
    if (done == (1u << n) - 1) {
      conclude(r, b, prem);
      return;
    }
    // next premise: the one with the most ground positions
    int best = -1;
    int best_ground = -1;
    unsigned best_mask = 0;
    std::array<int, 4> best_ids{0, 0, 0, 0};
    for (std::size_t j = 0; j < n; ++j) {
      if (done & (1u << j)) continue;
      const SentencePattern& sp = rule.premises[j];
      unsigned mask = 0;
      int ground = 0;
      std::array<int, 4> ids{0, 0, 0, 0};
      for (std::size_t i = 0; i < sp.args.size(); ++i) {
        int id = instantiate_id(sp.args[i].get(), b);
        if (id == -1) return;  // no fact can match
        if (id >= 0) {
          mask |= 1u << i;
          ids[i] = id;
          ++ground;
        }
      }
      if (ground > best_ground) {
        best = static_cast<int>(j);
        best_ground = ground;
        best_mask = mask;
        best_ids = ids;
      }
    }
    const SentencePattern& sp = rule.premises[best];
    if (best_mask == (1u << sp.args.size()) - 1) {
      auto it = fact_ids_.find(fact_key(sp.kind, pad(best_ids, sp.args.size())));
      if (it == fact_ids_.end() || it->second >= limit_) return;
      prem[best] = it->second;
      join(r, done | (1u << best), b, prem);
      prem[best] = -1;
      return;
    }
    const std::vector<int>& cands =
        best_mask ? lookup(sp.kind, best_mask, best_ids) : by_kind_[static_cast<int>(sp.kind)];
    for (std::size_t k = 0; k < cands.size(); ++k) {
      int f = cands[k];
      if (f >= limit_) break;  // ids grow along every list
      std::size_t mark = b.trail.size();
      if (match_fact(sp, facts_[f], b)) {
        prem[best] = f;
        join(r, done | (1u << best), b, prem);
        prem[best] = -1;
      }
      undo(b, mark);
    }
  }

  static std::array<int, 4> pad(std::array<int, 4> a, std::size_t n) {
    for (std::size_t i = n; i < 4; ++i) a[i] = -1;
    return a;
  }

  void offer(int r, const Fact& f, const std::array<int, 3>& prem) {
    std::uint64_t key = fact_key(f.kind, f.a);
    if (fact_ids_.count(key)) return;
    if (!p_->in_universe(f.kind, f.a)) return;
    auto [it, fresh] = cands_.try_emplace(key, Cand{f, r, prem});
    if (fresh) return;
    Cand& c = it->second;
    if (std::tie(r, prem) < std::tie(c.rule, c.prem)) {
      c.rule = r;
      c.prem = prem;
    }
  }

  void conclude(int r, Bindings& b, const std::array<int, 3>& prem) {
    const SentencePattern& cp = p_->rules[r].conclusion;
    std::size_t n = cp.args.size();
    Fact f{cp.kind, {-1, -1, -1, -1}};
    bool ground = true;
    for (std::size_t i = 0; i < n; ++i) {
      int id = instantiate_id(cp.args[i].get(), b);
      if (id == -1) return;
      if (id == -2) ground = false;
      f.a[i] = id;
    }
    if (ground) {
      offer(r, f, prem);
      return;
    }
    // free conclusion variables range over the universe
    for (const auto& fam : p_->families) {
      if (fam.kind != cp.kind) continue;
      complete(r, fam, 0, f, b, prem);
    }
  }

  void complete(int r, const Problem::Family& fam, std::size_t i, Fact& f, Bindings& b,
                const std::array<int, 3>& prem) {
    const SentencePattern& cp = p_->rules[r].conclusion;
    if (i == cp.args.size()) {
      offer(r, f, prem);
      return;
    }
    int id = instantiate_id(cp.args[i].get(), b);
    if (id == -1) return;
    if (id >= 0) {
      if (!fam.member[i][id]) return;
      f.a[i] = id;
      complete(r, fam, i + 1, f, b, prem);
      return;
    }
    for (int t : fam.list[i]) {
      std::size_t mark = b.trail.size();
      if (match_term(cp.args[i].get(), t, b)) {
        f.a[i] = t;
        complete(r, fam, i + 1, f, b, prem);
      }
      undo(b, mark);
    }
  }

  std::shared_ptr<const Problem> p_;
  std::vector<Fact> facts_;
  std::vector<Deriv> deriv_;
  std::unordered_map<std::uint64_t, int> fact_ids_;
  std::array<std::vector<int>, 5> by_kind_;
  std::map<std::pair<int, int>, std::unordered_map<std::uint64_t, std::vector<int>>> indexes_;
  std::unordered_map<std::uint64_t, Cand> cands_;
  std::vector<int> empty_;
  std::size_t delta_begin_ = 0;
  std::size_t delta_end_ = 0;
  int limit_ = 0;
  int rounds_ = 0;
};

// -------------------------------------------------------------- results

SaturationResult::SaturationResult() = default;
SaturationResult::~SaturationResult() = default;
SaturationResult::SaturationResult(SaturationResult&&) noexcept = default;
SaturationResult& SaturationResult::operator=(SaturationResult&&) noexcept = default;

SaturationResult::SaturationResult(const SaturationResult& other)
    : engine_(other.engine_ ? std::make_unique<SaturationEngine>(*other.engine_) : nullptr) {}

SaturationResult& SaturationResult::operator=(const SaturationResult& other) {
  if (this != &other) {
    engine_ = other.engine_ ? std::make_unique<SaturationEngine>(*other.engine_) : nullptr;
  }
  return *this;
}

bool SaturationResult::contains(const Sentence& s) const { return engine_->find(s) >= 0; }

bool SaturationResult::contains(SentenceKind kind, const std::vector<Term>& terms) const {
  return engine_->contains(kind, terms);
}

std::size_t SaturationResult::size() const { return engine_->size(); }

std::vector<Sentence> SaturationResult::derived() const {
  std::vector<Sentence> out;
  for (std::size_t i = 0; i < engine_->size(); ++i) out.push_back(engine_->sentence(static_cast<int>(i)));
  std::sort(out.begin(), out.end());
  return out;
}

int SaturationResult::rounds() const { return engine_->rounds(); }

std::size_t SaturationResult::universe_size() const { return engine_->problem().universe_size; }

std::optional<SaturationResult::Derivation> SaturationResult::derivation_of(const Sentence& s) const {
  int id = engine_->find(s);
  if (id < 0) return std::nullopt;
  const auto& d = engine_->deriv(id);
  Derivation out;
  out.round = d.round;
  if (d.rule < 0) {
    out.rule = "PREMISE";
    return out;
  }
  const RuleTemplate& rule = engine_->problem().rules[d.rule];
  out.rule = rule.name;
  for (std::size_t i = 0; i < rule.premises.size(); ++i) out.premises.push_back(engine_->sentence(d.prem[i]));
  return out;
}

ProofPtr SaturationResult::extract_proof(const Sentence& s) const {
  int id = engine_->find(s);
  if (id < 0) throw std::invalid_argument("sentence was not derived: " + s.text());
  std::unordered_map<int, ProofPtr> memo;
  return engine_->proof(id, memo);
}

SaturationResult SaturationResult::extend(const std::vector<Sentence>& extra,
                                          const SaturationOptions& options) const {
  SaturationResult out(*this);
  if (out.engine_->add_premises(extra)) out.engine_->run(options, false);
  return out;
}

SaturationResult saturate(const std::vector<Sentence>& gamma, const std::vector<RuleTemplate>& rules,
                          const SentenceUniverse& universe, const SaturationOptions& options) {
  auto problem = std::make_shared<const Problem>(rules, universe);
  SaturationResult out;
  out.engine_ = std::make_unique<SaturationEngine>(problem);
  out.engine_->add_premises(gamma);
  out.engine_->run(options, true);
  return out;
}

SaturationResult saturate(const std::vector<Sentence>& gamma, RuleSet rules,
                          const SentenceUniverse& universe, const SaturationOptions& options) {
  return saturate(gamma, rule_templates(rules), universe, options);
}

}  // namespace relsyl
