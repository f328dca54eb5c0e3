#include "relsyl/clausal.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>

#include "relsyl/errors.hpp"
#include "relsyl/semantics.hpp"

namespace relsyl {

namespace {

std::vector<Term> without(const std::vector<Term>& lits, const Term& drop) {
  std::vector<Term> out;
  for (const Term& t : lits) {
    if (!(t == drop)) out.push_back(t);
  }
  return out;
}

bool has_some_of(const Term& t) {
  switch (t.kind()) {
    case TermKind::Noun: return false;
    case TermKind::SomeOf: return true;
    default: return has_some_of(t.body());
  }
}

bool tautology(const Clause& c) {
  for (const Term& l : c.literals()) {
    if (l.kind() == TermKind::Not && c.contains(l.body())) return true;
  }
  return false;
}

}  // namespace

Clause resolve(const Clause& c1, const Clause& c2, const Term& pivot) {
  if (!c1.empty_meet() || !c2.empty_meet()) throw std::invalid_argument("RES takes [ ] clauses");
  Term x = normalize_literal(pivot);
  Term nx = complement_literal(x);
  if (!c1.contains(x)) throw std::invalid_argument("pivot " + x.text() + " not in first clause");
  if (!c2.contains(nx)) throw std::invalid_argument(nx.text() + " not in second clause");
  std::vector<Term> a = without(c1.literals(), x);
  std::vector<Term> b = without(c2.literals(), nx);
  if (a.empty() || b.empty()) throw std::invalid_argument("RES needs literals besides the pivot on both sides");
  a.insert(a.end(), b.begin(), b.end());
  return Clause(true, a);
}

std::vector<Clause> rel_expand(const Clause& c, const std::string& verb) {
  if (!c.empty_meet()) throw std::invalid_argument("REL takes a [ ] clause");
  std::vector<Clause> out;
  const auto& lits = c.literals();
  for (std::size_t j = 0; j < lits.size(); ++j) {
    if (lits[j].kind() == TermKind::Not) continue;
    bool ok = true;
    std::vector<Term> concl;
    for (std::size_t i = 0; i < lits.size(); ++i) {
      if (i == j) continue;
      if (lits[i].kind() != TermKind::Not) {
        ok = false;
        break;
      }
      concl.push_back(Term::all_of(verb, lits[i].body()));
    }
    if (!ok) continue;
    concl.push_back(Term::negate(Term::all_of(verb, lits[j])));
    out.emplace_back(true, concl);
  }
  if (out.empty()) throw std::invalid_argument("no literal can play x_n in REL");
  return out;
}

namespace {

using Clock = std::chrono::steady_clock;

class ClausalSearch {
 public:
  struct Entry {
    Clause clause;
    ProofPtr proof;
  };

  ClausalSearch(std::vector<std::string> verbs, int depth_bound, std::size_t cap, bool opaque_some_of)
      : verbs_(std::move(verbs)), depth_bound_(depth_bound), cap_(cap), opaque_(opaque_some_of) {}

  void add_initial(const Clause& c, ProofPtr proof) { offer(c, std::move(proof)); }

  // Runs until stop() returns true, the clause set saturates, or the cap is hit.
  template <typename Stop>
  bool run(Stop stop) {
    for (const Entry& e : active_) {
      if (stop(e)) return true;
    }
    while (!pending_.empty()) {
      auto it = pending_.begin();
      Entry e = it->second;
      pending_.erase(it);
      if (subsumed_by_active(e.clause)) continue;
      active_.push_back(e);
      if (stop(active_.back())) return true;
      if (empty_pair_ && stop_on_empty_) return true;
      expand(active_.size() - 1);
      if (known_ > cap_) {
        truncated_ = true;
        return false;
      }
    }
    return false;
  }

  const std::vector<Entry>& active() const { return active_; }
  std::size_t known() const { return known_; }
  bool truncated() const { return truncated_; }
  // Unit clauses [l] and [(not l)]: only the empty model satisfies them.
  const std::optional<std::pair<Entry, Entry>>& empty_pair() const { return empty_pair_; }
  void stop_on_empty(bool on) { stop_on_empty_ = on; }

  // Proof of target from an active clause whose literals it contains.
  static ProofPtr weaken(const Entry& e, const Clause& target) {
    if (e.clause == target) return e.proof;
    return make_proof(target.to_sentence(), "STRUCTURAL", {e.proof});
  }

  // Any [ ] clause, from the two contradictory units.
  ProofPtr from_empty_pair(const Clause& target) const {
    const auto& [pos, neg] = *empty_pair_;
    if (pos.clause.subsumes(target)) return weaken(pos, target);
    if (neg.clause.subsumes(target)) return weaken(neg, target);
    const Term& y = target.literals().front();
    const Term& l = pos.clause.literals().front();
    Clause a(true, {l, y});
    Clause b(true, {neg.clause.literals().front(), y});
    Clause unit(true, {y});
    ProofPtr r = make_proof(unit.to_sentence(), "RES", {weaken(pos, a), weaken(neg, b)});
    return weaken(Entry{unit, r}, target);
  }

 private:
  struct Key {
    std::size_t size;
    int depth;
    std::size_t seq;
    bool operator<(const Key& o) const { return std::tie(size, depth, seq) < std::tie(o.size, o.depth, o.seq); }
  };

  bool subsumed_by_active(const Clause& c) const {
    for (const Entry& e : active_) {
      if (e.clause.subsumes(c)) return true;
    }
    return false;
  }

  void offer(const Clause& c, ProofPtr proof) {
    if (c.depth() > depth_bound_ || tautology(c)) return;
    if (!seen_.insert(c).second) return;
    if (subsumed_by_active(c)) return;
    ++known_;
    pending_.emplace(Key{c.size(), c.depth(), seq_++}, Entry{c, std::move(proof)});
  }

  void resolve_pair(const Entry& a, const Entry& b) {
    for (const Term& x : a.clause.literals()) {
      Term nx = complement_literal(x);
      if (!b.clause.contains(nx)) continue;
      std::vector<Term> ra = without(a.clause.literals(), x);
      std::vector<Term> rb = without(b.clause.literals(), nx);
      if (ra.empty() && rb.empty()) {
        if (!empty_pair_) empty_pair_ = std::make_pair(a, b);
        continue;
      }
      ProofPtr pa = a.proof;
      ProofPtr pb = b.proof;
      // STRUCTURAL padding keeps both sides of RES nonempty
      if (ra.empty()) {
        auto z = std::find_if(rb.begin(), rb.end(), [&](const Term& t) { return !(t == x); });
        if (z == rb.end()) continue;
        Clause padded(true, {x, *z});
        pa = make_proof(padded.to_sentence(), "STRUCTURAL", {a.proof});
        ra.push_back(*z);
      } else if (rb.empty()) {
        auto z = std::find_if(ra.begin(), ra.end(), [&](const Term& t) { return !(t == nx); });
        if (z == ra.end()) continue;
        Clause padded(true, {nx, *z});
        pb = make_proof(padded.to_sentence(), "STRUCTURAL", {b.proof});
        rb.push_back(*z);
      }
      std::vector<Term> lits = ra;
      lits.insert(lits.end(), rb.begin(), rb.end());
      Clause c(true, lits);
      if (seen_.count(c)) continue;
      offer(c, make_proof(c.to_sentence(), "RES", {pa, pb}));
    }
  }

  void expand(std::size_t idx) {
    Entry cur = active_[idx];
    for (std::size_t j = 0; j <= idx; ++j) {
      Entry other = active_[j];
      resolve_pair(cur, other);
      if (j != idx) resolve_pair(other, cur);
    }
    if (opaque_) {
      for (const Term& l : cur.clause.literals()) {
        if (has_some_of(l)) return;
      }
    }
    const auto& lits = cur.clause.literals();
    for (const auto& r : verbs_) {
      for (std::size_t j = 0; j < lits.size(); ++j) {
        std::vector<Term> concl;
        for (std::size_t i = 0; i < lits.size(); ++i) {
          if (i != j) concl.push_back(Term::all_of(r, complement_literal(lits[i])));
        }
        concl.push_back(Term::negate(Term::all_of(r, lits[j])));
        Clause c(true, concl);
        if (c.depth() > depth_bound_ || seen_.count(c)) continue;
        offer(c, make_proof(c.to_sentence(), "REL", {cur.proof}));
      }
    }
  }

  std::vector<std::string> verbs_;
  int depth_bound_;
  std::size_t cap_;
  bool opaque_;
  std::vector<Entry> active_;
  std::map<Key, Entry> pending_;
  std::set<Clause> seen_;
  std::size_t known_ = 0;
  std::size_t seq_ = 0;
  bool truncated_ = false;
  bool stop_on_empty_ = true;
  std::optional<std::pair<Entry, Entry>> empty_pair_;
};

struct Prepared {
  std::vector<std::pair<Clause, Sentence>> empty;     // [ ] members with their source
  std::vector<std::pair<Clause, Sentence>> nonempty;  // < > members with their source
};

Prepared prepare(const std::vector<Sentence>& gamma) {
  Prepared p;
  for (const Sentence& s : gamma) {
    Clause c = embed_clause(s);
    (c.empty_meet() ? p.empty : p.nonempty).emplace_back(c, c.to_sentence());
  }
  return p;
}

std::optional<ProofPtr> tautology_proof(const Clause& goal) {
  for (const Term& l : goal.literals()) {
    if (l.kind() == TermKind::Not && goal.contains(l.body())) {
      Clause ax(true, {l.body(), l});
      ProofPtr p = make_proof(ax.to_sentence(), "CLAXIOM");
      return ClausalSearch::weaken({ax, p}, goal);
    }
  }
  return std::nullopt;
}

Verdict decide_meets(const std::vector<Sentence>& gamma, const Sentence& phi,
                     const ClausalOptions& options, bool opaque, const char* what) {
  auto start = Clock::now();
  std::vector<Sentence> delta = gamma;
  delta.push_back(phi);
  Verdict v;
  v.stats.depth_bound = options.depth_bound >= 0 ? options.depth_bound : max_depth(delta) + 2;
  v.stats.model_bound = options.model_bound;
  auto finish = [&](Verdict& out) {
    out.stats.elapsed_ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
    return out;
  };

  // countermodel first: cheap at desk scale, and decisive when it exists
  OracleOptions oo;
  oo.budget = options.model_budget;
  OracleResult o = oracle_consequence(gamma, phi, options.model_bound, oo);
  if (o.found) {
    if (!is_countermodel(o.countermodel, gamma, phi)) throw InternalError(std::string(what) + ": countermodel check failed");
    v.answer = Answer::No;
    v.certificate = o.countermodel;
    return finish(v);
  }

  Clause goal = embed_clause(phi);
  Prepared prep = prepare(gamma);
  std::set<std::string> verbs = verbs_in(delta);
  ClausalSearch search(std::vector<std::string>(verbs.begin(), verbs.end()), v.stats.depth_bound, options.clause_cap, opaque);
  for (const auto& [c, s] : prep.empty) search.add_initial(c, premise_leaf(s));

  std::optional<ProofPtr> proof;
  // [y...] for some <y...> in gamma, as (member proof, [y...] proof)
  auto contradiction = [&](const ClausalSearch::Entry& e) -> std::optional<std::pair<ProofPtr, ProofPtr>> {
    for (const auto& [c, s] : prep.nonempty) {
      Clause want(true, c.literals());
      if (e.clause.subsumes(want)) return std::make_pair(premise_leaf(s), ClausalSearch::weaken(e, want));
    }
    return std::nullopt;
  };
  auto contradiction_from_empty = [&]() -> std::optional<std::pair<ProofPtr, ProofPtr>> {
    if (!search.empty_pair() || prep.nonempty.empty()) return std::nullopt;
    const auto& [c, s] = prep.nonempty.front();
    return std::make_pair(premise_leaf(s), search.from_empty_pair(Clause(true, c.literals())));
  };

  if (goal.empty_meet()) {
    if (auto t = tautology_proof(goal)) {
      proof = t;
    } else {
      search.run([&](const ClausalSearch::Entry& e) {
        if (e.clause.subsumes(goal)) {
          proof = ClausalSearch::weaken(e, goal);
          return true;
        }
        if (auto k = contradiction(e)) {
          proof = make_proof(goal.to_sentence(), "EFQ", {k->first, k->second});
          return true;
        }
        return false;
      });
      if (!proof && search.empty_pair()) proof = search.from_empty_pair(goal);
    }
  } else {
    for (const auto& [c, s] : prep.nonempty) {
      if (c == goal) proof = premise_leaf(s);
    }
    if (!proof) {
      Clause hyp(true, goal.literals());
      search.add_initial(hyp, hyp_leaf(hyp.to_sentence()));
      std::optional<std::pair<ProofPtr, ProofPtr>> k;
      search.run([&](const ClausalSearch::Entry& e) {
        k = contradiction(e);
        return k.has_value();
      });
      if (!k) k = contradiction_from_empty();
      if (k) {
        Sentence h = hyp.to_sentence();
        proof = make_proof(goal.to_sentence(), "RAA", {k->first, k->second}, {h, h});
      }
    }
  }
  v.stats.clauses = search.known();
  v.stats.truncated = search.truncated();
  if (proof) {
    if (options.verify) {
      CheckResult c = check_proof(**proof, gamma, RuleSet::ClausalRules);
      if (!c) throw InternalError(std::string(what) + ": clausal proof rejected: " + c.error);
    }
    v.answer = Answer::Yes;
    v.certificate = *proof;
    v.rules = RuleSet::ClausalRules;
    return finish(v);
  }
  v.answer = Answer::Unknown;
  v.note = "no proof with literal depth <= " + std::to_string(v.stats.depth_bound) + " (" +
           std::to_string(v.stats.clauses) + " clauses" + (v.stats.truncated ? ", clause cap reached" : "") +
           "); no countermodel with at most " + std::to_string(options.model_bound) + " elements";
  return finish(v);
}

}  // namespace

Verdict decide_clausal(const std::vector<Sentence>& gamma, const Sentence& phi,
                       const ClausalOptions& options) {
  std::vector<Sentence> delta = gamma;
  delta.push_back(phi);
  auto f = fragment_of(delta);
  if (!f || !includes(Fragment::L4HalfPlus, *f)) {
    throw FragmentError("decide_clausal accepts L4HalfPlus input only" +
                        (f ? " (got " + fragment_name(*f) + ")" : std::string()));
  }
  return decide_meets(gamma, phi, options, false, "decide_clausal");
}

Verdict decide_l5(const std::vector<Sentence>& gamma, const Sentence& phi, const ClausalOptions& options) {
  std::vector<Sentence> delta = gamma;
  delta.push_back(phi);
  auto f = fragment_of(delta);
  if (!f || !includes(Fragment::L5Half, *f)) {
    throw FragmentError("decide_l5 accepts L5Half input only" +
                        (f ? " (got " + fragment_name(*f) + ")" : std::string()));
  }
  return decide_meets(gamma, phi, options, true, "decide_l5");
}

}  // namespace relsyl
