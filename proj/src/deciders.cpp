#include "relsyl/deciders.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <unordered_map>

#include "relsyl/errors.hpp"

namespace relsyl {

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

std::vector<Sentence> with_goal(const std::vector<Sentence>& gamma, const Sentence& phi) {
  std::vector<Sentence> delta = gamma;
  delta.push_back(phi);
  return delta;
}

void require_fragment(const std::vector<Sentence>& delta, Fragment allowed, const char* what) {
  auto f = fragment_of(delta);
  if (!f || !includes(allowed, *f)) {
    throw FragmentError(std::string(what) + " accepts " + fragment_name(allowed) + " input only" +
                        (f ? " (got " + fragment_name(*f) + ")" : std::string()));
  }
}

// Model over the nouns and verbs of delta with the given element labels.
FiniteModel blank_model(const std::vector<std::string>& labels, const std::vector<Sentence>& delta,
                        const Vocabulary* vocab) {
  FiniteModel m(labels);
  for (const auto& p : nouns_in(delta)) m.declare_noun(p);
  for (const auto& r : verbs_in(delta)) m.declare_verb(r);
  if (vocab) {
    for (const auto& p : vocab->nouns) m.declare_noun(p);
    for (const auto& r : vocab->verbs) m.declare_verb(r);
  }
  return m;
}

std::string pair_label(const Term& t, const Term& u) {
  if (t == u) return "{" + t.text() + "}";
  return "{" + t.text() + ", " + u.text() + "}";
}

using Leq = std::function<bool(const Term&, const Term&)>;

// Unordered pairs of T (t <= u in term order) admitted by keep, interpreted
// through the preorder leq as in the pair models.
FiniteModel pair_model(const TermSet& terms, const std::vector<Sentence>& delta,
                       const Vocabulary* vocab, const Leq& leq,
                       const std::function<bool(const Term&, const Term&)>& keep) {
  std::vector<std::pair<Term, Term>> elems;
  std::vector<std::string> labels;
  for (auto i = terms.begin(); i != terms.end(); ++i) {
    for (auto j = i; j != terms.end(); ++j) {
      if (!keep(*i, *j)) continue;
      elems.emplace_back(*i, *j);
      labels.push_back(pair_label(*i, *j));
    }
  }
  FiniteModel m = blank_model(labels, delta, vocab);
  std::set<std::string> nouns = nouns_in(delta);
  std::set<std::string> verbs = verbs_in(delta);
  for (const auto& p : nouns) {
    Term pt = Term::noun(p);
    for (std::size_t e = 0; e < elems.size(); ++e) {
      if (leq(elems[e].first, pt) || leq(elems[e].second, pt)) m.add_to_noun(p, e);
    }
  }
  for (const auto& r : verbs) {
    for (std::size_t a = 0; a < elems.size(); ++a) {
      for (std::size_t b = 0; b < elems.size(); ++b) {
        const auto& [t, u] = elems[a];
        const auto& [v, w] = elems[b];
        if (leq(t, Term::all_of(r, v)) || leq(t, Term::all_of(r, w)) || leq(u, Term::all_of(r, v)) ||
            leq(u, Term::all_of(r, w))) {
          m.add_pair(r, a, b);
        }
      }
    }
  }
  return m;
}

void require_countermodel(const FiniteModel& m, const std::vector<Sentence>& gamma,
                          const Sentence& phi, const char* what) {
  if (!is_countermodel(m, gamma, phi)) {
    throw InternalError(std::string(what) + ": canonical model failed its model check for " +
                        phi.text());
  }
}

void require_proof(const ProofPtr& proof, const std::vector<Sentence>& gamma, RuleSet rs) {
  CheckResult c = check_proof(*proof, gamma, rs);
  if (!c) throw InternalError("extracted proof rejected: " + c.error);
}

std::vector<std::string> as_vector(const std::set<std::string>& s) { return {s.begin(), s.end()}; }

TermSet slack_terms(const TermSet& terms, const std::set<std::string>& verbs, int slack) {
  TermSet out = terms;
  for (int i = 0; i < slack; ++i) out = extend_terms(out, verbs, true);
  return out;
}

}  // namespace

std::string answer_name(Answer a) {
  switch (a) {
    case Answer::Yes: return "yes";
    case Answer::No: return "no";
    case Answer::Unknown: return "unknown";
  }
  return "unknown";
}

// ---------------------------------------------------------- case packages

std::vector<Sentence> case_package(CaseFlavor flavor, const Term& t, bool nonempty,
                                   const std::vector<Term>& terms,
                                   const std::vector<std::string>& verbs) {
  std::vector<Sentence> out;
  if (nonempty) {
    if (flavor == CaseFlavor::Existential) {
      out.push_back(Sentence::some(t, t));
    } else {
      for (const auto& r : verbs) out.push_back(Sentence::all(Term::all_of(r, t), Term::some_of(r, t)));
    }
    return out;
  }
  for (const Term& u : terms) out.push_back(Sentence::all(t, u));
  for (const auto& r : verbs) {
    for (const Term& u : terms) out.push_back(Sentence::all(u, Term::all_of(r, t)));
  }
  return out;
}

RuleSet case_rules(CaseFlavor flavor) {
  return flavor == CaseFlavor::Existential ? RuleSet::L35Rules : RuleSet::L3Rules;
}

namespace {

std::vector<Sentence> branch_package(const CaseCertificate& cert,
                                     const std::vector<std::pair<Term, bool>>& assignment) {
  std::vector<Sentence> out;
  for (const auto& [t, v] : assignment) {
    auto pkg = case_package(cert.flavor, t, v, cert.terms, cert.verbs);
    out.insert(out.end(), pkg.begin(), pkg.end());
  }
  return out;
}

bool covers(const CaseCertificate& cert, const std::vector<const CaseBranch*>& bs, std::size_t depth) {
  if (bs.empty()) return false;
  for (const CaseBranch* b : bs) {
    if (b->assignment.size() == depth) return true;
  }
  if (depth == cert.terms.size()) return false;
  std::vector<const CaseBranch*> yes;
  std::vector<const CaseBranch*> no;
  for (const CaseBranch* b : bs) (b->assignment[depth].second ? yes : no).push_back(b);
  return covers(cert, yes, depth + 1) && covers(cert, no, depth + 1);
}

}  // namespace

CheckResult check_case_certificate(const CaseCertificate& cert, const std::vector<Sentence>& gamma,
                                   const Sentence& phi) {
  auto fail = [](std::string msg) { return CheckResult{false, std::move(msg)}; };
  std::vector<const CaseBranch*> all;
  for (std::size_t i = 0; i < cert.branches.size(); ++i) {
    const CaseBranch& b = cert.branches[i];
    std::string where = "branch " + std::to_string(i) + ": ";
    if (b.assignment.size() > cert.terms.size()) return fail(where + "assignment longer than term list");
    for (std::size_t k = 0; k < b.assignment.size(); ++k) {
      if (!(b.assignment[k].first == cert.terms[k])) {
        return fail(where + "assignment does not follow the term order");
      }
    }
    std::vector<Sentence> want = branch_package(cert, b.assignment);
    SentenceSet want_set(want.begin(), want.end());
    SentenceSet got_set(b.branch_theory.begin(), b.branch_theory.end());
    if (want_set != got_set) return fail(where + "branch theory differs from the case package");
    if (!b.proof) return fail(where + "missing proof");
    if (!(b.proof->conclusion == phi)) return fail(where + "proof concludes " + b.proof->conclusion.text());
    std::vector<Sentence> ctx = gamma;
    ctx.insert(ctx.end(), b.branch_theory.begin(), b.branch_theory.end());
    CheckResult c = check_proof(*b.proof, ctx, case_rules(cert.flavor));
    if (!c) return fail(where + c.error);
    all.push_back(&b);
  }
  if (!covers(cert, all, 0)) return fail("branches do not cover every assignment");
  return {};
}

// ------------------------------------------------------ proof assembly

namespace {

class CasesAssembler {
 public:
  CasesAssembler(const CaseCertificate& cert, const std::vector<Sentence>& gamma, std::size_t cap)
      : cert_(cert), gamma_(gamma.begin(), gamma.end()), cap_(cap) {}

  ProofPtr build(std::vector<bool>& prefix) {
    for (const CaseBranch& b : cert_.branches) {
      if (b.assignment.size() != prefix.size()) continue;
      bool same = true;
      for (std::size_t k = 0; same && k < prefix.size(); ++k) same = b.assignment[k].second == prefix[k];
      if (same) return as_hypotheses(b.proof);
    }
    if (prefix.size() >= cert_.terms.size()) throw InternalError("certificate does not cover a branch");
    const Term& t = cert_.terms[prefix.size()];
    prefix.push_back(true);
    ProofPtr yes = build(prefix);
    prefix.back() = false;
    ProofPtr no = build(prefix);
    prefix.pop_back();
    auto n = case_package(cert_.flavor, t, true, cert_.terms, cert_.verbs);
    auto e = case_package(cert_.flavor, t, false, cert_.terms, cert_.verbs);
    if (n.empty()) throw FragmentError("case split needs at least one verb");
    const Sentence& phi = yes->conclusion;
    // q[j]: phi with e_0..e_{j-1} withdrawn further up.
    std::vector<ProofPtr> q(e.size() + 1);
    q[e.size()] = no;
    for (std::size_t j = e.size(); j-- > 0;) {
      std::string rule = split_rule(j);
      ProofPtr r = yes;
      for (std::size_t i = n.size(); i-- > 0;) {
        r = node(make_proof(phi, rule, {r, q[j + 1]}, {n[i], e[j]}));
      }
      q[j] = r;
    }
    return q[0];
  }

 private:
  std::string split_rule(std::size_t j) const {
    bool all_from = j < cert_.terms.size();  // all t u rather than all u (r all t)
    if (cert_.flavor == CaseFlavor::Existential) return all_from ? "CASES1" : "CASES";
    return all_from ? "CASES2" : "CASES3";
  }

  ProofPtr node(ProofPtr p) {
    if (++count_ > cap_) throw BudgetError("assembled case proof exceeds node cap");
    return p;
  }

  ProofPtr as_hypotheses(const ProofPtr& p) {
    auto it = memo_.find(p.get());
    if (it != memo_.end()) return it->second;
    ProofPtr out;
    if (p->rule == "PREMISE" && !gamma_.count(p->conclusion)) {
      out = hyp_leaf(p->conclusion);
    } else if (p->children.empty()) {
      out = p;
    } else {
      std::vector<ProofPtr> kids;
      for (const auto& c : p->children) kids.push_back(as_hypotheses(c));
      out = make_proof(p->conclusion, p->rule, std::move(kids), p->discharged, p->chains);
    }
    node(out);
    memo_.emplace(p.get(), out);
    return out;
  }

  const CaseCertificate& cert_;
  SentenceSet gamma_;
  std::size_t cap_;
  std::size_t count_ = 0;
  std::unordered_map<const ProofNode*, ProofPtr> memo_;
};

}  // namespace

ProofPtr assemble_cases_proof(const CaseCertificate& cert, const std::vector<Sentence>& gamma,
                              std::size_t max_nodes) {
  CasesAssembler a(cert, gamma, max_nodes);
  std::vector<bool> prefix;
  return a.build(prefix);
}

// ------------------------------------------------------------ pair models

SaturationResult base_closure(const std::vector<Sentence>& gamma, const TermSet& terms) {
  std::set<std::string> verbs = verbs_in(gamma);
  for (const Term& t : terms) {
    auto v = verbs_in(t);
    verbs.insert(v.begin(), v.end());
  }
  SentenceUniverse u("base closure");
  u.add_family({SentenceKind::All, {terms, extend_terms(terms, verbs)}, std::nullopt});
  u.add_family({SentenceKind::Some, {terms, terms}, std::nullopt});
  return saturate(gamma, RuleSet::Base0, u);
}

namespace {

std::vector<Sentence> closure_delta(const SaturationResult& closure, const TermSet& terms) {
  std::vector<Sentence> delta = closure.derived();
  for (const Term& t : terms) delta.push_back(Sentence::all(t, t));
  return delta;
}

}  // namespace

FiniteModel build_pair_model(const SaturationResult& closure, const TermSet& terms,
                             const Vocabulary& vocab) {
  Leq leq = [&](const Term& a, const Term& b) { return closure.contains(Sentence::all(a, b)); };
  return pair_model(terms, closure_delta(closure, terms), &vocab, leq,
                    [](const Term&, const Term&) { return true; });
}

FiniteModel build_pair_model_restricted(const SaturationResult& closure, const TermSet& terms,
                                        const Vocabulary& vocab) {
  Leq leq = [&](const Term& a, const Term& b) { return closure.contains(Sentence::all(a, b)); };
  return pair_model(terms, closure_delta(closure, terms), &vocab, leq, [&](const Term& t, const Term& u) {
    return closure.contains(Sentence::some(t, u)) || closure.contains(Sentence::some(u, t));
  });
}

FiniteModel build_pair_model(const std::vector<Sentence>& gamma, const TermSet& terms,
                             const Vocabulary& vocab) {
  return build_pair_model(base_closure(gamma, terms), terms, vocab);
}

FiniteModel build_pair_model_restricted(const std::vector<Sentence>& gamma, const TermSet& terms,
                                        const Vocabulary& vocab) {
  return build_pair_model_restricted(base_closure(gamma, terms), terms, vocab);
}

// -------------------------------------------------------------------- L1

Verdict decide_l1(const std::vector<Sentence>& gamma, const Sentence& phi, const DecideOptions& options) {
  auto start = Clock::now();
  std::vector<Sentence> delta = with_goal(gamma, phi);
  require_fragment(delta, Fragment::L1, "decide_l1");
  SentenceUniverse universe = g1(delta);
  SaturationResult sat = saturate(gamma, RuleSet::L1Core, universe, {phi});
  Verdict v;
  v.stats.universe_size = sat.universe_size();
  v.stats.derived = sat.size();
  v.stats.rounds = sat.rounds();
  if (sat.contains(phi)) {
    ProofPtr proof = sat.extract_proof(phi);
    if (options.verify) require_proof(proof, gamma, RuleSet::L1Core);
    v.answer = Answer::Yes;
    v.certificate = proof;
    v.rules = RuleSet::L1Core;
  } else {
    // domain T; t in p iff t <= p; t r u iff t <= (r all u)
    TermSet terms = term_closure(delta);
    std::vector<Term> elems(terms.begin(), terms.end());
    std::vector<std::string> labels;
    for (const Term& t : elems) labels.push_back(t.text());
    FiniteModel m = blank_model(labels, delta, nullptr);
    for (const auto& p : nouns_in(delta)) {
      for (std::size_t i = 0; i < elems.size(); ++i) {
        if (sat.contains(Sentence::all(elems[i], Term::noun(p)))) m.add_to_noun(p, i);
      }
    }
    for (const auto& r : verbs_in(delta)) {
      for (std::size_t i = 0; i < elems.size(); ++i) {
        for (std::size_t j = 0; j < elems.size(); ++j) {
          if (sat.contains(Sentence::all(elems[i], Term::all_of(r, elems[j])))) m.add_pair(r, i, j);
        }
      }
    }
    require_countermodel(m, gamma, phi, "decide_l1");
    v.answer = Answer::No;
    v.certificate = std::move(m);
  }
  v.stats.elapsed_ms = elapsed_ms(start);
  return v;
}

// ------------------------------------------------------------------- L2+

Verdict decide_l2plus(const std::vector<Sentence>& gamma, const Sentence& phi,
                      const DecideOptions& options) {
  auto start = Clock::now();
  std::vector<Sentence> delta = with_goal(gamma, phi);
  require_fragment(delta, Fragment::L2Plus, "decide_l2plus");
  SentenceUniverse universe = g2plus(delta);
  SaturationResult sat = saturate(gamma, RuleSet::L2PlusRules, universe, {phi});
  Verdict v;
  v.stats.universe_size = sat.universe_size();
  v.stats.derived = sat.size();
  v.stats.rounds = sat.rounds();
  if (sat.contains(phi)) {
    ProofPtr proof = sat.extract_proof(phi);
    if (options.verify) require_proof(proof, gamma, RuleSet::L2PlusRules);
    v.answer = Answer::Yes;
    v.certificate = proof;
    v.rules = RuleSet::L2PlusRules;
    v.stats.elapsed_ms = elapsed_ms(start);
    return v;
  }
  TermSet terms = term_closure(delta);
  FiniteModel m;
  if (phi.kind() == SentenceKind::All) {
    Leq leq = [&](const Term& a, const Term& b) { return sat.contains(Sentence::all(a, b)); };
    m = pair_model(terms, delta, nullptr, leq, [](const Term&, const Term&) { return true; });
  } else {
    // pairs kept away from x and y, with <= read modulo "or some x y"
    const Term& x = phi.kind() == SentenceKind::Some ? phi.term(0) : phi.term(2);
    const Term& y = phi.kind() == SentenceKind::Some ? phi.term(1) : phi.term(3);
    Leq leq = [&](const Term& a, const Term& b) {
      return sat.contains(Sentence::all_or_some(a, b, x, y));
    };
    auto keep = [&](const Term& t, const Term& u) {
      for (const Term& z : {x, y}) {
        if (!leq(t, z) && !leq(u, z)) return true;
      }
      return false;
    };
    m = pair_model(terms, delta, nullptr, leq, keep);
  }
  require_countermodel(m, gamma, phi, "decide_l2plus");
  v.answer = Answer::No;
  v.certificate = std::move(m);
  v.stats.elapsed_ms = elapsed_ms(start);
  return v;
}

// ---------------------------------------------------------- L3 and L3.5

namespace {

class BranchSearch {
 public:
  BranchSearch(CaseFlavor flavor, const std::vector<Sentence>& gamma, const Sentence& phi,
               const DecideOptions& options)
      : flavor_(flavor), gamma_(gamma), phi_(phi), options_(options) {
    std::vector<Sentence> delta = with_goal(gamma, phi);
    TermSet t = term_closure(delta);
    std::set<std::string> verbs = verbs_in(delta);
    cert_.flavor = flavor;
    cert_.terms.assign(t.begin(), t.end());
    cert_.verbs = as_vector(verbs);
    universe_ = square_universe(slack_terms(t, verbs, options.depth_slack),
                                flavor == CaseFlavor::Existential);
  }

  // True when every branch derives phi.
  bool run(VerdictStats& stats) {
    SaturationResult root = saturate(gamma_, case_rules(flavor_), universe_, {phi_});
    stats.universe_size = root.universe_size();
    stats.derived = root.size();
    std::vector<std::pair<Term, bool>> prefix;
    bool closed = dfs(root, prefix, stats);
    stats.branches = nodes_;
    return closed;
  }

  const CaseCertificate& certificate() const { return cert_; }
  const SaturationResult& failing() const { return *failing_; }
  const std::vector<Term>& terms() const { return cert_.terms; }
  const std::vector<std::string>& verbs() const { return cert_.verbs; }

 private:
  bool dfs(const SaturationResult& sat, std::vector<std::pair<Term, bool>>& prefix, VerdictStats& stats) {
    if (++nodes_ > options_.branch_cap) throw BudgetError("branch cap exceeded");
    stats.rounds = std::max(stats.rounds, sat.rounds());
    if (sat.contains(phi_)) {
      CaseBranch b;
      b.assignment = prefix;
      b.branch_theory = branch_package(cert_, prefix);
      b.proof = sat.extract_proof(phi_);
      cert_.branches.push_back(std::move(b));
      return true;
    }
    if (prefix.size() == cert_.terms.size()) {
      failing_ = sat;
      return false;
    }
    const Term& t = cert_.terms[prefix.size()];
    for (bool nonempty : {true, false}) {
      auto pkg = case_package(flavor_, t, nonempty, cert_.terms, cert_.verbs);
      SaturationResult next = sat.extend(pkg, {phi_});
      prefix.emplace_back(t, nonempty);
      bool closed = dfs(next, prefix, stats);
      prefix.pop_back();
      if (!closed) return false;
    }
    return true;
  }

  CaseFlavor flavor_;
  const std::vector<Sentence>& gamma_;
  Sentence phi_;
  DecideOptions options_;
  SentenceUniverse universe_;
  CaseCertificate cert_;
  std::optional<SaturationResult> failing_;
  std::size_t nodes_ = 0;
};

// Elements (x, y, Q) with some x y derived.
FiniteModel triple_model(const SaturationResult& sat, const std::vector<Term>& terms,
                         const std::vector<Sentence>& delta) {
  struct Elem {
    Term x, y;
    bool exists;
  };
  std::vector<Elem> elems;
  std::vector<std::string> labels;
  for (const Term& x : terms) {
    for (const Term& y : terms) {
      if (!sat.contains(Sentence::some(x, y))) continue;
      for (bool q : {false, true}) {
        elems.push_back({x, y, q});
        labels.push_back("(" + x.text() + ", " + y.text() + (q ? ", some)" : ", all)"));
      }
    }
  }
  auto leq = [&](const Term& a, const Term& b) { return sat.contains(Sentence::all(a, b)); };
  FiniteModel m = blank_model(labels, delta, nullptr);
  for (const auto& p : nouns_in(delta)) {
    Term pt = Term::noun(p);
    for (std::size_t e = 0; e < elems.size(); ++e) {
      if (leq(elems[e].x, pt) || leq(elems[e].y, pt)) m.add_to_noun(p, e);
    }
  }
  for (const auto& r : verbs_in(delta)) {
    for (std::size_t a = 0; a < elems.size(); ++a) {
      for (std::size_t b = 0; b < elems.size(); ++b) {
        const Elem& e1 = elems[a];
        const Elem& e2 = elems[b];
        bool rel = false;
        for (const Term& z1 : {e1.x, e1.y}) {
          for (const Term& z2 : {e2.x, e2.y}) {
            if (leq(z1, Term::all_of(r, z2))) rel = true;
            if (e2.exists && e2.x == e2.y && leq(z1, Term::some_of(r, z2))) rel = true;
          }
        }
        if (rel) m.add_pair(r, a, b);
      }
    }
  }
  return m;
}

bool effectively_nonempty(const SaturationResult& sat, const Term& x,
                          const std::vector<std::string>& verbs) {
  for (const auto& r : verbs) {
    if (!sat.contains(Sentence::all(Term::all_of(r, x), Term::some_of(r, x)))) return false;
  }
  return true;
}

// Elements (x, Q) with x effectively nonempty.
FiniteModel tagged_model(const SaturationResult& sat, const std::vector<Term>& terms,
                         const std::vector<std::string>& verbs, const std::vector<Sentence>& delta) {
  struct Elem {
    Term x;
    bool exists;
  };
  std::vector<Elem> elems;
  std::vector<std::string> labels;
  for (const Term& x : terms) {
    if (!effectively_nonempty(sat, x, verbs)) continue;
    for (bool q : {false, true}) {
      elems.push_back({x, q});
      labels.push_back("(" + x.text() + (q ? ", some)" : ", all)"));
    }
  }
  auto leq = [&](const Term& a, const Term& b) { return sat.contains(Sentence::all(a, b)); };
  FiniteModel m = blank_model(labels, delta, nullptr);
  for (const auto& p : nouns_in(delta)) {
    for (std::size_t e = 0; e < elems.size(); ++e) {
      if (leq(elems[e].x, Term::noun(p))) m.add_to_noun(p, e);
    }
  }
  for (const auto& r : verbs) {
    for (std::size_t a = 0; a < elems.size(); ++a) {
      for (std::size_t b = 0; b < elems.size(); ++b) {
        const Term& x = elems[a].x;
        const Term& y = elems[b].x;
        if (leq(x, Term::all_of(r, y)) || (elems[b].exists && leq(x, Term::some_of(r, y)))) {
          m.add_pair(r, a, b);
        }
      }
    }
  }
  return m;
}

Verdict decide_by_cases(CaseFlavor flavor, const std::vector<Sentence>& gamma, const Sentence& phi,
                        const DecideOptions& options, const char* what) {
  auto start = Clock::now();
  std::vector<Sentence> delta = with_goal(gamma, phi);
  BranchSearch search(flavor, gamma, phi, options);
  Verdict v;
  if (search.run(v.stats)) {
    const CaseCertificate& cert = search.certificate();
    if (options.verify) {
      CheckResult c = check_case_certificate(cert, gamma, phi);
      if (!c) throw InternalError(std::string(what) + ": case certificate rejected: " + c.error);
    }
    v.answer = Answer::Yes;
    v.certificate = cert;
    v.rules = case_rules(flavor);
  } else {
    FiniteModel m = flavor == CaseFlavor::Existential
                        ? triple_model(search.failing(), search.terms(), delta)
                        : tagged_model(search.failing(), search.terms(), search.verbs(), delta);
    require_countermodel(m, gamma, phi, what);
    v.answer = Answer::No;
    v.certificate = std::move(m);
  }
  v.stats.elapsed_ms = elapsed_ms(start);
  return v;
}

}  // namespace

Verdict decide_l35(const std::vector<Sentence>& gamma, const Sentence& phi,
                   const DecideOptions& options) {
  std::vector<Sentence> delta = with_goal(gamma, phi);
  require_fragment(delta, Fragment::L3Half, "decide_l35");
  if (phi.kind() != SentenceKind::All && phi.kind() != SentenceKind::Some) {
    throw FragmentError("decide_l35 expects an all or some goal");
  }
  return decide_by_cases(CaseFlavor::Existential, gamma, phi, options, "decide_l35");
}

Verdict decide_l3(const std::vector<Sentence>& gamma, const Sentence& phi, const DecideOptions& options) {
  std::vector<Sentence> delta = with_goal(gamma, phi);
  require_fragment(delta, Fragment::L3, "decide_l3");
  if (phi.kind() != SentenceKind::All) throw FragmentError("decide_l3 expects an all goal");
  // Without verbs there are no (r some x) terms and L1 reasoning suffices.
  if (verbs_in(delta).empty()) {
    Verdict v = decide_l1(gamma, phi, options);
    v.note = "no verbs: decided by the L1 rules";
    return v;
  }
  return decide_by_cases(CaseFlavor::Effective, gamma, phi, options, "decide_l3");
}

// ----------------------------------------------- determines existentials

DeterminesResult determines_existentials(const std::vector<Sentence>& gamma, const TermSet& terms,
                                         const std::set<std::string>& verbs,
                                         ExistentialFlavor flavor) {
  TermSet wide = extend_terms(terms, verbs, true);
  for (const auto& s : gamma) {
    for (const Term& t : s.terms()) {
      TermSet sub = subterms(t);
      wide.insert(sub.begin(), sub.end());
    }
  }
  DeterminesResult out;
  if (flavor == ExistentialFlavor::L2) {
    SaturationResult sat = saturate(gamma, RuleSet::Base0, square_universe(wide, true));
    for (const Term& x : terms) {
      if (sat.contains(Sentence::some(x, x))) continue;
      for (const Term& y : terms) {
        for (const auto& r : verbs) {
          if (!sat.contains(Sentence::all(y, Term::all_of(r, x)))) {
            out.holds = false;
            out.witness = ExistentialWitness{x, y, r};
            return out;
          }
        }
      }
    }
    return out;
  }
  SaturationResult sat = saturate(gamma, RuleSet::L3Rules, square_universe(wide, false));
  std::vector<std::string> vs(verbs.begin(), verbs.end());
  for (const Term& x : terms) {
    if (effectively_nonempty(sat, x, vs)) continue;
    for (const Term& y : terms) {
      if (!sat.contains(Sentence::all(x, y))) {
        out.holds = false;
        out.witness = ExistentialWitness{x, y, ""};
        return out;
      }
      for (const auto& r : vs) {
        if (!sat.contains(Sentence::all(y, Term::all_of(r, x)))) {
          out.holds = false;
          out.witness = ExistentialWitness{x, y, r};
          return out;
        }
      }
    }
  }
  return out;
}

}  // namespace relsyl
