#include "relsyl/proofs.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <unordered_map>

#include "relsyl/clause.hpp"

namespace relsyl {

// ---------------------------------------------------------- rule sets

namespace {

struct RuleSetInfo {
  RuleSet rs;
  const char* name;
  std::vector<std::string> rules;
};

const std::vector<RuleSetInfo>& rule_set_table() {
  static const std::vector<RuleSetInfo> table = [] {
    std::vector<std::string> l1{"AXIOM", "BARBARA", "ANTI"};
    std::vector<std::string> base0 = l1;
    base0.insert(base0.end(), {"SOME1", "SOME2", "DARII"});
    auto plus = [](std::vector<std::string> v, std::initializer_list<const char*> extra) {
      for (const char* e : extra) v.emplace_back(e);
      return v;
    };
    return std::vector<RuleSetInfo>{
        {RuleSet::L1Core, "L1Core", l1},
        {RuleSet::Base0, "Base0", base0},
        {RuleSet::L2Cases, "L2Cases", plus(base0, {"CASES"})},
        {RuleSet::L2Chains, "L2Chains", plus(base0, {"CHAINS"})},
        {RuleSet::L2PlusRules, "L2PlusRules",
         plus(base0, {"EMPTY1", "EMPTY2", "LWEAK", "RWEAK", "NEWSOME1", "NEWSOME2", "NEWBARBARA",
                      "NEWANTI", "NEWDARII", "NEWNEWDARII"})},
        {RuleSet::L35Rules, "L35Rules", plus(base0, {"R1", "R2", "R3", "CASES", "CASES1"})},
        {RuleSet::L3Rules, "L3Rules", plus(l1, {"R1", "MIX", "CASES3", "CASES2"})},
        {RuleSet::ClausalRules, "ClausalRules",
         {"CLAXIOM", "RES", "REL", "STRUCTURAL", "EFQ", "RAA"}},
    };
  }();
  return table;
}

const RuleSetInfo& rule_set_info(RuleSet rs) {
  for (const auto& i : rule_set_table()) {
    if (i.rs == rs) return i;
  }
  throw std::logic_error("unknown rule set");
}

}  // namespace

std::string rule_set_name(RuleSet rs) { return rule_set_info(rs).name; }

std::optional<RuleSet> parse_rule_set(std::string_view name) {
  for (const auto& i : rule_set_table()) {
    if (name == i.name) return i.rs;
  }
  return std::nullopt;
}

std::vector<RuleSet> all_rule_sets() {
  std::vector<RuleSet> out;
  for (const auto& i : rule_set_table()) out.push_back(i.rs);
  return out;
}

std::vector<std::string> rule_names(RuleSet rs) { return rule_set_info(rs).rules; }

bool is_discharge_rule(const std::string& name) {
  return name == "CASES" || name == "CASES1" || name == "CASES2" || name == "CASES3" ||
         name == "RAA";
}

// ----------------------------------------------------------- templates

namespace {

struct PatternBuilder {
  std::map<std::string, int> term_vars;
  std::map<std::string, int> verb_vars;
  std::vector<std::string> term_names;
  std::vector<std::string> verb_names;

  int term_var(const std::string& n) {
    auto [it, fresh] = term_vars.try_emplace(n, static_cast<int>(term_names.size()));
    if (fresh) term_names.push_back(n);
    return it->second;
  }
  int verb_var(const std::string& n) {
    auto [it, fresh] = verb_vars.try_emplace(n, static_cast<int>(verb_names.size()));
    if (fresh) verb_names.push_back(n);
    return it->second;
  }

  TermPatternPtr term(const Term& t) {
    auto p = std::make_shared<TermPattern>();
    switch (t.kind()) {
      case TermKind::Noun:
        p->kind = TermPattern::Kind::Var;
        p->var = term_var(t.name());
        break;
      case TermKind::AllOf:
      case TermKind::SomeOf:
        p->kind = t.kind() == TermKind::AllOf ? TermPattern::Kind::AllOf : TermPattern::Kind::SomeOf;
        p->var = verb_var(t.name());
        p->body = term(t.body());
        break;
      case TermKind::Not:
        p->kind = TermPattern::Kind::Not;
        p->body = term(t.body());
        break;
    }
    return p;
  }

  SentencePattern sentence(const std::string& text) {
    Vocabulary vocab;
    ParseOptions opts;
    opts.declare_unknown = true;
    Sentence s = parse_sentence(text, &vocab, opts);
    SentencePattern p;
    p.kind = s.kind();
    for (const Term& t : s.terms()) p.args.push_back(term(t));
    return p;
  }
};

const std::vector<RuleTemplate>& all_templates() {
  static const std::vector<RuleTemplate> rules = [] {
    std::vector<RuleTemplate> r;
    auto add = [&](const char* name, std::vector<std::string> premises, const char* conclusion) {
      r.push_back(RuleTemplate::make(name, premises, conclusion));
    };
    add("AXIOM", {}, "all x x");
    add("BARBARA", {"all x y", "all y z"}, "all x z");
    add("ANTI", {"all x y"}, "all (r all y) (r all x)");
    add("SOME1", {"some x y"}, "some x x");
    add("SOME2", {"some x y"}, "some y x");
    add("DARII", {"some x y", "all y z"}, "some x z");
    add("EMPTY1", {}, "all a b or some a a");
    add("EMPTY2", {}, "all b (r all a) or some a a");
    add("LWEAK", {"all a b"}, "all a b or some x y");
    add("RWEAK", {"some x y"}, "all a b or some x y");
    add("NEWSOME1", {"all a b or some x y"}, "all a b or some x x");
    add("NEWSOME2", {"all a b or some x y"}, "all a b or some y x");
    add("NEWBARBARA", {"all a b or some x y", "all b c or some x y"}, "all a c or some x y");
    add("NEWANTI", {"all a b or some x y"}, "all (r all b) (r all a) or some x y");
    add("NEWDARII", {"some t u", "all t x or some x y", "all u y or some x y"}, "some x y");
    add("NEWNEWDARII", {"all a b or some t u", "all t x or some x y", "all u y or some x y"},
        "all a b or some x y");
    add("R1", {"all x y"}, "all (r some x) (r some y)");
    add("R2", {"some x y"}, "all (r all x) (r some y)");
    add("R3", {"some x (r some y)"}, "some y y");
    add("MIX", {"all (r all y) (r some y)", "all y (r some x)"}, "all (s all x) (s some x)");
    std::sort(r.begin(), r.end(),
              [](const RuleTemplate& a, const RuleTemplate& b) { return a.name < b.name; });
    return r;
  }();
  return rules;
}

}  // namespace

RuleTemplate RuleTemplate::make(std::string name, const std::vector<std::string>& premises,
                                const std::string& conclusion) {
  PatternBuilder b;
  RuleTemplate r;
  r.name = std::move(name);
  for (const auto& p : premises) r.premises.push_back(b.sentence(p));
  r.conclusion = b.sentence(conclusion);
  r.term_vars = b.term_names;
  r.verb_vars = b.verb_names;
  return r;
}

const RuleTemplate& rule_template(const std::string& name) {
  for (const auto& r : all_templates()) {
    if (r.name == name) return r;
  }
  throw std::invalid_argument("no template rule named " + name);
}

const std::vector<RuleTemplate>& rule_templates(RuleSet rs) {
  static const std::map<RuleSet, std::vector<RuleTemplate>> by_set = [] {
    std::map<RuleSet, std::vector<RuleTemplate>> m;
    for (const auto& info : rule_set_table()) {
      auto& v = m[info.rs];
      for (const auto& r : all_templates()) {
        if (std::find(info.rules.begin(), info.rules.end(), r.name) != info.rules.end()) {
          v.push_back(r);
        }
      }
    }
    return m;
  }();
  return by_set.at(rs);
}

std::optional<Term> instantiate(const TermPatternPtr& p, const Substitution& s) {
  switch (p->kind) {
    case TermPattern::Kind::Var:
      if (p->var >= static_cast<int>(s.terms.size()) || s.terms[p->var].is_null()) {
        return std::nullopt;
      }
      return s.terms[p->var];
    case TermPattern::Kind::Not: {
      auto b = instantiate(p->body, s);
      if (!b) return std::nullopt;
      return Term::negate(*b);
    }
    case TermPattern::Kind::AllOf:
    case TermPattern::Kind::SomeOf: {
      if (p->var >= static_cast<int>(s.verbs.size()) || s.verbs[p->var].empty()) {
        return std::nullopt;
      }
      auto b = instantiate(p->body, s);
      if (!b) return std::nullopt;
      return p->kind == TermPattern::Kind::AllOf ? Term::all_of(s.verbs[p->var], *b)
                                                 : Term::some_of(s.verbs[p->var], *b);
    }
  }
  return std::nullopt;
}

std::optional<Sentence> instantiate(const SentencePattern& p, const Substitution& s) {
  std::vector<Term> terms;
  for (const auto& a : p.args) {
    auto t = instantiate(a, s);
    if (!t) return std::nullopt;
    terms.push_back(*t);
  }
  return Sentence::make(p.kind, std::move(terms));
}

bool match_pattern(const TermPatternPtr& p, const Term& t, Substitution& s) {
  switch (p->kind) {
    case TermPattern::Kind::Var: {
      if (p->var >= static_cast<int>(s.terms.size())) s.terms.resize(p->var + 1);
      Term& slot = s.terms[p->var];
      if (slot.is_null()) {
        slot = t;
        return true;
      }
      return slot == t;
    }
    case TermPattern::Kind::Not:
      return t.kind() == TermKind::Not && match_pattern(p->body, t.body(), s);
    case TermPattern::Kind::AllOf:
    case TermPattern::Kind::SomeOf: {
      TermKind want = p->kind == TermPattern::Kind::AllOf ? TermKind::AllOf : TermKind::SomeOf;
      if (t.kind() != want) return false;
      if (p->var >= static_cast<int>(s.verbs.size())) s.verbs.resize(p->var + 1);
      std::string& slot = s.verbs[p->var];
      if (slot.empty()) {
        slot = t.name();
      } else if (slot != t.name()) {
        return false;
      }
      return match_pattern(p->body, t.body(), s);
    }
  }
  return false;
}

bool match_pattern(const SentencePattern& p, const Sentence& sentence, Substitution& s) {
  if (p.kind != sentence.kind() || p.args.size() != sentence.terms().size()) return false;
  for (std::size_t i = 0; i < p.args.size(); ++i) {
    if (!match_pattern(p.args[i], sentence.term(i), s)) return false;
  }
  return true;
}

std::optional<Substitution> match_instance(const RuleTemplate& rule,
                                           const std::vector<Sentence>& premises,
                                           const Sentence& conclusion) {
  if (premises.size() != rule.premises.size()) return std::nullopt;
  std::vector<std::size_t> order(premises.size());
  std::iota(order.begin(), order.end(), 0);
  do {
    Substitution s;
    bool ok = true;
    for (std::size_t i = 0; ok && i < order.size(); ++i) {
      ok = match_pattern(rule.premises[i], premises[order[i]], s);
    }
    if (ok && match_pattern(rule.conclusion, conclusion, s)) return s;
  } while (std::next_permutation(order.begin(), order.end()));
  return std::nullopt;
}

// --------------------------------------------------------------- proofs

ProofPtr make_proof(Sentence conclusion, std::string rule, std::vector<ProofPtr> children,
                    std::vector<Sentence> discharged, std::vector<std::vector<Sentence>> chains) {
  auto p = std::make_shared<ProofNode>();
  p->conclusion = std::move(conclusion);
  p->rule = std::move(rule);
  p->children = std::move(children);
  p->discharged = std::move(discharged);
  p->chains = std::move(chains);
  return p;
}

ProofPtr premise_leaf(const Sentence& s) { return make_proof(s, "PREMISE"); }
ProofPtr hyp_leaf(const Sentence& s) { return make_proof(s, "HYP"); }

std::size_t proof_size(const ProofNode& p) {
  std::size_t n = 1;
  for (const auto& c : p.children) n += proof_size(*c);
  return n;
}

int proof_depth(const ProofNode& p) {
  int d = 0;
  for (const auto& c : p.children) d = std::max(d, proof_depth(*c));
  return d + 1;
}

// ------------------------------------------------------------- checker

namespace {

bool is_some_xx(const Sentence& s, const Term& x) {
  return s.kind() == SentenceKind::Some && s.lhs() == x && s.rhs() == x;
}

// all (r all x) (r some x)
bool is_effectively_nonempty(const Sentence& s, const Term& x) {
  if (s.kind() != SentenceKind::All) return false;
  const Term& l = s.lhs();
  const Term& r = s.rhs();
  return l.kind() == TermKind::AllOf && r.kind() == TermKind::SomeOf && l.name() == r.name() &&
         l.body() == x && r.body() == x;
}

// all y (s all x)
bool is_all_into_all_of(const Sentence& s, const Term& x) {
  return s.kind() == SentenceKind::All && s.rhs().kind() == TermKind::AllOf && s.rhs().body() == x;
}

bool is_all_from(const Sentence& s, const Term& x) {
  return s.kind() == SentenceKind::All && s.lhs() == x;
}

std::optional<Term> cases_term(const std::string& rule, const Sentence& left) {
  if (rule == "CASES" || rule == "CASES1") {
    if (left.kind() == SentenceKind::Some && left.lhs() == left.rhs()) return left.lhs();
    return std::nullopt;
  }
  if (left.kind() == SentenceKind::All && left.lhs().kind() == TermKind::AllOf) {
    Term x = left.lhs().body();
    if (is_effectively_nonempty(left, x)) return x;
  }
  return std::nullopt;
}

bool cases_shape(const std::string& rule, const Sentence& left, const Sentence& right) {
  auto x = cases_term(rule, left);
  if (!x) return false;
  if (rule == "CASES") return is_some_xx(left, *x) && is_all_into_all_of(right, *x);
  if (rule == "CASES1") return is_some_xx(left, *x) && is_all_from(right, *x);
  if (rule == "CASES3") return is_all_into_all_of(right, *x);
  if (rule == "CASES2") return is_all_from(right, *x);
  return false;
}

std::optional<Clause> as_clause(const Sentence& s, bool empty_meet) {
  auto c = Clause::from_sentence(s);
  if (!c || c->empty_meet() != empty_meet) return std::nullopt;
  return c;
}

std::vector<Term> minus(const std::vector<Term>& lits, const Term& drop) {
  std::vector<Term> out;
  for (const Term& t : lits) {
    if (!(t == drop)) out.push_back(t);
  }
  return out;
}

bool check_res(const Clause& a, const Clause& b, const Clause& concl) {
  for (const Term& x : a.literals()) {
    Term nx = complement_literal(x);
    if (!b.contains(nx)) continue;
    std::vector<Term> ra = minus(a.literals(), x);
    std::vector<Term> rb = minus(b.literals(), nx);
    if (ra.empty() || rb.empty()) continue;
    ra.insert(ra.end(), rb.begin(), rb.end());
    if (Clause(true, ra) == concl) return true;
  }
  return false;
}

bool check_rel(const Clause& premise, const Clause& concl) {
  for (const Term& last : concl.literals()) {
    if (last.kind() != TermKind::Not || last.body().kind() != TermKind::AllOf) continue;
    const std::string& r = last.body().name();
    std::vector<Term> want{last.body().body()};
    bool ok = true;
    for (const Term& other : concl.literals()) {
      if (other == last) continue;
      if (other.kind() != TermKind::AllOf || other.name() != r) {
        ok = false;
        break;
      }
      want.push_back(Term::negate(other.body()));
    }
    if (ok && Clause(true, want) == premise) return true;
  }
  return false;
}

class Checker {
 public:
  Checker(const std::vector<Sentence>& gamma, RuleSet rs) : rs_(rs) {
    for (const Sentence& s : gamma) {
      premises_.insert(s);
      if (rs == RuleSet::ClausalRules) {
        try {
          clauses_.push_back(embed_clause(s));
        } catch (const std::exception&) {
        }
      }
    }
    for (const auto& n : rule_names(rs)) allowed_.insert(n);
  }

  CheckResult check(const ProofNode& root) {
    std::vector<Sentence> stack;
    std::string err;
    if (!visit(root, stack, err)) return {false, err};
    return {};
  }

 private:
  bool fail(std::string& err, const ProofNode& n, const std::string& why) {
    if (err.empty()) err = n.rule + " node concluding '" + n.conclusion.text() + "': " + why;
    return false;
  }

  bool hyp_matches(const Sentence& hyp, const Sentence& withdrawn) const {
    return hyp == withdrawn || same_clause(hyp, withdrawn);
  }

  bool visit(const ProofNode& n, std::vector<Sentence>& stack, std::string& err) {
    if (n.conclusion.is_null()) return fail(err, n, "missing conclusion");
    if (stack.empty() && valid_.count(&n)) return true;
    for (const auto& c : n.children) {
      if (!c) return fail(err, n, "null child");
    }
    bool ok = node_ok(n, stack, err);
    if (ok && stack.empty()) valid_.insert(&n);
    return ok;
  }

  bool children_ok(const ProofNode& n, std::vector<Sentence>& stack, std::string& err) {
    for (const auto& c : n.children) {
      if (!visit(*c, stack, err)) return false;
    }
    return true;
  }

  bool node_ok(const ProofNode& n, std::vector<Sentence>& stack, std::string& err) {
    const std::string& rule = n.rule;
    if (rule == "PREMISE") {
      if (!n.children.empty()) return fail(err, n, "premise leaf with children");
      if (premises_.count(n.conclusion)) return true;
      if (auto c = Clause::from_sentence(n.conclusion)) {
        for (const Clause& g : clauses_) {
          if (g == *c) return true;
        }
      }
      return fail(err, n, "not a member of the theory");
    }
    if (rule == "HYP") {
      if (!n.children.empty()) return fail(err, n, "hypothesis leaf with children");
      for (auto it = stack.rbegin(); it != stack.rend(); ++it) {
        if (hyp_matches(n.conclusion, *it)) return true;
      }
      return fail(err, n, "hypothesis not withdrawn by any enclosing rule");
    }
    if (!allowed_.count(rule)) return fail(err, n, "rule not in " + rule_set_name(rs_));
    if (is_discharge_rule(rule)) return discharge_ok(n, stack, err);
    if (rule == "CHAINS") {
      if (!chains_ok(n, err)) return false;
      return children_ok(n, stack, err);
    }
    if (rs_ == RuleSet::ClausalRules) {
      if (!clausal_ok(n, err)) return false;
      return children_ok(n, stack, err);
    }
    const RuleTemplate& t = rule_template(rule);
    std::vector<Sentence> prem;
    for (const auto& c : n.children) prem.push_back(c->conclusion);
    if (!match_instance(t, prem, n.conclusion)) return fail(err, n, "not an instance of the rule");
    return children_ok(n, stack, err);
  }

  bool discharge_ok(const ProofNode& n, std::vector<Sentence>& stack, std::string& err) {
    if (n.children.size() != 2 || n.discharged.size() != 2) {
      return fail(err, n, "needs two subderivations with one withdrawn sentence each");
    }
    const Sentence& d0 = n.discharged[0];
    const Sentence& d1 = n.discharged[1];
    if (d0.is_null() || d1.is_null()) return fail(err, n, "missing withdrawn sentence");
    if (n.rule == "RAA") {
      auto goal = as_clause(n.conclusion, false);
      auto h0 = as_clause(d0, true);
      auto h1 = as_clause(d1, true);
      if (!goal || !h0 || !h1) return fail(err, n, "RAA withdraws [x...] to conclude <x...>");
      Clause want(true, goal->literals());
      if (!(*h0 == want) || !(*h1 == want)) return fail(err, n, "withdrawn clause differs from goal");
      auto a = Clause::from_sentence(n.children[0]->conclusion);
      auto b = Clause::from_sentence(n.children[1]->conclusion);
      if (!a || !b || a->empty_meet() == b->empty_meet() || a->literals() != b->literals()) {
        return fail(err, n, "subderivations must conclude <y...> and [y...]");
      }
    } else {
      if (!cases_shape(n.rule, d0, d1)) return fail(err, n, "withdrawn sentences have wrong shape");
      for (const auto& c : n.children) {
        if (!(c->conclusion == n.conclusion)) {
          return fail(err, n, "subderivation concludes a different sentence");
        }
      }
    }
    for (std::size_t i = 0; i < 2; ++i) {
      stack.push_back(n.discharged[i]);
      bool ok = visit(*n.children[i], stack, err);
      stack.pop_back();
      if (!ok) return false;
    }
    return true;
  }

  bool chains_ok(const ProofNode& n, std::string& err) {
    std::size_t want = 1;
    for (const auto& c : n.chains) want += c.size();
    if (n.children.size() != want) return fail(err, n, "children do not match the chains");
    std::size_t k = 1;
    for (const auto& chain : n.chains) {
      for (const Sentence& s : chain) {
        if (!(n.children[k++]->conclusion == s)) {
          return fail(err, n, "child does not conclude its chain sentence");
        }
      }
    }
    CheckResult r = check_chains_instance(n.conclusion, n.children[0]->conclusion, n.chains);
    if (!r) return fail(err, n, r.error);
    return true;
  }

  bool clausal_ok(const ProofNode& n, std::string& err) {
    const std::string& rule = n.rule;
    auto concl = Clause::from_sentence(n.conclusion);
    if (!concl) return fail(err, n, "clausal rules conclude meets");
    std::vector<Clause> kids;
    for (const auto& c : n.children) {
      auto k = Clause::from_sentence(c->conclusion);
      if (!k) return fail(err, n, "clausal rules take meets");
      kids.push_back(*k);
    }
    auto arity = [&](std::size_t k) { return kids.size() == k; };
    if (rule == "CLAXIOM") {
      const auto& l = concl->literals();
      if (arity(0) && concl->empty_meet() && l.size() == 2 && complementary(l[0], l[1])) return true;
      return fail(err, n, "not of the form [x (not x)]");
    }
    if (rule == "STRUCTURAL") {
      if (arity(1) && kids[0].empty_meet() && concl->empty_meet() && kids[0].subsumes(*concl)) {
        return true;
      }
      return fail(err, n, "conclusion does not contain every premise literal");
    }
    if (rule == "RES") {
      if (arity(2) && concl->empty_meet() && kids[0].empty_meet() && kids[1].empty_meet() &&
          (check_res(kids[0], kids[1], *concl) || check_res(kids[1], kids[0], *concl))) {
        return true;
      }
      return fail(err, n, "not a resolvent of its premises");
    }
    if (rule == "REL") {
      if (arity(1) && concl->empty_meet() && kids[0].empty_meet() && check_rel(kids[0], *concl)) {
        return true;
      }
      return fail(err, n, "not a relational expansion of its premise");
    }
    if (rule == "EFQ") {
      if (arity(2) && concl->empty_meet() && kids[0].empty_meet() != kids[1].empty_meet() &&
          kids[0].literals() == kids[1].literals()) {
        return true;
      }
      return fail(err, n, "premises must be <y...> and [y...]");
    }
    return fail(err, n, "unknown clausal rule");
  }

  RuleSet rs_;
  SentenceSet premises_;
  std::vector<Clause> clauses_;
  std::set<std::string> allowed_;
  std::set<const ProofNode*> valid_;
};

}  // namespace

CheckResult check_proof(const ProofNode& proof, const std::vector<Sentence>& gamma, RuleSet rs) {
  Checker c(gamma, rs);
  return c.check(proof);
}

// --------------------------------------------------------------- chains

std::optional<ChainInfo> validate_chain(const std::vector<Sentence>& chain) {
  if (chain.empty()) return std::nullopt;
  for (const Sentence& s : chain) {
    if (s.kind() != SentenceKind::All) return std::nullopt;
  }
  ChainInfo info;
  info.first = chain.front().lhs();
  info.last = chain.back().rhs();
  for (std::size_t i = 1; i < chain.size(); ++i) {
    Term u = chain[i - 1].rhs();
    Term v = chain[i].lhs();
    std::vector<Term> links;
    for (int k = 0;; ++k) {
      // k verbs peeled from both sides so far
      if (k % 2 == 0 && v.kind() == TermKind::AllOf) links.push_back(v.body());
      if (k % 2 == 1 && u.kind() == TermKind::AllOf) links.push_back(u.body());
      if (u.kind() == TermKind::AllOf && v.kind() == TermKind::AllOf && u.name() == v.name()) {
        u = u.body();
        v = v.body();
      } else {
        break;
      }
    }
    if (links.empty()) return std::nullopt;
    info.missing_links.push_back(std::move(links));
  }
  return info;
}

CheckResult check_chains_instance(const Sentence& conclusion, const Sentence& some_premise,
                                  const std::vector<std::vector<Sentence>>& chains) {
  if (conclusion.kind() != SentenceKind::Some || some_premise.kind() != SentenceKind::Some) {
    return {false, "CHAINS concludes a some-sentence from a some-sentence"};
  }
  const Term& x = conclusion.lhs();
  const Term& y = conclusion.rhs();
  std::vector<ChainInfo> infos;
  for (std::size_t n = 0; n < chains.size(); ++n) {
    auto info = validate_chain(chains[n]);
    if (!info) return {false, "chain " + std::to_string(n + 1) + " is not a chain"};
    for (const auto& candidates : info->missing_links) {
      bool linked = false;
      for (const Term& t : candidates) {
        bool to_x = false;
        bool to_y = false;
        for (const ChainInfo& earlier : infos) {
          if (earlier.first == t && earlier.last == x) to_x = true;
          if (earlier.first == t && earlier.last == y) to_y = true;
        }
        if (to_x && to_y) {
          linked = true;
          break;
        }
      }
      if (!linked) {
        return {false, "chain " + std::to_string(n + 1) +
                           " has a missing link not linked to both goal terms by earlier chains"};
      }
    }
    infos.push_back(std::move(*info));
  }
  const Term& a = some_premise.lhs();
  const Term& b = some_premise.rhs();
  bool ax = false;
  bool by = false;
  for (const ChainInfo& c : infos) {
    if (c.first == a && c.last == x) ax = true;
    if (c.first == b && c.last == y) by = true;
  }
  if (!ax || !by) return {false, "no chain links the some-premise terms to the goal terms"};
  return {};
}

Term all_chain(const std::vector<std::string>& verbs, const Term& t) {
  Term out = t;
  for (auto it = verbs.rbegin(); it != verbs.rend(); ++it) out = Term::all_of(*it, out);
  return out;
}

Sentence anti_image(const std::vector<std::string>& verbs, const Sentence& s) {
  if (s.kind() != SentenceKind::All) throw std::invalid_argument("anti image of a non-all sentence");
  Term u = all_chain(verbs, s.lhs());
  Term v = all_chain(verbs, s.rhs());
  return verbs.size() % 2 == 0 ? Sentence::all(u, v) : Sentence::all(v, u);
}

ProofPtr anti_image_proof(const std::vector<std::string>& verbs, ProofPtr proof) {
  ProofPtr cur = std::move(proof);
  for (auto it = verbs.rbegin(); it != verbs.rend(); ++it) {
    const Sentence& s = cur->conclusion;
    Sentence next = Sentence::all(Term::all_of(*it, s.rhs()), Term::all_of(*it, s.lhs()));
    cur = make_proof(next, "ANTI", {cur});
  }
  return cur;
}

}  // namespace relsyl
