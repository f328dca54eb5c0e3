// Rule catalogues, proof trees and the proof checker.
#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "relsyl/syntax.hpp"

namespace relsyl {

enum class RuleSet {
  L1Core,       // AXIOM BARBARA ANTI
  Base0,        // L1Core + SOME1 SOME2 DARII
  L2Cases,      // Base0 + CASES
  L2Chains,     // Base0 + CHAINS
  L2PlusRules,  // Base0 + the disjunctive rules
  L35Rules,     // Base0 + R1 R2 R3 + CASES CASES1
  L3Rules,      // AXIOM BARBARA ANTI R1 MIX + CASES3 CASES2
  ClausalRules  // CLAXIOM RES REL STRUCTURAL EFQ + RAA
};

std::string rule_set_name(RuleSet rs);
std::optional<RuleSet> parse_rule_set(std::string_view name);
std::vector<RuleSet> all_rule_sets();

struct TermPattern;
using TermPatternPtr = std::shared_ptr<const TermPattern>;

struct TermPattern {
  enum class Kind { Var, AllOf, SomeOf, Not };
  Kind kind = Kind::Var;
  int var = -1;  // term variable for Var, verb variable for AllOf/SomeOf
  TermPatternPtr body;
};

struct SentencePattern {
  SentenceKind kind = SentenceKind::All;
  std::vector<TermPatternPtr> args;
};

struct RuleTemplate {
  std::string name;
  std::vector<SentencePattern> premises;
  SentencePattern conclusion;
  std::vector<std::string> term_vars;
  std::vector<std::string> verb_vars;

  // Built from sentences written with variables as identifiers, e.g.
  // make("ANTI", {"all x y"}, "all (r all y) (r all x)").
  static RuleTemplate make(std::string name, const std::vector<std::string>& premises,
                           const std::string& conclusion);
};

struct Substitution {
  std::vector<Term> terms;         // indexed by term variable
  std::vector<std::string> verbs;  // indexed by verb variable
};

// Template rules (no discharge, fixed arity) of a rule set, sorted by name.
const std::vector<RuleTemplate>& rule_templates(RuleSet rs);
const RuleTemplate& rule_template(const std::string& name);
// Every rule name a rule set admits, including special rules.
std::vector<std::string> rule_names(RuleSet rs);
bool is_discharge_rule(const std::string& name);

std::optional<Term> instantiate(const TermPatternPtr& p, const Substitution& s);
std::optional<Sentence> instantiate(const SentencePattern& p, const Substitution& s);
bool match_pattern(const TermPatternPtr& p, const Term& t, Substitution& s);
bool match_pattern(const SentencePattern& p, const Sentence& sentence, Substitution& s);
// Substitution making premises (in some order) and conclusion an instance.
std::optional<Substitution> match_instance(const RuleTemplate& rule,
                                           const std::vector<Sentence>& premises,
                                           const Sentence& conclusion);

struct ProofNode;
using ProofPtr = std::shared_ptr<const ProofNode>;

// rule is a rule name, "PREMISE" (member of the theory) or "HYP"
// (withdrawn by an enclosing discharge rule).
struct ProofNode {
  Sentence conclusion;
  std::string rule;
  std::vector<ProofPtr> children;
  // For discharge rules: the sentence withdrawn in each child's subtree.
  std::vector<Sentence> discharged;
  // For CHAINS: children are the some-premise followed by the chain
  // sentences in order; this holds the chains themselves.
  std::vector<std::vector<Sentence>> chains;
};

ProofPtr make_proof(Sentence conclusion, std::string rule, std::vector<ProofPtr> children = {},
                    std::vector<Sentence> discharged = {},
                    std::vector<std::vector<Sentence>> chains = {});
ProofPtr premise_leaf(const Sentence& s);
ProofPtr hyp_leaf(const Sentence& s);

std::size_t proof_size(const ProofNode& p);
int proof_depth(const ProofNode& p);

struct CheckResult {
  bool ok = true;
  std::string error;
  explicit operator bool() const { return ok; }
};

// Validates every node. PREMISE leaves must belong to gamma (for the
// clausal rules, a premise may also be the clause embedding of a member);
// HYP leaves must equal a sentence withdrawn by an enclosing discharge.
CheckResult check_proof(const ProofNode& proof, const std::vector<Sentence>& gamma, RuleSet rs);

// Chains linking a to b: (all a u1, all v1 u2, ..., all vm b).
struct ChainInfo {
  Term first;
  Term last;
  // For each junction (u_i, v_i), every term t that some admissible
  // decomposition names as the missing link.
  std::vector<std::vector<Term>> missing_links;
};

std::optional<ChainInfo> validate_chain(const std::vector<Sentence>& chain);
CheckResult check_chains_instance(const Sentence& conclusion, const Sentence& some_premise,
                                  const std::vector<std::vector<Sentence>>& chains);

// Anti(r1..rk, all u v): all (r all u) (r all v) for even k, flipped for odd k,
// where (r all x) abbreviates (r1 all (r2 all ... x)).
Sentence anti_image(const std::vector<std::string>& verbs, const Sentence& all_sentence);
// Derivation of the anti image from a derivation of the sentence, by ANTI.
ProofPtr anti_image_proof(const std::vector<std::string>& verbs, ProofPtr proof);
Term all_chain(const std::vector<std::string>& verbs, const Term& t);

}  // namespace relsyl
