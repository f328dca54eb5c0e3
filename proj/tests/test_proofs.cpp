#include <gtest/gtest.h>

#include <algorithm>

#include "gen.hpp"
#include "relsyl/corpus.hpp"
#include "relsyl/proofs.hpp"
#include "soundness.hpp"

using namespace relsyl;

namespace {

Sentence S(const std::string& text) {
  Vocabulary v;
  return parse_sentence(text, &v, {false, true});
}

Term T(const std::string& text) {
  Vocabulary v;
  return parse_term(text, &v, {false, true});
}

ProofPtr P(const std::string& s) { return premise_leaf(S(s)); }
ProofPtr H(const std::string& s) { return hyp_leaf(S(s)); }
ProofPtr node(const std::string& s, const std::string& rule, std::vector<ProofPtr> kids) {
  return make_proof(S(s), rule, std::move(kids));
}

std::vector<Sentence> sentences(std::initializer_list<const char*> ss) {
  std::vector<Sentence> out;
  for (const char* s : ss) out.push_back(S(s));
  return out;
}

// C2 of the Gamma_n chain example: (all rrA rrA, phi_1, ..., phi_{n-1}, omega).
std::vector<Sentence> gamma_chain(int n) {
  Term rr = T("(r1 all (r1 all a))");
  std::vector<Sentence> c{Sentence::all(rr, rr)};
  const auto& g = gen_gamma_n(n).sentences;
  c.insert(c.end(), g.begin() + 1, g.end());
  return c;
}

}  // namespace

TEST(Match, Barbara) {
  auto sub = match_instance(rule_template("BARBARA"), sentences({"all y z", "all x y"}), S("all x z"));
  ASSERT_TRUE(sub.has_value());
  EXPECT_EQ(sub->terms, (std::vector<Term>{T("x"), T("y"), T("z")}));
}

TEST(Match, Anti) {
  EXPECT_TRUE(match_instance(rule_template("ANTI"), sentences({"all x y"}), S("all (r all y) (r all x)")));
  EXPECT_FALSE(match_instance(rule_template("ANTI"), sentences({"all x y"}), S("all (r all x) (r all y)")));
}

TEST(Match, DariiShapeMismatch) {
  EXPECT_FALSE(match_instance(rule_template("DARII"), sentences({"some x y", "all y z"}), S("all x z")));
  EXPECT_TRUE(match_instance(rule_template("DARII"), sentences({"some x y", "all y z"}), S("some x z")));
}

TEST(Match, ConsistentVerbBinding) {
  const RuleTemplate& r2 = rule_template("R2");
  EXPECT_TRUE(match_instance(r2, sentences({"some p q"}), S("all (r all p) (r some q)")));
  EXPECT_FALSE(match_instance(r2, sentences({"some p q"}), S("all (r all p) (s some q)")));
}

TEST(Templates, InstantiateRoundTrip) {
  const RuleTemplate& anti = rule_template("ANTI");
  Substitution sub{{T("(s all p)"), T("q")}, {"r"}};
  auto c = instantiate(anti.conclusion, sub);
  ASSERT_TRUE(c.has_value());
  EXPECT_EQ(*c, S("all (r all q) (r all (s all p))"));
  EXPECT_EQ(rule_names(RuleSet::L1Core), (std::vector<std::string>{"AXIOM", "BARBARA", "ANTI"}));
  EXPECT_TRUE(is_discharge_rule("RAA"));
  EXPECT_FALSE(is_discharge_rule("EFQ"));
  EXPECT_EQ(parse_rule_set("L35Rules"), RuleSet::L35Rules);
  EXPECT_EQ(parse_rule_set("nope"), std::nullopt);
}

TEST(Check, CasesExample) {
  // some x y from {some c d, all a x, all a y, all (r all a) x, all (r all a) y}, splitting on a.
  auto gamma = sentences({"some c d", "all a x", "all a y", "all (r all a) x", "all (r all a) y"});
  ProofPtr left = node("some x y", "DARII",
                       {node("some x a", "SOME2", {node("some a x", "DARII", {H("some a a"), P("all a x")})}),
                        P("all a y")});
  ProofPtr cra = node("some c (r all a)", "DARII", {P("some c d"), H("all d (r all a)")});
  ProofPtr rr = node("some (r all a) (r all a)", "SOME1", {node("some (r all a) c", "SOME2", {cra})});
  ProofPtr rx = node("some x (r all a)", "SOME2", {node("some (r all a) x", "DARII", {rr, P("all (r all a) x")})});
  ProofPtr right = node("some x y", "DARII", {rx, P("all (r all a) y")});
  ProofPtr root = make_proof(S("some x y"), "CASES", {left, right}, sentences({"some a a", "all d (r all a)"}));
  EXPECT_TRUE(check_proof(*root, gamma, RuleSet::L2Cases)) << check_proof(*root, gamma, RuleSet::L2Cases).error;
  EXPECT_TRUE(check_proof(*root, gamma, RuleSet::L35Rules));
  EXPECT_FALSE(check_proof(*root, gamma, RuleSet::Base0));
  // Swapping the withdrawn sentences leaves HYP leaves unbound.
  ProofPtr swapped = make_proof(S("some x y"), "CASES", {left, right}, sentences({"all d (r all a)", "some a a"}));
  EXPECT_FALSE(check_proof(*swapped, gamma, RuleSet::L2Cases));
}

TEST(Check, DanglingPremise) {
  ProofPtr p = node("all x z", "BARBARA", {P("all x y"), P("all y z")});
  EXPECT_TRUE(check_proof(*p, sentences({"all x y", "all y z"}), RuleSet::L1Core));
  CheckResult r = check_proof(*p, sentences({"all x y"}), RuleSet::L1Core);
  EXPECT_FALSE(r);
  EXPECT_FALSE(r.error.empty());
}

TEST(Check, RuleOutsideTheSet) {
  ProofPtr p = node("some x z", "DARII", {P("some x y"), P("all y z")});
  auto gamma = sentences({"some x y", "all y z"});
  EXPECT_TRUE(check_proof(*p, gamma, RuleSet::Base0));
  EXPECT_FALSE(check_proof(*p, gamma, RuleSet::L1Core));
  EXPECT_FALSE(check_proof(*node("some x z", "MADEUP", {}), gamma, RuleSet::Base0));
}

TEST(Check, UndischargedHypothesis) {
  ProofPtr p = node("all x z", "BARBARA", {H("all x y"), P("all y z")});
  EXPECT_FALSE(check_proof(*p, sentences({"all y z"}), RuleSet::L1Core));
}

TEST(Check, WrongConclusion) {
  ProofPtr p = node("all z x", "BARBARA", {P("all x y"), P("all y z")});
  EXPECT_FALSE(check_proof(*p, sentences({"all x y", "all y z"}), RuleSet::L1Core));
}

TEST(Check, RaaDischargeMismatch) {
  auto gamma = sentences({"< p q >"});
  // <p p> from <p q>: assume [p], pad to [p q], contradiction with <p q>.
  ProofPtr pq = node("[ p q ]", "STRUCTURAL", {H("[ p ]")});
  ProofPtr good = make_proof(S("< p >"), "RAA", {P("< p q >"), pq}, sentences({"[ p ]", "[ p ]"}));
  EXPECT_TRUE(check_proof(*good, gamma, RuleSet::ClausalRules)) << check_proof(*good, gamma, RuleSet::ClausalRules).error;
  ProofPtr bad = make_proof(S("< p >"), "RAA", {P("< p q >"), pq}, sentences({"[ p ]", "[ q ]"}));
  EXPECT_FALSE(check_proof(*bad, gamma, RuleSet::ClausalRules));
}

TEST(Check, ZeroWithdrawnOccurrences) {
  auto gamma = sentences({"some p q"});
  ProofPtr p = make_proof(S("some p q"), "CASES", {P("some p q"), P("some p q")},
                          sentences({"some s s", "all p (r all s)"}));
  EXPECT_TRUE(check_proof(*p, gamma, RuleSet::L2Cases));
}

TEST(Check, HypothesisMustMatchAWithdrawnSentence) {
  auto gamma = sentences({"some p q"});
  ProofPtr inner = make_proof(S("some q q"), "CASES",
                              {node("some q q", "SOME1", {node("some q p", "SOME2", {P("some p q")})}),
                               node("some q q", "SOME1", {H("some q s")})},
                              sentences({"some s s", "all p (r all s)"}));
  EXPECT_FALSE(check_proof(*inner, gamma, RuleSet::L2Cases));
}

TEST(Chains, SingleSentence) {
  auto c = validate_chain(sentences({"all a b"}));
  ASSERT_TRUE(c.has_value());
  EXPECT_EQ(c->first, T("a"));
  EXPECT_EQ(c->last, T("b"));
  EXPECT_TRUE(c->missing_links.empty());
}

TEST(Chains, LengthTwoBothCases) {
  auto c1 = validate_chain(sentences({"all a z", "all (r all t) b"}));
  ASSERT_TRUE(c1.has_value());
  ASSERT_EQ(c1->missing_links.size(), 1u);
  EXPECT_EQ(c1->missing_links[0], std::vector<Term>{T("t")});
  auto c2 = validate_chain(sentences({"all a (s all (r all t))", "all (s all z) b"}));
  ASSERT_TRUE(c2.has_value());
  EXPECT_NE(std::find(c2->missing_links[0].begin(), c2->missing_links[0].end(), T("t")),
            c2->missing_links[0].end());
  EXPECT_FALSE(validate_chain(sentences({"all a z", "all b c"})).has_value());
  // z is arbitrary, so (r all (r all t)) supplies the link (r all t).
  EXPECT_TRUE(validate_chain(sentences({"all a (s all z)", "all (r all (r all t)) b"})).has_value());
  EXPECT_FALSE(validate_chain(sentences({"all a (s all z)", "all q b"})).has_value());
  EXPECT_FALSE(validate_chain({}).has_value());
}

TEST(Chains, GammaFamilyChain) {
  for (int n = 1; n <= 5; ++n) {
    auto c = validate_chain(gamma_chain(n));
    ASSERT_TRUE(c.has_value()) << n;
    EXPECT_EQ(c->first, T("(r1 all (r1 all a))"));
    EXPECT_EQ(c->last, T("a"));
    ASSERT_EQ(c->missing_links.size(), static_cast<std::size_t>(n));
    for (const auto& links : c->missing_links) {
      EXPECT_NE(std::find(links.begin(), links.end(), T("a")), links.end());
    }
  }
}

TEST(Chains, InstanceChecks) {
  Sentence alpha = gen_gamma_n(3).sentences[0];
  std::vector<Sentence> c1 = sentences({"all a a"});
  std::vector<Sentence> c2 = gamma_chain(3);
  EXPECT_TRUE(check_chains_instance(S("some a a"), alpha, {c1, c2}));
  // First chain carries a missing link.
  EXPECT_FALSE(check_chains_instance(S("some a a"), alpha, {c2, c1}));
  EXPECT_FALSE(check_chains_instance(S("some a a"), alpha, {c2}));
  // No chain links b to y.
  EXPECT_FALSE(check_chains_instance(S("some x y"), S("some a b"), {sentences({"all a x"})}));
  EXPECT_TRUE(check_chains_instance(S("some x y"), S("some a b"),
                                    {sentences({"all a x"}), sentences({"all b y"})}));
}

TEST(Chains, GammaFamilyProofChecks) {
  for (int n = 1; n <= 5; ++n) {
    Theory g = gen_gamma_n(n);
    std::vector<Sentence> c1 = sentences({"all a a"});
    std::vector<Sentence> c2 = gamma_chain(n);
    std::vector<ProofPtr> kids{premise_leaf(g.sentences[0]), make_proof(c1[0], "AXIOM"),
                               make_proof(c2[0], "AXIOM")};
    for (std::size_t k = 1; k < c2.size(); ++k) kids.push_back(premise_leaf(c2[k]));
    ProofPtr p = make_proof(S("some a a"), "CHAINS", kids, {}, {c1, c2});
    CheckResult r = check_proof(*p, g.sentences, RuleSet::L2Chains);
    EXPECT_TRUE(r) << n << ": " << r.error;
    EXPECT_FALSE(check_proof(*p, g.sentences, RuleSet::L2PlusRules));
    for (int i = 1; i <= n; ++i) EXPECT_FALSE(check_proof(*p, gen_delta_ni(n, i).sentences, RuleSet::L2Chains));
  }
}

TEST(Anti, Images) {
  Sentence uv = S("all u v");
  EXPECT_EQ(anti_image({}, uv), uv);
  EXPECT_EQ(anti_image({"r"}, uv), S("all (r all v) (r all u)"));
  EXPECT_EQ(anti_image({"r", "s"}, uv), S("all (r all (s all u)) (r all (s all v))"));
  ProofPtr p = anti_image_proof({"r", "s"}, premise_leaf(uv));
  EXPECT_EQ(p->conclusion, anti_image({"r", "s"}, uv));
  EXPECT_TRUE(check_proof(*p, {uv}, RuleSet::L1Core));
  EXPECT_EQ(all_chain({"r", "s"}, T("p")), T("(r all (s all p))"));
}

TEST(Property, AntiImageProofsCheck) {
  testgen::Gen g(31);
  testgen::Shape s = testgen::l1_shape();
  for (int i = 0; i < 300; ++i) {
    std::vector<std::string> verbs;
    int k = g.uniform(0, 5);
    for (int j = 0; j < k; ++j) verbs.push_back(g.pick(s.verbs));
    Sentence psi = g.all(s);
    ProofPtr p = anti_image_proof(verbs, premise_leaf(psi));
    ASSERT_EQ(p->conclusion, anti_image(verbs, psi));
    ASSERT_EQ(proof_size(*p), static_cast<std::size_t>(k + 1));
    ASSERT_TRUE(check_proof(*p, {psi}, RuleSet::L1Core));
  }
}

// Junctions built from either case with random prefixes always validate
// and report the intended missing link.
TEST(Property, ChainDecompositionsAreFound) {
  testgen::Gen g(32);
  testgen::Shape s = testgen::l1_shape();
  s.max_depth = 1;
  for (int i = 0; i < 1000; ++i) {
    Term a = g.term(s), b = g.term(s), z = g.term(s), t = g.term(s);
    std::string r = g.pick(s.verbs);
    int len = g.uniform(0, 3);
    std::vector<std::string> vs;
    for (int j = 0; j < len; ++j) vs.push_back(g.pick(s.verbs));
    std::vector<Sentence> chain;
    if (len % 2 == 0) {
      chain = {Sentence::all(a, all_chain(vs, z)), Sentence::all(all_chain(vs, Term::all_of(r, t)), b)};
    } else {
      chain = {Sentence::all(a, all_chain(vs, Term::all_of(r, t))), Sentence::all(all_chain(vs, z), b)};
    }
    auto c = validate_chain(chain);
    ASSERT_TRUE(c.has_value()) << chain[0].text() << " ; " << chain[1].text();
    const auto& links = c->missing_links.at(0);
    ASSERT_NE(std::find(links.begin(), links.end(), t), links.end());
  }
}

TEST(Property, RuleSoundnessSmall) {
  std::uint64_t seed = 100;
  for (RuleSet rs : all_rule_sets()) {
    for (const auto& rule : rule_names(rs)) {
      testgen::FuzzReport rep = testgen::fuzz_rule(rs, rule, 100, seed++, 20000);
      EXPECT_EQ(rep.violations, 0) << rule << ": " << rep.first_problem;
      EXPECT_EQ(rep.rejected, 0) << rule << ": " << rep.first_problem;
      if (rule == "EFQ") {
        EXPECT_EQ(rep.hits, 0);
      } else {
        EXPECT_EQ(rep.hits, 100) << rule;
      }
    }
  }
}
