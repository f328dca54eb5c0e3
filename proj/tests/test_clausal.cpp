#include <gtest/gtest.h>

#include "gen.hpp"
#include "relsyl/clausal.hpp"
#include "relsyl/corpus.hpp"
#include "relsyl/errors.hpp"

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

Clause C(const std::string& text) { return *Clause::from_sentence(S(text)); }

std::vector<Sentence> sentences(std::initializer_list<const char*> ss) {
  std::vector<Sentence> out;
  for (const char* s : ss) out.push_back(S(s));
  return out;
}

void expect_backed(const Verdict& v, const std::vector<Sentence>& gamma, const Sentence& phi) {
  switch (v.answer) {
    case Answer::Yes: {
      ASSERT_NE(v.proof(), nullptr);
      ASSERT_EQ(v.rules, RuleSet::ClausalRules);
      CheckResult r = check_proof(**v.proof(), gamma, RuleSet::ClausalRules);
      ASSERT_TRUE(r) << r.error;
      ASSERT_TRUE(same_clause((*v.proof())->conclusion, embed_l45(phi)));
      break;
    }
    case Answer::No:
      ASSERT_NE(v.model(), nullptr);
      ASSERT_TRUE(is_countermodel(*v.model(), gamma, phi));
      break;
    case Answer::Unknown:
      ASSERT_FALSE(v.note.empty());
      ASSERT_GT(v.stats.model_bound, 0);
      break;
  }
}

}  // namespace

TEST(Clause, CanonicalForm) {
  Clause c(true, {T("q"), T("(not (not p))"), T("q")});
  EXPECT_EQ(c.literals(), (std::vector<Term>{T("p"), T("q")}));
  EXPECT_EQ(c.to_sentence(), S("[ p q ]"));
  EXPECT_TRUE(C("[ p ]").subsumes(C("[ p q ]")));
  EXPECT_FALSE(C("< p >").subsumes(C("[ p q ]")));
  EXPECT_TRUE(complementary(T("p"), T("(not p)")));
  EXPECT_TRUE(complementary(T("(not (not p))"), T("(not p)")));
  EXPECT_EQ(complement_literal(T("(not p)")), T("p"));
  EXPECT_FALSE(Clause::from_sentence(S("all p q")).has_value());
}

TEST(Embed, Examples) {
  EXPECT_EQ(embed_l45(S("all p q")), S("[ p (not q) ]"));
  EXPECT_EQ(embed_l45(S("some p q")), S("< p q >"));
  EXPECT_EQ(embed_l45(S("all p p")), S("[ p (not p) ]"));
  EXPECT_EQ(embed_l45(S("[ p ]")), S("[ p ]"));
  EXPECT_THROW(embed_l45(S("all p q or some p p")), FragmentError);
}

TEST(Resolve, Examples) {
  EXPECT_EQ(resolve(C("[ q (not s) ]"), C("[ p (not q) ]"), T("q")), C("[ p (not s) ]"));
  EXPECT_THROW(resolve(C("[ p (not q) ]"), C("[ q (not s) ]"), T("q")), std::invalid_argument);
  EXPECT_THROW(resolve(C("[ p ]"), C("[ (not p) ]"), T("p")), std::invalid_argument);
  EXPECT_EQ(resolve(C("[ p q ]"), C("[ (not p) q ]"), T("p")), C("[ q ]"));
  EXPECT_THROW(resolve(C("[ p q ]"), C("[ q s ]"), T("p")), std::invalid_argument);
}

TEST(Rel, Examples) {
  auto a = rel_expand(C("[ (not x) y ]"), "r");
  ASSERT_EQ(a.size(), 1u);
  EXPECT_EQ(a[0], C("[ (r all x) (not (r all y)) ]"));
  auto b = rel_expand(C("[ x ]"), "r");
  ASSERT_EQ(b.size(), 1u);
  EXPECT_EQ(b[0], C("[ (not (r all x)) ]"));
  EXPECT_THROW(rel_expand(C("[ (not x) (not y) ]"), "r"), std::invalid_argument);
  EXPECT_THROW(rel_expand(C("[ x y ]"), "r"), std::invalid_argument);
}

TEST(DecideClausal, DerivedBarbara) {
  auto gamma = sentences({"[ p (not q) ]", "[ q (not s) ]"});
  ClausalOptions o;
  o.depth_bound = 2;
  o.model_bound = 2;
  Verdict v = decide_clausal(gamma, S("[ p (not s) ]"), o);
  ASSERT_EQ(v.answer, Answer::Yes);
  EXPECT_EQ((*v.proof())->rule, "RES");
  expect_backed(v, gamma, S("[ p (not s) ]"));
}

TEST(DecideClausal, RaaForNonemptyMeet) {
  auto gamma = sentences({"< p q >"});
  Verdict v = decide_clausal(gamma, S("< p p >"));
  ASSERT_EQ(v.answer, Answer::Yes);
  EXPECT_EQ((*v.proof())->rule, "RAA");
  expect_backed(v, gamma, S("< p p >"));
}

TEST(DecideClausal, OnePointCountermodel) {
  ClausalOptions o;
  o.model_bound = 1;
  Verdict v = decide_clausal({}, S("[ p ]"), o);
  ASSERT_EQ(v.answer, Answer::No);
  ASSERT_EQ(v.model()->size(), 1u);
  EXPECT_EQ(v.model()->noun("p").count(), 1u);
}

TEST(DecideClausal, EmbeddedInputsAndEfq) {
  auto gamma = sentences({"all p q", "some p (not q)"});
  Verdict v = decide_clausal(gamma, S("all s (r all s)"));
  ASSERT_EQ(v.answer, Answer::Yes);
  expect_backed(v, gamma, S("all s (r all s)"));
  EXPECT_THROW(decide_clausal({}, S("all p (r some q)")), FragmentError);
}

TEST(DecideL5, Examples) {
  Verdict a = decide_l5({}, S("all x x"));
  EXPECT_EQ(a.answer, Answer::Yes);
  auto gamma = sentences({"all p (not p)"});
  Verdict b = decide_l5(gamma, S("some q q"));
  ASSERT_EQ(b.answer, Answer::No);
  expect_backed(b, gamma, S("some q q"));
  Encoding e = encode_3sat({1, {{1, 1, 1}, {-1, -1, -1}}});
  ASSERT_FALSE(oracle_consequence(e.theory.sentences, e.goal, 3).found);
  Verdict c = decide_l5(e.theory.sentences, e.goal);
  EXPECT_NE(c.answer, Answer::No);
  expect_backed(c, e.theory.sentences, e.goal);
}

TEST(DecideL5, OpaqueSomeOfStaysUnknown) {
  auto gamma = sentences({"all p q"});
  Sentence phi = S("all (r some p) (r some q)");
  Verdict v = decide_l5(gamma, phi);
  EXPECT_NE(v.answer, Answer::No);
  expect_backed(v, gamma, phi);
  EXPECT_FALSE(oracle_consequence(gamma, phi, 3).found);
}

TEST(Property, SubsumptionSemantics) {
  testgen::Gen g(61);
  testgen::Shape s = testgen::l45plus_shape();
  Vocabulary v = testgen::shape_vocab(s);
  for (int i = 0; i < 2000; ++i) {
    Clause small(true, {g.term(s), g.term(s)});
    std::vector<Term> more = small.literals();
    more.push_back(g.term(s));
    Clause big(true, more);
    ASSERT_TRUE(small.subsumes(big));
    FiniteModel m = g.model(v, 3);
    if (satisfies(m, small.to_sentence())) ASSERT_TRUE(satisfies(m, big.to_sentence()));
  }
}

// Random L4.5+ problems: answers always come with a certificate or a bound
// report, and YES never meets an oracle countermodel.
TEST(Property, ThreeValuedAndCertified) {
  testgen::Gen g(62);
  testgen::Shape s = testgen::l45plus_shape();
  s.nouns = {"p", "q"};
  s.verbs = {"r"};
  s.max_depth = 1;
  int counts[3] = {0, 0, 0};
  for (int i = 0; i < 150; ++i) {
    std::vector<Sentence> gamma;
    int k = g.uniform(0, 3);
    for (int j = 0; j < k; ++j) gamma.push_back(g.coin(0.7) ? g.meet(s, true, 2) : g.meet(s, false, 2));
    Sentence phi = g.meet(s, g.coin(0.6), 2);
    ClausalOptions o;
    o.clause_cap = 4000;
    Verdict v = decide_clausal(gamma, phi, o);
    expect_backed(v, gamma, phi);
    ++counts[static_cast<int>(v.answer)];
    if (v.answer == Answer::Yes) ASSERT_FALSE(oracle_consequence(gamma, phi, 3).found) << phi.text();
  }
  EXPECT_GT(counts[0], 0);
  EXPECT_GT(counts[1], 0);
}

// If Gamma has a countermodel to [S], it cannot prove both [S x] and [S (not x)].
TEST(Property, ConsistencyDichotomy) {
  testgen::Gen g(63);
  testgen::Shape s = testgen::l45plus_shape();
  s.nouns = {"p", "q"};
  s.verbs = {"r"};
  s.max_depth = 1;
  int checked = 0;
  for (int i = 0; i < 80; ++i) {
    std::vector<Sentence> gamma;
    int k = g.uniform(1, 3);
    for (int j = 0; j < k; ++j) gamma.push_back(g.meet(s, true, 2));
    Term a = g.term(s);
    TermSet closed = subterms(a);
    std::vector<Term> lits(closed.begin(), closed.end());
    ClausalOptions o;
    o.clause_cap = 3000;
    if (decide_clausal(gamma, Sentence::empty_meet(lits), o).answer != Answer::No) continue;
    ++checked;
    Term x = g.term(s);
    std::vector<Term> with = lits, without = lits;
    with.push_back(x);
    without.push_back(Term::negate(x));
    bool both = decide_clausal(gamma, Sentence::empty_meet(with), o).answer == Answer::Yes &&
                decide_clausal(gamma, Sentence::empty_meet(without), o).answer == Answer::Yes;
    ASSERT_FALSE(both) << a.text() << " / " << x.text();
  }
  EXPECT_GT(checked, 10);
}
