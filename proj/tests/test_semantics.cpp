#include <gtest/gtest.h>

#include "gen.hpp"
#include "naive.hpp"
#include "relsyl/corpus.hpp"
#include "relsyl/errors.hpp"
#include "relsyl/semantics.hpp"

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

ElementSet set_of(std::size_t n, std::initializer_list<std::size_t> es) {
  ElementSet s(n);
  for (auto e : es) s.set(e);
  return s;
}

}  // namespace

TEST(ElementSet, Basics) {
  ElementSet a = set_of(70, {0, 65});
  ElementSet b = set_of(70, {0, 1, 65});
  EXPECT_TRUE(a.subset_of(b));
  EXPECT_FALSE(b.subset_of(a));
  EXPECT_TRUE(a.intersects(b));
  EXPECT_EQ(a.complement().count(), 68u);
  EXPECT_EQ((a & b), a);
  EXPECT_EQ((a | b), b);
  EXPECT_EQ(b.elements(), (std::vector<std::size_t>{0, 1, 65}));
  EXPECT_TRUE(ElementSet(0).empty());
  EXPECT_EQ(ElementSet::full(3).count(), 3u);
}

TEST(Eval, FourPointModelOfSubcaseA) {
  FiniteModel m = fixture_m4(2, {"r2", "r2"}, M4Subcase::A);
  // w x y z
  EXPECT_EQ(eval_term(m, T("(r1 all a)")), set_of(4, {1}));
  EXPECT_EQ(eval_term(m, T("(r1 all (r1 all a))")), set_of(4, {2}));
  for (const Sentence& s : gen_gamma_n(2).sentences) EXPECT_TRUE(satisfies(m, s)) << s.text();
}

TEST(Eval, VacuousQuantifiers) {
  FiniteModel m(3);
  m.declare_noun("x");
  m.add_pair("r", 0, 1);
  EXPECT_EQ(eval_term(m, T("(r all x)")), ElementSet::full(3));
  EXPECT_TRUE(eval_term(m, T("(r some x)")).empty());
}

TEST(Eval, DoubleComplement) {
  testgen::Gen g(5);
  Vocabulary v{{"p"}, {"r"}};
  for (int i = 0; i < 50; ++i) {
    FiniteModel m = g.model(v, 4);
    EXPECT_EQ(eval_term(m, T("(not (not p))")), eval_term(m, T("p")));
  }
}

TEST(Satisfies, Examples) {
  FiniteModel one(1);
  one.declare_noun("p");
  one.declare_noun("q");
  EXPECT_TRUE(satisfies(one, S("all p q")));
  EXPECT_FALSE(satisfies(one, S("some p p")));
  one.add_to_noun("p", 0);
  EXPECT_TRUE(satisfies(one, S("< p p >")));
  EXPECT_FALSE(satisfies(one, S("[ p ]")));
  EXPECT_TRUE(satisfies(one, S("all q p or some q q")));
  EXPECT_TRUE(satisfies(one, S("all p q or some p p")));
  EXPECT_FALSE(satisfies(one, S("all p q or some q q")));
  EXPECT_TRUE(satisfies(FiniteModel(0), S("[ p ]")));
}

TEST(Satisfies, GammaFamilyInFourPointModels) {
  for (M4Subcase sc : {M4Subcase::A, M4Subcase::B, M4Subcase::C}) {
    std::vector<std::string> svec = sc == M4Subcase::A   ? std::vector<std::string>{"r1", "r2"}
                                    : sc == M4Subcase::B ? std::vector<std::string>{"r2", "r1"}
                                                         : std::vector<std::string>{"r2", "r2", "r1", "r1"};
    FiniteModel m = fixture_m4(3, svec, sc);
    EXPECT_TRUE(satisfies_all(m, gen_gamma_n(3).sentences));
    EXPECT_TRUE(eval_term(m, all_chain_term(svec, Term::noun("a"))).empty());
  }
}

TEST(Oracle, AllDoesNotGiveSome) {
  OracleResult r = oracle_consequence({S("all p q")}, S("some p p"), 1);
  ASSERT_TRUE(r.found);
  // Frozen from the brute-force enumeration: one point, p = q = {}.
  EXPECT_EQ(r.countermodel.size(), 1u);
  EXPECT_TRUE(r.countermodel.noun("p").empty());
  EXPECT_TRUE(r.countermodel.noun("q").empty());
  auto naive_cm = naive::countermodel({S("all p q")}, S("some p p"), 1);
  ASSERT_TRUE(naive_cm.has_value());
}

TEST(Oracle, SomeDoesNotGiveAll) {
  OracleResult r = oracle_consequence({S("some p q")}, S("all p q"), 2);
  ASSERT_TRUE(r.found);
  // Frozen from the brute-force enumeration at size 2: p = {0,1}, q = {0}.
  EXPECT_EQ(r.countermodel.size(), 2u);
  EXPECT_EQ(r.countermodel.noun("p"), set_of(2, {0, 1}));
  EXPECT_EQ(r.countermodel.noun("q"), set_of(2, {0}));
  EXPECT_TRUE(is_countermodel(r.countermodel, {S("some p q")}, S("all p q")));
}

TEST(Oracle, ValidSentenceHasNoCountermodel) {
  for (int k = 0; k <= 4; ++k) {
    OracleResult r = oracle_consequence({}, S("all x x"), k);
    EXPECT_FALSE(r.found);
    EXPECT_EQ(r.bound, k);
  }
}

TEST(Oracle, EmptyDomainIsTriedLast) {
  OracleResult r = oracle_consequence({}, S("[ p ]"), 2);
  ASSERT_TRUE(r.found);
  EXPECT_EQ(r.countermodel.size(), 1u);
  OracleResult e = oracle_consequence({S("all p p")}, S("some p p"), 0);
  ASSERT_TRUE(e.found);
  EXPECT_EQ(e.countermodel.size(), 0u);
}

TEST(Oracle, BudgetExhaustion) {
  OracleOptions tight;
  tight.budget = 1;
  // A valid consequence forces a refutation at every size.
  std::vector<Sentence> gamma{S("all p q"), S("all q s")};
  EXPECT_THROW(oracle_consequence(gamma, S("all (r all (t all p)) (r all (t all s))"), 6, tight), BudgetError);
  EXPECT_FALSE(oracle_consequence(gamma, S("all (r all (t all p)) (r all (t all s))"), 3).found);
}

TEST(RandomModel, Contract) {
  Vocabulary none;
  EXPECT_EQ(random_model(none, 0, 3).size(), 0u);
  Vocabulary v{{"p"}, {"r"}};
  EXPECT_EQ(random_model(v, 3, 99), random_model(v, 3, 99));
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    FiniteModel m = random_model(v, 3, seed);
    EXPECT_LE(m.size(), 3u);
    EXPECT_EQ(m.noun_names(), std::vector<std::string>{"p"});
    EXPECT_EQ(m.verb_names(), std::vector<std::string>{"r"});
  }
}

// Library and brute-force evaluator agree on random terms and models.
TEST(Property, EvaluatorsAgree) {
  testgen::Gen g(21);
  testgen::Shape s = testgen::l55_shape();
  s.max_depth = 3;
  s.disjunction = true;
  Vocabulary v = testgen::shape_vocab(s);
  for (int i = 0; i < 2000; ++i) {
    FiniteModel m = g.model(v, 4);
    naive::Model nm = naive::from_finite(m, v);
    Term t = g.term(s);
    std::vector<bool> want = naive::eval(nm, t);
    ElementSet got = eval_term(m, t);
    for (std::size_t e = 0; e < m.size(); ++e) ASSERT_EQ(got.test(e), want[e]) << t.text();
    Sentence x = g.coin() ? g.sentence(s) : g.meet(s, g.coin());
    ASSERT_EQ(satisfies(m, x), naive::holds(nm, x)) << x.text();
  }
}

TEST(Property, MonotonicityOfQuantifiedTerms) {
  testgen::Gen g(22);
  testgen::Shape s = testgen::l55_shape();
  Vocabulary v = testgen::shape_vocab(s);
  int checked = 0;
  for (int i = 0; i < 5000; ++i) {
    FiniteModel m = g.model(v, 3);
    Term x = g.term(s), y = g.term(s);
    if (!eval_term(m, x).subset_of(eval_term(m, y))) continue;
    ++checked;
    for (const auto& r : s.verbs) {
      ASSERT_TRUE(eval_term(m, Term::all_of(r, y)).subset_of(eval_term(m, Term::all_of(r, x))));
      ASSERT_TRUE(eval_term(m, Term::some_of(r, x)).subset_of(eval_term(m, Term::some_of(r, y))));
    }
  }
  EXPECT_GT(checked, 500);
}

TEST(Property, ComplementLaws) {
  testgen::Gen g(23);
  testgen::Shape s = testgen::l55_shape();
  Vocabulary v = testgen::shape_vocab(s);
  for (int i = 0; i < 1000; ++i) {
    FiniteModel m = g.model(v, 4);
    Term x = g.term(s);
    ElementSet ex = eval_term(m, x), nx = eval_term(m, Term::negate(x));
    ASSERT_EQ(eval_term(m, Term::negate(Term::negate(x))), ex);
    ASSERT_EQ(ex | nx, ElementSet::full(m.size()));
    ASSERT_TRUE((ex & nx).empty());
    ASSERT_TRUE(satisfies(m, Sentence::empty_meet({x, Term::negate(x)})));
  }
}

// The library oracle and the brute-force enumerator agree on existence of
// a countermodel, and every reported countermodel re-checks.
TEST(Property, OracleAgreesWithBruteForce) {
  testgen::Gen g(24);
  testgen::Shape s = testgen::l35_shape();
  s.nouns = {"p", "q"};
  s.verbs = {"r"};
  s.max_depth = 1;
  for (int i = 0; i < 300; ++i) {
    std::vector<Sentence> gamma = g.theory(s, 3);
    Sentence phi = g.sentence(s);
    OracleResult r = oracle_consequence(gamma, phi, 2);
    auto n = naive::countermodel(gamma, phi, 2);
    ASSERT_EQ(r.found, n.has_value()) << phi.text();
    if (r.found) {
      ASSERT_TRUE(is_countermodel(r.countermodel, gamma, phi));
      ASSERT_TRUE(naive::holds_all(naive::from_finite(r.countermodel, naive::vocab_of(gamma)), gamma));
    }
  }
}
