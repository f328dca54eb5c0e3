#include <gtest/gtest.h>

#include "gen.hpp"
#include "relsyl/syntax.hpp"

using namespace relsyl;

namespace {

Term N(const std::string& p) { return Term::noun(p); }
Term All(const std::string& r, Term t) { return Term::all_of(r, std::move(t)); }
Term SomeOf(const std::string& r, Term t) { return Term::some_of(r, std::move(t)); }
Term Not(Term t) { return Term::negate(std::move(t)); }

Sentence parse(const std::string& text) {
  Vocabulary v;
  return parse_sentence(text, &v, {false, true});
}

TermSet closure_of(const std::vector<std::string>& lines) {
  std::vector<Sentence> ss;
  for (const auto& l : lines) ss.push_back(parse(l));
  return term_closure(ss);
}

}  // namespace

TEST(Parse, SingleAllSentence) {
  Theory th = parse_theory("nouns: p q\nverbs: r\nall (r all p) q");
  ASSERT_EQ(th.sentences.size(), 1u);
  EXPECT_EQ(th.sentences[0], Sentence::all(All("r", N("p")), N("q")));
  EXPECT_EQ(th.vocab.nouns, (std::set<std::string>{"p", "q"}));
  EXPECT_EQ(th.vocab.verbs, (std::set<std::string>{"r"}));
}

TEST(Parse, AlphaOfGammaFamily) {
  Theory th = parse_theory("nouns: a b\nverbs: r1 r2\nsome (r1 all (r1 all a)) (r1 all (r1 all a))");
  Term t = All("r1", All("r1", N("a")));
  ASSERT_EQ(th.sentences.size(), 1u);
  EXPECT_EQ(th.sentences[0], Sentence::some(t, t));
  EXPECT_EQ(th.vocab.verbs.count("r2"), 1u);
}

TEST(Parse, UndeclaredIdentifierReportsPosition) {
  try {
    parse_theory("nouns: p\nall p q");
    FAIL() << "expected a parse error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2);
    EXPECT_EQ(e.column(), 7);
    EXPECT_NE(e.detail().find("q"), std::string::npos);
  }
}

TEST(Parse, Errors) {
  EXPECT_THROW(parse_theory("nouns: p\nall p"), ParseError);
  EXPECT_THROW(parse_theory("nouns: p\nverbs: r\nall (r p) p"), ParseError);
  EXPECT_THROW(parse_theory("nouns: p\n[ ]"), ParseError);
  EXPECT_THROW(parse_theory("nouns: p\nall p p extra"), ParseError);
  EXPECT_THROW(parse_theory("nouns: p $"), ParseError);
  EXPECT_THROW(parse_theory("nouns: p\nverbs: p\n"), ParseError);
  EXPECT_THROW(parse_theory("nouns: @p\n"), ParseError);
}

TEST(Parse, ReservedIdentifiersOnlyWhenAllowed) {
  Vocabulary v;
  EXPECT_THROW(parse_term("@r.all.p", &v, {false, true}), ParseError);
  Term t = parse_term("@r.all.p", &v, {true, true});
  EXPECT_EQ(t.text(), "@r.all.p");
  EXPECT_TRUE(is_reserved_identifier("@x"));
  EXPECT_FALSE(is_identifier("@x"));
  EXPECT_TRUE(is_identifier("p_1'"));
}

TEST(Parse, CommentsDuplicatesAndUnusedDeclarations) {
  Theory th = parse_theory("# header\nnouns: p q unused\nall p q  # trailing\nall p q\n");
  EXPECT_EQ(th.sentences.size(), 1u);
  EXPECT_EQ(th.warnings.size(), 1u);
  EXPECT_EQ(th.vocab.nouns.count("unused"), 1u);
}

TEST(Print, Examples) {
  EXPECT_EQ(print_sentence(Sentence::all(N("p"), All("r", N("q")))), "all p (r all q)");
  EXPECT_EQ(print_sentence(Sentence::empty_meet({N("p"), Not(N("q"))})), "[ p (not q) ]");
  EXPECT_EQ(print_sentence(Sentence::all_or_some(N("a"), N("b"), N("x"), N("y"))),
            "all a b or some x y");
  EXPECT_EQ(print_sentence(Sentence::nonempty_meet({N("q"), N("p")})), "< q p >");
  EXPECT_EQ(print_term(SomeOf("r", Not(N("p")))), "(r some (not p))");
}

TEST(Print, TheoryRoundTrip) {
  std::string text = "nouns: a b\nverbs: r\nall a (r all b)\nsome a b\n[ a (not b) ]\n";
  Theory th = parse_theory(text);
  Theory again = parse_theory(print_theory(th));
  EXPECT_EQ(again.sentences, th.sentences);
  EXPECT_EQ(again.vocab, th.vocab);
}

TEST(Closure, ExampleFromTheRelationalChapter) {
  TermSet t = closure_of({"all x y", "all y z", "all (r all z) (r all x)"});
  TermSet want{N("x"), N("y"), N("z"), All("r", N("z")), All("r", N("x"))};
  EXPECT_EQ(t, want);
}

TEST(Closure, EmptyAndNested) {
  EXPECT_TRUE(term_closure({}).empty());
  TermSet t = closure_of({"some p (r some (not q))"});
  TermSet want{N("p"), N("q"), Not(N("q")), SomeOf("r", Not(N("q")))};
  EXPECT_EQ(t, want);
}

TEST(Closure, ExtendedTerms) {
  std::vector<Sentence> d{parse("all x y"), parse("all y z"), parse("all (r all z) (r all x)")};
  TermSet plus = extended_terms(d);
  EXPECT_TRUE(plus.count(All("r", N("y"))));
  EXPECT_TRUE(plus.count(All("r", N("x"))));
  EXPECT_TRUE(plus.count(All("r", All("r", N("x")))));
  EXPECT_EQ(extended_terms({parse("all p q")}), closure_of({"all p q"}));
  TermSet one = extended_terms({parse("all p (r all p)")});
  EXPECT_EQ(one, (TermSet{N("p"), All("r", N("p")), All("r", All("r", N("p")))}));
}

TEST(Fragments, Classification) {
  auto frag = [](std::vector<std::string> lines) {
    std::vector<Sentence> ss;
    for (const auto& l : lines) ss.push_back(parse(l));
    return fragment_of(ss);
  };
  EXPECT_EQ(frag({"all p (r all q)"}), Fragment::L1);
  EXPECT_EQ(frag({"all p q", "some p q"}), Fragment::L2);
  EXPECT_EQ(frag({"all p q or some p p"}), Fragment::L2Plus);
  EXPECT_EQ(frag({"all p (r some q)"}), Fragment::L3);
  EXPECT_EQ(frag({"all p (r some q)", "some p p"}), Fragment::L3Half);
  EXPECT_EQ(frag({"all p (not q)"}), Fragment::L4);
  EXPECT_EQ(frag({"all p (not q)", "some p q"}), Fragment::L4Half);
  EXPECT_EQ(frag({"[ p q ]"}), Fragment::L4Plus);
  EXPECT_EQ(frag({"< p q >"}), Fragment::L4HalfPlus);
  EXPECT_EQ(frag({"all (r some p) (not q)"}), Fragment::L5);
  EXPECT_EQ(frag({"some (r some p) (not q)"}), Fragment::L5Half);
  EXPECT_EQ(frag({"all p q or some p p", "all p (not q)"}), std::nullopt);
  EXPECT_EQ(frag({}), Fragment::L1);
}

TEST(Fragments, NamesAndInclusion) {
  EXPECT_EQ(parse_fragment("L3.5"), Fragment::L3Half);
  EXPECT_EQ(parse_fragment("L4.5+"), Fragment::L4HalfPlus);
  EXPECT_EQ(parse_fragment("L2Plus"), Fragment::L2Plus);
  EXPECT_EQ(parse_fragment("L9"), std::nullopt);
  EXPECT_TRUE(includes(Fragment::L5Half, Fragment::L3Half));
  EXPECT_TRUE(includes(Fragment::L4HalfPlus, Fragment::L4Half));
  EXPECT_FALSE(includes(Fragment::L3, Fragment::L2));
  EXPECT_FALSE(includes(Fragment::L5Half, Fragment::L2Plus));
  EXPECT_FALSE(includes(Fragment::RStarDagger, Fragment::L1));
}

// Random ASTs up to depth 4, all sentence kinds.
TEST(Property, ParsePrintRoundTrip) {
  testgen::Gen g(11);
  testgen::Shape s;
  s.max_depth = 4;
  s.some_of = s.negation = s.some = s.disjunction = true;
  for (int i = 0; i < 2000; ++i) {
    Sentence x;
    switch (g.uniform(0, 2)) {
      case 0: x = g.sentence(s); break;
      case 1: x = g.meet(s, true, 4); break;
      default: x = g.meet(s, false, 4); break;
    }
    Vocabulary v;
    v.nouns = {"p", "q", "s"};
    v.verbs = {"r", "t"};
    Sentence y = parse_sentence(print_sentence(x), &v);
    ASSERT_EQ(x, y) << print_sentence(x);
    ASSERT_EQ(print_sentence(y), print_sentence(x));
  }
}

TEST(Property, ClosureInvariants) {
  testgen::Gen g(12);
  testgen::Shape s = testgen::l55_shape();
  s.max_depth = 3;
  for (int i = 0; i < 500; ++i) {
    std::vector<Sentence> d = g.theory(s, 4);
    TermSet t = term_closure(d);
    for (const Term& x : t) {
      for (const Term& u : subterms(x)) ASSERT_TRUE(t.count(u));
    }
    std::size_t verbs = verbs_in(d).size();
    TermSet plus = extended_terms(d);
    TermSet plus_some = extended_terms(d, true);
    for (const Term& x : t) ASSERT_TRUE(plus.count(x));
    ASSERT_LE(plus.size(), t.size() * (1 + verbs));
    ASSERT_LE(plus_some.size(), t.size() * (1 + 2 * verbs));
  }
}

TEST(Property, FragmentMonotone) {
  testgen::Gen g(13);
  testgen::Shape s = testgen::l55_shape();
  s.disjunction = true;
  for (int i = 0; i < 1000; ++i) {
    std::vector<Sentence> d = g.theory(s, 3);
    auto f = fragment_of(d);
    d.push_back(g.sentence(s));
    auto f2 = fragment_of(d);
    if (!f) {
      ASSERT_FALSE(f2.has_value());
    } else if (f2) {
      ASSERT_TRUE(includes(*f2, *f)) << fragment_name(*f) << " -> " << fragment_name(*f2);
    }
  }
}
