#include <gtest/gtest.h>

#include <set>

#include "relsyl/corpus.hpp"
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

ElementSet one_point(bool full) { return full ? ElementSet::full(1) : ElementSet(1); }

std::vector<std::string> verbs_from(int n, std::uint64_t code, int len) {
  std::vector<std::string> out;
  for (int i = 0; i < len; ++i) {
    out.push_back(gamma_verb(static_cast<int>(code % n) + 1));
    code /= n;
  }
  return out;
}

}  // namespace

TEST(GammaFamily, Shape) {
  for (int n = 1; n <= 6; ++n) EXPECT_EQ(gen_gamma_n(n).sentences.size(), static_cast<std::size_t>(n + 1));
  Theory g2 = gen_gamma_n(2);
  EXPECT_EQ(g2.sentences[0], S("some (r1 all (r1 all a)) (r1 all (r1 all a))"));
  EXPECT_EQ(g2.sentences[1], S("all (r1 all b) (r2 all (r2 all a))"));
  EXPECT_EQ(g2.sentences[2], S("all (r2 all b) a"));
  Theory d = gen_delta_ni(2, 2);
  EXPECT_EQ(d.sentences, (std::vector<Sentence>{g2.sentences[0], g2.sentences[1]}));
  EXPECT_EQ(gen_delta_ni(3, 1).sentences.size(), 3u);
  EXPECT_THROW(gen_gamma_n(0), std::out_of_range);
  EXPECT_THROW(gen_delta_ni(3, 4), std::out_of_range);
  EXPECT_THROW(gen_delta_ni(3, 0), std::out_of_range);
}

TEST(Fixtures, OnePointModels) {
  for (int n = 1; n <= 4; ++n) {
    FiniteModel m1 = fixture_m1(n), m2 = fixture_m2(n);
    EXPECT_TRUE(satisfies_all(m1, gen_delta_ni(n, n).sentences));
    for (int len = 0; len <= 4; ++len) {
      std::uint64_t total = 1;
      for (int i = 0; i < len; ++i) total *= n;
      for (std::uint64_t c = 0; c < total; ++c) {
        auto sv = verbs_from(n, c, len);
        bool even = len % 2 == 0;
        ASSERT_EQ(eval_term(m1, all_chain_term(sv, T("a"))), one_point(even));
        ASSERT_EQ(eval_term(m1, all_chain_term(sv, T("b"))), one_point(even));
        ASSERT_EQ(eval_term(m2, all_chain_term(sv, T("a"))), one_point(even));
        ASSERT_EQ(eval_term(m2, all_chain_term(sv, T("b"))), one_point(!even));
      }
    }
  }
}

TEST(Fixtures, LoopModels) {
  for (int n = 1; n <= 4; ++n) {
    for (int i = 1; i <= n; ++i) {
      FiniteModel m = fixture_m3(n, i);
      EXPECT_FALSE(satisfies(m, S("some a a")));
      for (int j = 1; j <= n; ++j) {
        std::string r = gamma_verb(j);
        EXPECT_EQ(eval_term(m, T("(" + r + " all a)")), one_point(true));
        EXPECT_EQ(eval_term(m, T("(" + r + " all (" + r + " all a))")), one_point(j <= i));
        EXPECT_EQ(eval_term(m, T("(" + r + " all b)")), one_point(j <= i));
      }
    }
  }
}

TEST(Fixtures, SubcaseSelection) {
  EXPECT_EQ(m4_subcase_for(3, {"r1", "r2"}), M4Subcase::A);
  EXPECT_EQ(m4_subcase_for(3, {"r2", "r1"}), M4Subcase::B);
  EXPECT_EQ(m4_subcase_for(3, {"r3", "r1", "r1"}), std::nullopt);
  EXPECT_EQ(m4_subcase_for(3, {"r3", "r3", "r1", "r1"}), M4Subcase::C);
  EXPECT_EQ(m4_subcase_for(3, {"r1", "r1"}), std::nullopt);
  EXPECT_EQ(m4_subcase_for(3, {}), std::nullopt);
  EXPECT_EQ(m4_subcase_for(3, {"r4", "r4"}), std::nullopt);
}

TEST(Fixtures, FourPointModels) {
  FiniteModel m = fixture_m4(3, {"r3", "r2"}, M4Subcase::A);
  ASSERT_EQ(m.size(), 4u);
  EXPECT_EQ(m.labels(), (std::vector<std::string>{"w", "x", "y", "z"}));
  EXPECT_TRUE(satisfies_all(m, gen_gamma_n(3).sentences));
  EXPECT_FALSE(satisfies(m, S("some a (r1 all (r1 all a))")));
  EXPECT_TRUE(eval_term(m, T("(r3 all (r2 all a))")).empty());
  for (int j = 1; j <= 3; ++j) EXPECT_TRUE(eval_term(m, T("(" + gamma_verb(j) + " all b)")).empty());
  EXPECT_THROW(fixture_m4(3, {"r1", "r1"}, M4Subcase::C), std::invalid_argument);
}

TEST(OneInThree, EncodingShape) {
  Encoding e = encode_one_in_three({3, {{1, 2, 3}}});
  EXPECT_EQ(e.goal, S("all start finish"));
  // six clause sentences and one per ordered variable pair
  EXPECT_EQ(e.theory.sentences.size(), 12u);
  std::set<std::string> fresh;
  for (const auto& p : e.theory.vocab.nouns)
    if (p.rfind("x", 0) != 0) fresh.insert(p);
  EXPECT_EQ(fresh.size(), 4u);
  EXPECT_EQ(e.theory.vocab.verbs.size(), 9u);
  EXPECT_EQ(fragment_of(e.theory.sentences), Fragment::L3);
  EXPECT_THROW(encode_one_in_three({3, {{1, 1, 2}}}), std::invalid_argument);
  EXPECT_THROW(encode_one_in_three({3, {{1, 2, 4}}}), std::invalid_argument);
}

TEST(OneInThree, Check) {
  EXPECT_TRUE(one_in_three_check({3, {{1, 2, 3}}}).has_value());
  auto w = one_in_three_check({4, {{1, 2, 3}, {1, 2, 4}}});
  ASSERT_TRUE(w.has_value());
  EXPECT_EQ((*w)[0] + (*w)[1] + (*w)[2], 1);
  EXPECT_FALSE(one_in_three_check({4, {{1, 2, 3}, {1, 2, 4}, {1, 3, 4}, {2, 3, 4}}}).has_value());
}

TEST(ThreeSat, EncodingShape) {
  Encoding e = encode_3sat({2, {{1, -2, 2}}});
  EXPECT_EQ(e.goal, S("all q (not q)"));
  EXPECT_TRUE(e.theory.vocab.nouns.count("x1"));
  EXPECT_TRUE(e.theory.vocab.nouns.count("q"));
  EXPECT_EQ(fragment_of(e.theory.sentences), Fragment::L4);
  EXPECT_THROW(encode_3sat({1, {{1, 0, 1}}}), std::invalid_argument);
}

TEST(ThreeSat, BruteForce) {
  EXPECT_FALSE(brute_sat({1, {{1, 1, 1}, {-1, -1, -1}}}).has_value());
  auto e = brute_sat({0, {}});
  ASSERT_TRUE(e.has_value());
  EXPECT_TRUE(e->empty());
  auto w = brute_sat({3, {{1, 2, 3}, {-1, -1, -1}, {-2, -2, -2}}});
  ASSERT_TRUE(w.has_value());
  EXPECT_EQ(*w, (std::vector<bool>{false, false, true}));
  EXPECT_THROW(brute_sat({21, {{1, 2, 21}}}), std::length_error);
}

TEST(Dimacs, RoundTrip) {
  CnfInstance f{3, {{1, -2, 3}, {-1, 2, -3}}};
  std::string text = print_dimacs(f);
  EXPECT_EQ(text.rfind("p cnf 3 2", 0), 0u);
  CnfInstance g = parse_dimacs(text);
  EXPECT_EQ(g.variables, 3);
  EXPECT_EQ(g.clauses, f.clauses);
  CnfInstance h = parse_dimacs("c comment\n1 2 -3 0\n");
  EXPECT_EQ(h.variables, 3);
  EXPECT_THROW(parse_dimacs("1 2 0\n"), std::invalid_argument);
  OneInThreeInstance o = parse_one_in_three("p cnf 3 1\n1 2 3 0\n");
  EXPECT_EQ(o.clauses.size(), 1u);
  EXPECT_THROW(parse_one_in_three("1 -2 3 0\n"), std::invalid_argument);
}
