#include "gen.hpp"

namespace testgen {

using relsyl::Sentence;
using relsyl::Term;

Shape l1_shape() {
  Shape s;
  s.max_depth = 2;
  return s;
}

Shape l2plus_shape() {
  Shape s;
  s.some = true;
  s.disjunction = true;
  return s;
}

Shape l3_shape() {
  Shape s;
  s.some_of = true;
  return s;
}

Shape l35_shape() {
  Shape s;
  s.some_of = true;
  s.some = true;
  return s;
}

Shape l55_shape() {
  Shape s;
  s.some_of = true;
  s.negation = true;
  s.some = true;
  return s;
}

Shape l45plus_shape() {
  Shape s;
  s.negation = true;
  s.some = true;
  return s;
}

int Gen::uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

bool Gen::coin(double p) { return std::bernoulli_distribution(p)(rng_); }

Term Gen::term(const Shape& s, int depth) {
  std::vector<int> forms{0};
  if (depth > 0 && !s.verbs.empty()) {
    if (s.all_of) forms.push_back(1);
    if (s.some_of) forms.push_back(2);
  }
  if (depth > 0 && s.negation) forms.push_back(3);
  // Keep nouns common so that sentences share terms.
  int form = coin(0.45) ? 0 : pick(forms);
  switch (form) {
    case 1: return Term::all_of(pick(s.verbs), term(s, depth - 1));
    case 2: return Term::some_of(pick(s.verbs), term(s, depth - 1));
    case 3: return Term::negate(term(s, depth - 1));
    default: return Term::noun(pick(s.nouns));
  }
}

Sentence Gen::all(const Shape& s) { return Sentence::all(term(s), term(s)); }

Sentence Gen::some(const Shape& s) { return Sentence::some(term(s), term(s)); }

Sentence Gen::sentence(const Shape& s) {
  std::vector<int> kinds{0};
  if (s.some) kinds.push_back(1);
  if (s.disjunction) kinds.push_back(2);
  switch (pick(kinds)) {
    case 1: return some(s);
    case 2: return Sentence::all_or_some(term(s), term(s), term(s), term(s));
    default: return all(s);
  }
}

Sentence Gen::meet(const Shape& s, bool empty_meet, int max_literals) {
  std::vector<Term> lits;
  int k = uniform(1, max_literals);
  for (int i = 0; i < k; ++i) lits.push_back(term(s));
  return empty_meet ? Sentence::empty_meet(lits) : Sentence::nonempty_meet(lits);
}

std::vector<Sentence> Gen::theory(const Shape& s, int max_sentences) {
  std::vector<Sentence> out;
  int k = uniform(0, max_sentences);
  for (int i = 0; i < k; ++i) {
    Sentence x = sentence(s);
    bool dup = false;
    for (const auto& y : out) dup = dup || y == x;
    if (!dup) out.push_back(x);
  }
  return out;
}

relsyl::FiniteModel Gen::model(const relsyl::Vocabulary& v, int max_size) {
  return relsyl::random_model(v, max_size, rng_());
}

relsyl::Substitution Gen::substitution(const relsyl::RuleTemplate& rule, const Shape& s) {
  relsyl::Substitution sub;
  for (std::size_t i = 0; i < rule.term_vars.size(); ++i) sub.terms.push_back(term(s));
  for (std::size_t i = 0; i < rule.verb_vars.size(); ++i) sub.verbs.push_back(pick(s.verbs));
  return sub;
}

relsyl::Vocabulary vocab_of(const std::vector<Sentence>& ss) {
  relsyl::Vocabulary v;
  v.nouns = relsyl::nouns_in(ss);
  v.verbs = relsyl::verbs_in(ss);
  return v;
}

relsyl::Vocabulary shape_vocab(const Shape& s) {
  relsyl::Vocabulary v;
  v.nouns.insert(s.nouns.begin(), s.nouns.end());
  v.verbs.insert(s.verbs.begin(), s.verbs.end());
  return v;
}

}  // namespace testgen
