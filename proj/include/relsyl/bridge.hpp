// Flat terms with complemented verbs, the translation of complemented verb
// literals into L5.5, and flattening of L5.5 problems with fresh nouns.
#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "relsyl/semantics.hpp"
#include "relsyl/syntax.hpp"

namespace relsyl {

enum class RStarKind : unsigned char { Noun, NounBar, AllOf, SomeOf };

// p | (not p) | (r all p) | (~r all p) | (r some p) | (~r some p)
struct RStarTerm {
  RStarKind kind = RStarKind::Noun;
  std::string noun;
  std::string verb;        // AllOf/SomeOf only
  bool complemented = false;  // verb literal ~r

  static RStarTerm make_noun(std::string p) { return {RStarKind::Noun, std::move(p), "", false}; }
  static RStarTerm noun_bar(std::string p) { return {RStarKind::NounBar, std::move(p), "", false}; }
  static RStarTerm all_of(std::string r, bool bar, std::string p) {
    return {RStarKind::AllOf, std::move(p), std::move(r), bar};
  }
  static RStarTerm some_of(std::string r, bool bar, std::string p) {
    return {RStarKind::SomeOf, std::move(p), std::move(r), bar};
  }

  auto operator<=>(const RStarTerm&) const = default;
};

struct RStarSentence {
  bool universal = true;  // all x y / some x y
  RStarTerm lhs;
  RStarTerm rhs;

  auto operator<=>(const RStarSentence&) const = default;
};

struct RStarTheory {
  Vocabulary vocab;
  std::vector<RStarSentence> sentences;
};

std::string print_rstar_term(const RStarTerm& t);
std::string print_rstar_sentence(const RStarSentence& s);
std::string print_rstar_theory(const RStarTheory& th);
// Same file format as theories; terms must be flat and verbs may carry '~'.
RStarTheory parse_rstar_theory(std::string_view text, const ParseOptions& options = {});
RStarSentence parse_rstar_sentence(std::string_view text, Vocabulary* vocab,
                                   const ParseOptions& options = {});

// ~r all x -> not (r some x), ~r some x -> not (r all x); everything else as is.
Term star_translate(const RStarTerm& t);
Sentence star_translate(const RStarSentence& s);
std::vector<Sentence> star_translate(const std::vector<RStarSentence>& sentences);

// Complemented verbs denote domain^2 minus the relation, barred nouns the
// complement. Throws std::invalid_argument on identifiers m does not declare.
ElementSet eval_rstar(const FiniteModel& m, const RStarTerm& t);
bool satisfies_rstar(const FiniteModel& m, const RStarSentence& s);

// Reserved noun for a term: '@' followed by the term in prefix order with
// '.' separators, e.g. (r all (not p)) -> @r.all.not.p.
std::string flat_name(const Term& t);

struct FlattenResult {
  RStarTheory theory;                 // gamma*: bridging rows, then renamed gamma
  RStarSentence goal;
  std::size_t bridge_rows = 0;        // leading sentences of theory.sentences
  std::map<Term, std::string> names;  // every term of gamma and phi
};

// Input must be in L5.5 (all/some sentences over noun, (r all t),
// (r some t) and (not t)); throws FragmentError otherwise.
FlattenResult flatten(const std::vector<Sentence>& gamma, const Sentence& phi);

// Same domain and symbols, plus every fresh noun interpreted as its term.
FiniteModel expand_model(const FiniteModel& m, const FlattenResult& f);
// Drops every symbol outside vocab.
FiniteModel restrict_model(const FiniteModel& m, const Vocabulary& vocab);

}  // namespace relsyl
