// Terms, sentences and theories of the relational syllogistic languages,
// together with the text format reader/printer and fragment classification.
#pragma once

#include <compare>
#include <cstddef>
#include <memory>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace relsyl {

enum class TermKind : unsigned char { Noun, AllOf, SomeOf, Not };

// Immutable term tree. Copies share structure. Ordering and equality follow
// the printed form, which is the canonical term order used everywhere.
class Term {
 public:
  Term() = default;

  static Term noun(std::string name);
  static Term all_of(std::string verb, Term body);
  static Term some_of(std::string verb, Term body);
  static Term negate(Term body);

  bool is_null() const { return node_ == nullptr; }
  TermKind kind() const;
  // Noun name for nouns, verb name for AllOf/SomeOf, empty for Not.
  const std::string& name() const;
  Term body() const;
  const std::string& text() const;
  int depth() const;
  std::size_t hash() const;

  bool operator==(const Term& other) const;
  std::strong_ordering operator<=>(const Term& other) const;

 private:
  struct Node;
  explicit Term(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

enum class SentenceKind : unsigned char { All, Some, AllOrSome, EmptyMeet, NonemptyMeet };

// all x y | some x y | all a b or some x y | [ x... ] | < x... >
class Sentence {
 public:
  Sentence() = default;

  static Sentence all(Term x, Term y);
  static Sentence some(Term x, Term y);
  static Sentence all_or_some(Term a, Term b, Term x, Term y);
  static Sentence empty_meet(std::vector<Term> terms);
  static Sentence nonempty_meet(std::vector<Term> terms);
  static Sentence make(SentenceKind kind, std::vector<Term> terms);

  bool is_null() const { return data_ == nullptr; }
  SentenceKind kind() const;
  const std::vector<Term>& terms() const;
  const Term& term(std::size_t i) const { return terms()[i]; }
  const Term& lhs() const { return term(0); }
  const Term& rhs() const { return term(1); }
  const std::string& text() const;
  std::size_t hash() const;

  bool operator==(const Sentence& other) const;
  std::strong_ordering operator<=>(const Sentence& other) const;

 private:
  struct Data;
  explicit Sentence(std::shared_ptr<const Data> data) : data_(std::move(data)) {}
  std::shared_ptr<const Data> data_;
};

using TermSet = std::set<Term>;
using SentenceSet = std::set<Sentence>;

struct Vocabulary {
  std::set<std::string> nouns;
  std::set<std::string> verbs;

  bool operator==(const Vocabulary&) const = default;
};

struct Theory {
  Vocabulary vocab;
  std::vector<Sentence> sentences;
  std::vector<std::string> warnings;

  // Adds a sentence unless already present. Returns false for duplicates.
  bool add(const Sentence& s);
  bool contains(const Sentence& s) const;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, int column, const std::string& message);
  int line() const { return line_; }
  int column() const { return column_; }
  const std::string& detail() const { return detail_; }

 private:
  int line_;
  int column_;
  std::string detail_;
};

struct ParseOptions {
  // Accept generated identifiers beginning with '@'.
  bool allow_reserved = false;
  // Declare identifiers on first use instead of rejecting them.
  bool declare_unknown = false;
};

Theory parse_theory(std::string_view text, const ParseOptions& options = {});
// With declare_unknown set, new identifiers are added to *vocab.
Term parse_term(std::string_view text, Vocabulary* vocab, const ParseOptions& options = {});
Sentence parse_sentence(std::string_view text, Vocabulary* vocab,
                        const ParseOptions& options = {});

std::string print_term(const Term& t);
std::string print_sentence(const Sentence& s);
std::string print_theory(const Theory& theory);

bool is_identifier(std::string_view s);
bool is_reserved_identifier(std::string_view s);

enum class Fragment {
  L1, L2, L2Plus, L3, L3Half, L4, L4Half, L4Plus, L4HalfPlus, L5, L5Half, RStarDagger
};

std::string fragment_name(Fragment f);
std::optional<Fragment> parse_fragment(std::string_view name);
// Containment of fragments as languages.
bool includes(Fragment big, Fragment small);
// Least fragment containing every sentence, or nullopt if none does
// (for instance a disjunctive sentence next to a negated term).
std::optional<Fragment> fragment_of(const std::vector<Sentence>& sentences);
std::optional<Fragment> fragment_of(const Theory& theory);

// Subterm closure of the terms occurring in the sentences.
TermSet term_closure(const std::vector<Sentence>& sentences);
TermSet subterms(const Term& t);
std::set<std::string> verbs_in(const std::vector<Sentence>& sentences);
std::set<std::string> nouns_in(const std::vector<Sentence>& sentences);
std::set<std::string> verbs_in(const Term& t);
std::set<std::string> nouns_in(const Term& t);

// T plus (r all w) for w in T and every verb r occurring in the sentences;
// with_some_of also adds (r some w).
TermSet extended_terms(const std::vector<Sentence>& sentences, bool with_some_of = false);
// Same closure step over an explicit term set and verb list.
TermSet extend_terms(const TermSet& terms, const std::set<std::string>& verbs,
                     bool with_some_of = false);

int max_depth(const std::vector<Sentence>& sentences);

}  // namespace relsyl

template <>
struct std::hash<relsyl::Term> {
  std::size_t operator()(const relsyl::Term& t) const noexcept { return t.hash(); }
};

template <>
struct std::hash<relsyl::Sentence> {
  std::size_t operator()(const relsyl::Sentence& s) const noexcept { return s.hash(); }
};
