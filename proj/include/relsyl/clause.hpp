// Clauses [x...] and <x...> as canonical literal sets.
#pragma once

#include <optional>
#include <vector>

#include "relsyl/syntax.hpp"

namespace relsyl {

// Strips pairs of leading negations: (not (not t)) becomes t.
Term normalize_literal(const Term& t);
// The complementary literal, with double negations stripped.
Term complement_literal(const Term& t);
bool complementary(const Term& a, const Term& b);

// [x...] when empty_meet, <x...> otherwise. Literals are kept normalized,
// sorted in canonical term order and without duplicates.
class Clause {
 public:
  Clause() = default;
  Clause(bool empty_meet, const std::vector<Term>& literals);
  static std::optional<Clause> from_sentence(const Sentence& s);

  bool empty_meet() const { return empty_meet_; }
  const std::vector<Term>& literals() const { return lits_; }
  std::size_t size() const { return lits_.size(); }
  bool contains(const Term& lit) const;
  // Every literal of this clause occurs in other (same kind).
  bool subsumes(const Clause& other) const;
  int depth() const;
  Sentence to_sentence() const;

  auto operator<=>(const Clause& other) const = default;
  bool operator==(const Clause& other) const = default;

 private:
  bool empty_meet_ = true;
  std::vector<Term> lits_;
};

// all x y -> [x (not y)], some x y -> <x y>, meets unchanged.
// Other sentence kinds are rejected with FragmentError.
Sentence embed_l45(const Sentence& s);
Clause embed_clause(const Sentence& s);

// Same meet kind and same normalized literal set.
bool same_clause(const Sentence& a, const Sentence& b);

}  // namespace relsyl
