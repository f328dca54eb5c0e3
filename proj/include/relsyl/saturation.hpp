// Bounded forward-chaining saturation of a theory under template rules.
#pragma once

#include <memory>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "relsyl/proofs.hpp"
#include "relsyl/syntax.hpp"

namespace relsyl {

// Sentences of one kind whose i-th term ranges over positions[i]. For
// disjunctive sentences the last two terms may instead be restricted to an
// explicit list of pairs.
struct SentenceFamily {
  SentenceKind kind = SentenceKind::All;
  std::vector<TermSet> positions;
  std::optional<std::set<std::pair<Term, Term>>> last_pairs;
};

// Finite candidate set: a union of pairwise disjoint families.
class SentenceUniverse {
 public:
  SentenceUniverse() = default;
  explicit SentenceUniverse(std::string origin) : origin_(std::move(origin)) {}

  void add_family(SentenceFamily f) { families_.push_back(std::move(f)); }
  const std::vector<SentenceFamily>& families() const { return families_; }
  const std::string& origin() const { return origin_; }

  bool contains(const Sentence& s) const;
  std::size_t size() const;
  // Every member, in canonical order. Intended for small universes.
  std::vector<Sentence> members() const;
  TermSet terms() const;

 private:
  std::string origin_;
  std::vector<SentenceFamily> families_;
};

// all u v with u in T, v in T+ (T the subterm closure of delta).
SentenceUniverse g1(const std::vector<Sentence>& delta);
// all x y (x in T, y in T+); some u v (u, v in T);
// all x y or some u v (x, u, v in T, y in T+).
SentenceUniverse g2plus(const std::vector<Sentence>& delta);
// g2plus with the disjunctive family cut down to the last-pair list given.
SentenceUniverse g2plus_restricted(const std::vector<Sentence>& delta,
                                   const std::set<std::pair<Term, Term>>& last_pairs);
// all x y for x, y in terms, and some x y as well when with_some is set.
SentenceUniverse square_universe(const TermSet& terms, bool with_some);

struct SaturationOptions {
  // Stop as soon as this sentence is derived.
  std::optional<Sentence> stop_at;
};

class SaturationEngine;

class SaturationResult {
 public:
  struct Derivation {
    std::string rule;  // "PREMISE" for members of the input
    std::vector<Sentence> premises;
    int round = 0;
  };

  SaturationResult();
  ~SaturationResult();
  SaturationResult(const SaturationResult& other);
  SaturationResult& operator=(const SaturationResult& other);
  SaturationResult(SaturationResult&&) noexcept;
  SaturationResult& operator=(SaturationResult&&) noexcept;

  bool contains(const Sentence& s) const;
  bool contains(SentenceKind kind, const std::vector<Term>& terms) const;
  std::size_t size() const;
  std::vector<Sentence> derived() const;
  // Rounds that produced new sentences.
  int rounds() const;
  std::size_t universe_size() const;
  std::optional<Derivation> derivation_of(const Sentence& s) const;
  // Proof tree (shared subproofs) from the recorded first derivations.
  ProofPtr extract_proof(const Sentence& s) const;
  // Saturation of the input plus extra premises, continuing from this one.
  SaturationResult extend(const std::vector<Sentence>& extra,
                          const SaturationOptions& options = {}) const;

 private:
  friend SaturationResult saturate(const std::vector<Sentence>&, const std::vector<RuleTemplate>&,
                                   const SentenceUniverse&, const SaturationOptions&);
  std::unique_ptr<SaturationEngine> engine_;
};

// Closure of gamma (restricted to the universe) under the rules, keeping
// only conclusions inside the universe. The first derivation recorded for a
// sentence is the one found in the earliest round, ties broken by rule name
// and then by the premises' derivation order.
SaturationResult saturate(const std::vector<Sentence>& gamma, const std::vector<RuleTemplate>& rules,
                          const SentenceUniverse& universe, const SaturationOptions& options = {});
SaturationResult saturate(const std::vector<Sentence>& gamma, RuleSet rules,
                          const SentenceUniverse& universe, const SaturationOptions& options = {});

}  // namespace relsyl
