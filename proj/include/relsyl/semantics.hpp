// Finite relational models, evaluation of terms and sentences, and the
// bounded countermodel search used as an independent consequence oracle.
#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "relsyl/syntax.hpp"

namespace relsyl {

// Subset of a domain {0, ..., universe-1}.
class ElementSet {
 public:
  ElementSet() = default;
  explicit ElementSet(std::size_t universe);
  static ElementSet full(std::size_t universe);

  std::size_t universe() const { return n_; }
  bool test(std::size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1U; }
  void set(std::size_t i, bool on = true);
  bool empty() const;
  std::size_t count() const;
  bool subset_of(const ElementSet& other) const;
  bool intersects(const ElementSet& other) const;
  ElementSet complement() const;
  ElementSet& operator&=(const ElementSet& other);
  ElementSet& operator|=(const ElementSet& other);
  friend ElementSet operator&(ElementSet a, const ElementSet& b) { return a &= b; }
  friend ElementSet operator|(ElementSet a, const ElementSet& b) { return a |= b; }
  std::vector<std::size_t> elements() const;
  bool operator==(const ElementSet& other) const = default;

 private:
  std::size_t n_ = 0;
  std::vector<std::uint64_t> w_;
};

class FiniteModel {
 public:
  FiniteModel() = default;
  // Domain labelled "0" .. "size-1".
  explicit FiniteModel(std::size_t size);
  explicit FiniteModel(std::vector<std::string> labels);

  std::size_t size() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  std::optional<std::size_t> index_of(std::string_view label) const;

  void set_noun(const std::string& p, ElementSet s);
  void add_to_noun(const std::string& p, std::size_t e);
  void declare_noun(const std::string& p);
  void declare_verb(const std::string& r);
  void add_pair(const std::string& r, std::size_t a, std::size_t b);

  // Symbols the model does not mention are interpreted as empty.
  const ElementSet& noun(const std::string& p) const;
  const ElementSet& successors(const std::string& r, std::size_t a) const;
  bool related(const std::string& r, std::size_t a, std::size_t b) const;

  std::vector<std::string> noun_names() const;
  std::vector<std::string> verb_names() const;

  bool operator==(const FiniteModel& other) const;

 private:
  std::vector<std::string> labels_;
  std::map<std::string, ElementSet> nouns_;
  std::map<std::string, std::vector<ElementSet>> verbs_;
  ElementSet empty_;
};

ElementSet eval_term(const FiniteModel& m, const Term& t);
bool satisfies(const FiniteModel& m, const Sentence& s);
bool satisfies_all(const FiniteModel& m, const std::vector<Sentence>& sentences);
// Model of gamma in which phi is false.
bool is_countermodel(const FiniteModel& m, const std::vector<Sentence>& gamma, const Sentence& phi);

struct OracleOptions {
  // Cap on solver conflicts summed over all domain sizes.
  long long budget = 1LL << 24;
};

struct OracleResult {
  bool found = false;
  FiniteModel countermodel;  // meaningful when found
  int bound = 0;             // largest domain size searched
};

// Exhaustive search for a countermodel to gamma |= phi with at most
// max_size elements. Non-empty sizes are tried in increasing order and the
// empty domain last. Within one size the result is the first model in the
// enumeration order: nouns by name, then verbs by name, each extension read
// as a binary number with element i (pair a*size+b) as bit i, compared
// most significant component first.
OracleResult oracle_consequence(const std::vector<Sentence>& gamma, const Sentence& phi,
                                int max_size, const OracleOptions& options = {});

// First model (same order) of exactly `size` elements, over the symbols of
// the given sentences, making every `hold` sentence true and every `fail`
// sentence false. Throws BudgetError when the conflict budget runs out.
std::optional<FiniteModel> first_model(const std::vector<Sentence>& hold,
                                       const std::vector<Sentence>& fail, int size,
                                       long long* budget);

// Deterministic pseudo-random model: size uniform in [0, max_domain], every
// membership and pair decided by a fair coin.
FiniteModel random_model(const Vocabulary& vocab, int max_domain, std::uint64_t seed);

}  // namespace relsyl
