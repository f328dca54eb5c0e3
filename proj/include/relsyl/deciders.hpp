// Certifying consequence deciders for L1, L2+, L3 and L3.5, and the
// canonical models behind their countermodels.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "relsyl/saturation.hpp"
#include "relsyl/semantics.hpp"
#include "relsyl/syntax.hpp"
#include "relsyl/verdict.hpp"

namespace relsyl {

struct DecideOptions {
  // L3/L3.5 branch saturation works over the goal's terms extended this
  // many times by (r all t) and (r some t).
  int depth_slack = 1;
  // Cap on branch-tree nodes visited before BudgetError.
  std::size_t branch_cap = 1u << 20;
  // Re-check YES certificates before returning them.
  bool verify = true;
};

Verdict decide_l1(const std::vector<Sentence>& gamma, const Sentence& phi,
                  const DecideOptions& options = {});
Verdict decide_l2plus(const std::vector<Sentence>& gamma, const Sentence& phi,
                      const DecideOptions& options = {});
Verdict decide_l35(const std::vector<Sentence>& gamma, const Sentence& phi,
                   const DecideOptions& options = {});
Verdict decide_l3(const std::vector<Sentence>& gamma, const Sentence& phi,
                  const DecideOptions& options = {});

// Closure of gamma under the base rules over all t u (t in T, u in T+) and
// some t u (t, u in T); this realizes t <= u for the pair models.
SaturationResult base_closure(const std::vector<Sentence>& gamma, const TermSet& terms);

// Domain: unordered pairs {t,u} of T. {t,u} in p iff t <= p or u <= p;
// {t,u} r {v,w} iff a <= (r all b) for some a in {t,u}, b in {v,w}.
FiniteModel build_pair_model(const SaturationResult& closure, const TermSet& terms,
                             const Vocabulary& vocab);
// The same over the pairs {t,u} with some t u derivable.
FiniteModel build_pair_model_restricted(const SaturationResult& closure, const TermSet& terms,
                                        const Vocabulary& vocab);
// Convenience overloads computing base_closure(gamma, terms) first.
FiniteModel build_pair_model(const std::vector<Sentence>& gamma, const TermSet& terms,
                             const Vocabulary& vocab);
FiniteModel build_pair_model_restricted(const std::vector<Sentence>& gamma, const TermSet& terms,
                                        const Vocabulary& vocab);

enum class ExistentialFlavor { L2, L3 };

struct ExistentialWitness {
  Term x;
  Term y;
  std::string verb;  // empty when the failure does not involve a verb
};

struct DeterminesResult {
  bool holds = true;
  std::optional<ExistentialWitness> witness;  // first failure in canonical order
};

// L2: for all verbs r and x, y in T, some x x or all y (r all x) is
// derivable in the base system. L3: every x in T is effectively empty or
// effectively nonempty in the L3 rules without case splits. Provability is
// bounded: saturation over T extended once by (r all t) and (r some t).
DeterminesResult determines_existentials(const std::vector<Sentence>& gamma, const TermSet& terms,
                                         const std::set<std::string>& verbs,
                                         ExistentialFlavor flavor);

}  // namespace relsyl
