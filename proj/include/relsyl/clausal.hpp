// Clause-level rules, depth-bounded clausal proof search and bounded
// countermodel search, giving three-valued verdicts for L4+, L4.5+ and L5.5.
#pragma once

#include <string>
#include <vector>

#include "relsyl/clause.hpp"
#include "relsyl/syntax.hpp"
#include "relsyl/verdict.hpp"

namespace relsyl {

// RES on the pivot: c1 holds the pivot, c2 its complement, and both
// remaining literal lists are nonempty. Throws std::invalid_argument otherwise.
Clause resolve(const Clause& c1, const Clause& c2, const Term& pivot);

// REL: for every positive literal x_n of [(not x_1) ... (not x_{n-1}) x_n]
// whose other literals are all negated, the clause
// [(r all x_1) ... (r all x_{n-1}) (not (r all x_n))]. Throws
// std::invalid_argument when no literal qualifies.
std::vector<Clause> rel_expand(const Clause& c, const std::string& verb);

struct ClausalOptions {
  // Largest literal depth kept by the proof search; negative means
  // "max input depth + 2".
  int depth_bound = -1;
  // Countermodels are searched up to this domain size.
  int model_bound = 3;
  // Proof search stops (UNKNOWN unless decided otherwise) beyond this many clauses.
  std::size_t clause_cap = 20000;
  // Solver conflict budget for the countermodel search.
  long long model_budget = 1LL << 22;
  bool verify = true;
};

// Gamma and phi use all/some sentences and meets over terms built with
// (r all x) and (not x). YES carries a ClausalRules proof, NO a countermodel,
// UNKNOWN reports the exhausted bounds.
Verdict decide_clausal(const std::vector<Sentence>& gamma, const Sentence& phi,
                       const ClausalOptions& options = {});

// L5/L5.5 input: as decide_clausal, with (r some x) subterms treated as
// opaque literals by the proof search (clauses containing them are never
// expanded by REL). Deliberately incomplete.
Verdict decide_l5(const std::vector<Sentence>& gamma, const Sentence& phi,
                  const ClausalOptions& options = {});

}  // namespace relsyl
