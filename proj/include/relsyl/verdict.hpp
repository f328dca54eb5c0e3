// Three-valued decision results and their certificates.
#pragma once

#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "relsyl/proofs.hpp"
#include "relsyl/semantics.hpp"
#include "relsyl/syntax.hpp"

namespace relsyl {

enum class Answer { Yes, No, Unknown };

std::string answer_name(Answer a);

// Which case packages a certificate's branches use.
enum class CaseFlavor {
  Existential,  // some t t  |  all t u, all u (r all t)
  Effective     // all (r all t) (r some t)  |  all t u, all u (r all t)
};

// A branch fixes emptiness for a prefix of the certificate's term list.
struct CaseBranch {
  std::vector<std::pair<Term, bool>> assignment;  // true = nonempty
  std::vector<Sentence> branch_theory;
  ProofPtr proof;
};

struct CaseCertificate {
  CaseFlavor flavor = CaseFlavor::Existential;
  std::vector<Term> terms;
  std::vector<std::string> verbs;
  std::vector<CaseBranch> branches;
};

// Sentences a branch assumes for one term.
std::vector<Sentence> case_package(CaseFlavor flavor, const Term& t, bool nonempty,
                                   const std::vector<Term>& terms,
                                   const std::vector<std::string>& verbs);
RuleSet case_rules(CaseFlavor flavor);

// Accepts iff the branch assignments cover every total assignment over the
// term list, each branch theory is the package of its assignment, and each
// proof derives phi from gamma plus the branch theory.
CheckResult check_case_certificate(const CaseCertificate& cert, const std::vector<Sentence>& gamma,
                                   const Sentence& phi);

// A single proof tree built from nested case rules (CASES/CASES1 or
// CASES3/CASES2). Its size grows exponentially with the term count;
// throws BudgetError past max_nodes distinct nodes.
ProofPtr assemble_cases_proof(const CaseCertificate& cert, const std::vector<Sentence>& gamma,
                              std::size_t max_nodes = 200000);

struct VerdictStats {
  std::size_t universe_size = 0;
  std::size_t derived = 0;
  int rounds = 0;
  std::size_t branches = 0;
  double elapsed_ms = 0;
  // bounded searches
  int depth_bound = 0;
  int model_bound = 0;
  std::size_t clauses = 0;
  bool truncated = false;
};

struct Verdict {
  Answer answer = Answer::Unknown;
  std::variant<std::monostate, ProofPtr, CaseCertificate, FiniteModel> certificate;
  // Rule set a proof certificate is checked against.
  std::optional<RuleSet> rules;
  VerdictStats stats;
  std::string note;

  const ProofPtr* proof() const { return std::get_if<ProofPtr>(&certificate); }
  const CaseCertificate* cases() const { return std::get_if<CaseCertificate>(&certificate); }
  const FiniteModel* model() const { return std::get_if<FiniteModel>(&certificate); }
};

}  // namespace relsyl
