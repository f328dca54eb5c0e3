// JSON forms of models, proofs, case certificates and verdicts.
#pragma once

#include <string>

#include "json.hpp"
#include "relsyl/proofs.hpp"
#include "relsyl/semantics.hpp"
#include "relsyl/verdict.hpp"

namespace relsyl {

using Json = nlohmann::json;

// {"domain": [labels], "nouns": {"p": [labels]}, "verbs": {"r": [[a, b]]}}.
// Reading accepts numeric labels too. Throws std::invalid_argument.
Json model_to_json(const FiniteModel& m);
FiniteModel model_from_json(const Json& j);

// {"conclusion", "rule", "children", "discharged", "chains"}. Reading parses
// sentences against *vocab, declaring new identifiers.
Json proof_to_json(const ProofNode& p);
ProofPtr proof_from_json(const Json& j, Vocabulary* vocab);

Json case_certificate_to_json(const CaseCertificate& c);
CaseCertificate case_certificate_from_json(const Json& j, Vocabulary* vocab);

// {"answer", "certificate_kind": "proof" | "cases" | "model" | "none",
//  "certificate", "stats", "note"}
Json verdict_to_json(const Verdict& v);
Verdict verdict_from_json(const Json& j, Vocabulary* vocab);

}  // namespace relsyl
