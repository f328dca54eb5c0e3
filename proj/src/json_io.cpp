#include "relsyl/json_io.hpp"

#include <stdexcept>

namespace relsyl {

namespace {

std::string label_of(const Json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_integer()) return std::to_string(j.get<long long>());
  throw std::invalid_argument("model: domain labels must be strings or integers");
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw std::invalid_argument(std::string("missing field '") + key + "'");
  return j.at(key);
}

Sentence read_sentence(const Json& j, Vocabulary* vocab) {
  if (!j.is_string()) throw std::invalid_argument("sentences are JSON strings");
  ParseOptions opts;
  opts.allow_reserved = true;
  opts.declare_unknown = true;
  return parse_sentence(j.get<std::string>(), vocab, opts);
}

Term read_term(const Json& j, Vocabulary* vocab) {
  if (!j.is_string()) throw std::invalid_argument("terms are JSON strings");
  ParseOptions opts;
  opts.allow_reserved = true;
  opts.declare_unknown = true;
  return parse_term(j.get<std::string>(), vocab, opts);
}

Json sentences_json(const std::vector<Sentence>& ss) {
  Json out = Json::array();
  for (const auto& s : ss) out.push_back(s.text());
  return out;
}

Json stats_json(const VerdictStats& s) {
  return {{"universe_size", s.universe_size}, {"derived", s.derived},     {"rounds", s.rounds},
          {"branches", s.branches},           {"elapsed_ms", s.elapsed_ms}, {"depth_bound", s.depth_bound},
          {"model_bound", s.model_bound},     {"clauses", s.clauses},     {"truncated", s.truncated}};
}

}  // namespace

Json model_to_json(const FiniteModel& m) {
  Json j;
  j["domain"] = m.labels();
  Json nouns = Json::object();
  for (const auto& p : m.noun_names()) {
    Json members = Json::array();
    for (std::size_t e : m.noun(p).elements()) members.push_back(m.labels()[e]);
    nouns[p] = members;
  }
  Json verbs = Json::object();
  for (const auto& r : m.verb_names()) {
    Json pairs = Json::array();
    for (std::size_t a = 0; a < m.size(); ++a) {
      for (std::size_t b : m.successors(r, a).elements()) pairs.push_back({m.labels()[a], m.labels()[b]});
    }
    verbs[r] = pairs;
  }
  j["nouns"] = nouns;
  j["verbs"] = verbs;
  return j;
}

FiniteModel model_from_json(const Json& j) {
  const Json& dom = field(j, "domain");
  if (!dom.is_array()) throw std::invalid_argument("model: domain must be an array");
  std::vector<std::string> labels;
  for (const auto& e : dom) labels.push_back(label_of(e));
  FiniteModel m(labels);
  if (m.size() != labels.size()) throw std::invalid_argument("model: duplicate domain labels");
  auto index = [&](const Json& e) {
    auto i = m.index_of(label_of(e));
    if (!i) throw std::invalid_argument("model: unknown element '" + label_of(e) + "'");
    return *i;
  };
  if (j.contains("nouns")) {
    for (const auto& [p, members] : j.at("nouns").items()) {
      m.declare_noun(p);
      for (const auto& e : members) m.add_to_noun(p, index(e));
    }
  }
  if (j.contains("verbs")) {
    for (const auto& [r, pairs] : j.at("verbs").items()) {
      m.declare_verb(r);
      for (const auto& pr : pairs) {
        if (!pr.is_array() || pr.size() != 2) throw std::invalid_argument("model: verb pairs have two entries");
        m.add_pair(r, index(pr[0]), index(pr[1]));
      }
    }
  }
  return m;
}

Json proof_to_json(const ProofNode& p) {
  Json j;
  j["conclusion"] = p.conclusion.text();
  j["rule"] = p.rule;
  Json children = Json::array();
  for (const auto& c : p.children) children.push_back(proof_to_json(*c));
  j["children"] = children;
  j["discharged"] = sentences_json(p.discharged);
  Json chains = Json::array();
  for (const auto& ch : p.chains) chains.push_back(sentences_json(ch));
  j["chains"] = chains;
  return j;
}

ProofPtr proof_from_json(const Json& j, Vocabulary* vocab) {
  Sentence concl = read_sentence(field(j, "conclusion"), vocab);
  const Json& rule = field(j, "rule");
  if (!rule.is_string()) throw std::invalid_argument("proof: rule must be a string");
  std::vector<ProofPtr> children;
  std::vector<Sentence> discharged;
  std::vector<std::vector<Sentence>> chains;
  if (j.contains("children")) {
    for (const auto& c : j.at("children")) children.push_back(proof_from_json(c, vocab));
  }
  if (j.contains("discharged")) {
    for (const auto& s : j.at("discharged")) discharged.push_back(read_sentence(s, vocab));
  }
  if (j.contains("chains")) {
    for (const auto& ch : j.at("chains")) {
      std::vector<Sentence> chain;
      for (const auto& s : ch) chain.push_back(read_sentence(s, vocab));
      chains.push_back(std::move(chain));
    }
  }
  return make_proof(concl, rule.get<std::string>(), std::move(children), std::move(discharged),
                    std::move(chains));
}

Json case_certificate_to_json(const CaseCertificate& c) {
  Json j;
  j["flavor"] = c.flavor == CaseFlavor::Existential ? "existential" : "effective";
  Json terms = Json::array();
  for (const auto& t : c.terms) terms.push_back(t.text());
  j["terms"] = terms;
  j["verbs"] = c.verbs;
  Json branches = Json::array();
  for (const auto& b : c.branches) {
    Json jb;
    Json assignment = Json::array();
    for (const auto& [t, nonempty] : b.assignment) assignment.push_back({{"term", t.text()}, {"nonempty", nonempty}});
    jb["assignment"] = assignment;
    jb["branch_theory"] = sentences_json(b.branch_theory);
    jb["proof"] = b.proof ? proof_to_json(*b.proof) : Json();
    branches.push_back(jb);
  }
  j["branches"] = branches;
  return j;
}

CaseCertificate case_certificate_from_json(const Json& j, Vocabulary* vocab) {
  CaseCertificate c;
  std::string flavor = field(j, "flavor").get<std::string>();
  if (flavor == "existential") {
    c.flavor = CaseFlavor::Existential;
  } else if (flavor == "effective") {
    c.flavor = CaseFlavor::Effective;
  } else {
    throw std::invalid_argument("cases: unknown flavor '" + flavor + "'");
  }
  for (const auto& t : field(j, "terms")) c.terms.push_back(read_term(t, vocab));
  for (const auto& r : field(j, "verbs")) {
    c.verbs.push_back(r.get<std::string>());
    if (!vocab->nouns.count(c.verbs.back())) vocab->verbs.insert(c.verbs.back());
  }
  for (const auto& jb : field(j, "branches")) {
    CaseBranch b;
    for (const auto& a : field(jb, "assignment")) {
      b.assignment.emplace_back(read_term(field(a, "term"), vocab), field(a, "nonempty").get<bool>());
    }
    for (const auto& s : field(jb, "branch_theory")) b.branch_theory.push_back(read_sentence(s, vocab));
    const Json& p = field(jb, "proof");
    if (!p.is_null()) b.proof = proof_from_json(p, vocab);
    c.branches.push_back(std::move(b));
  }
  return c;
}

Json verdict_to_json(const Verdict& v) {
  Json j;
  j["answer"] = answer_name(v.answer);
  if (const ProofPtr* p = v.proof()) {
    j["certificate_kind"] = "proof";
    j["certificate"] = proof_to_json(**p);
  } else if (const CaseCertificate* c = v.cases()) {
    j["certificate_kind"] = "cases";
    j["certificate"] = case_certificate_to_json(*c);
  } else if (const FiniteModel* m = v.model()) {
    j["certificate_kind"] = "model";
    j["certificate"] = model_to_json(*m);
  } else {
    j["certificate_kind"] = "none";
    j["certificate"] = nullptr;
  }
  if (v.rules) j["rules"] = rule_set_name(*v.rules);
  j["stats"] = stats_json(v.stats);
  if (!v.note.empty()) j["note"] = v.note;
  return j;
}

Verdict verdict_from_json(const Json& j, Vocabulary* vocab) {
  Verdict v;
  std::string a = field(j, "answer").get<std::string>();
  if (a == "yes") {
    v.answer = Answer::Yes;
  } else if (a == "no") {
    v.answer = Answer::No;
  } else if (a == "unknown") {
    v.answer = Answer::Unknown;
  } else {
    throw std::invalid_argument("verdict: unknown answer '" + a + "'");
  }
  std::string kind = j.value("certificate_kind", std::string("none"));
  if (kind == "proof") {
    v.certificate = proof_from_json(field(j, "certificate"), vocab);
  } else if (kind == "cases") {
    v.certificate = case_certificate_from_json(field(j, "certificate"), vocab);
  } else if (kind == "model") {
    v.certificate = model_from_json(field(j, "certificate"));
  } else if (kind != "none") {
    throw std::invalid_argument("verdict: unknown certificate kind '" + kind + "'");
  }
  if (j.contains("rules")) {
    v.rules = parse_rule_set(j.at("rules").get<std::string>());
    if (!v.rules) throw std::invalid_argument("verdict: unknown rule set");
  }
  if (j.contains("stats")) {
    const Json& s = j.at("stats");
    v.stats.universe_size = s.value("universe_size", std::size_t{0});
    v.stats.derived = s.value("derived", std::size_t{0});
    v.stats.rounds = s.value("rounds", 0);
    v.stats.branches = s.value("branches", std::size_t{0});
    v.stats.elapsed_ms = s.value("elapsed_ms", 0.0);
    v.stats.depth_bound = s.value("depth_bound", 0);
    v.stats.model_bound = s.value("model_bound", 0);
    v.stats.clauses = s.value("clauses", std::size_t{0});
    v.stats.truncated = s.value("truncated", false);
  }
  v.note = j.value("note", std::string());
  return v;
}

}  // namespace relsyl
