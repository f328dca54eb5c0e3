#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <optional>
#include <sstream>

#include "relsyl/bridge.hpp"
#include "relsyl/clause.hpp"
#include "relsyl/corpus.hpp"
#include "relsyl/decide.hpp"
#include "relsyl/errors.hpp"
#include "relsyl/json_io.hpp"

namespace relsyl::cli {

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

// Text after "# goal:" on the first line that has it.
std::optional<std::string> goal_comment(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    auto start = line.find_first_not_of(" \t");
    if (start == std::string::npos || line[start] != '#') continue;
    auto body = line.find_first_not_of(" \t", start + 1);
    if (body == std::string::npos || line.compare(body, 5, "goal:") != 0) continue;
    std::string goal = line.substr(body + 5);
    auto b = goal.find_first_not_of(" \t");
    auto e = goal.find_last_not_of(" \t\r");
    if (b != std::string::npos) return goal.substr(b, e - b + 1);
  }
  return std::nullopt;
}

struct Problem {
  Theory theory;
  Sentence goal;
};

Sentence read_goal(const std::string& goal, Vocabulary* vocab) {
  ParseOptions opts;
  opts.declare_unknown = true;
  return parse_sentence(goal, vocab, opts);
}

Problem load_problem(const std::string& path, const std::string& goal_flag) {
  std::string text = read_file(path);
  Problem p;
  p.theory = parse_theory(text);
  std::string goal = goal_flag;
  if (goal.empty()) {
    auto c = goal_comment(text);
    if (!c) throw UsageError("no goal: pass --goal or add a '# goal:' line to " + path);
    goal = *c;
  }
  p.goal = read_goal(goal, &p.theory.vocab);
  return p;
}

std::string model_text(const FiniteModel& m) {
  std::string out = "domain:";
  for (const auto& l : m.labels()) out += " " + l;
  out += "\n";
  for (const auto& p : m.noun_names()) {
    out += "  " + p + " = {";
    bool first = true;
    for (std::size_t e : m.noun(p).elements()) {
      out += (first ? "" : ", ") + m.labels()[e];
      first = false;
    }
    out += "}\n";
  }
  for (const auto& r : m.verb_names()) {
    out += "  " + r + " = {";
    bool first = true;
    for (std::size_t a = 0; a < m.size(); ++a) {
      for (std::size_t b : m.successors(r, a).elements()) {
        out += (first ? "(" : ", (") + m.labels()[a] + ", " + m.labels()[b] + ")";
        first = false;
      }
    }
    out += "}\n";
  }
  return out;
}

void proof_text(const ProofNode& p, int indent, std::string& out) {
  out += std::string(indent * 2, ' ') + p.conclusion.text() + "   [" + p.rule + "]\n";
  for (const auto& c : p.children) proof_text(*c, indent + 1, out);
}

std::string verdict_text(const Verdict& v) {
  std::string out = "answer: " + answer_name(v.answer) + "\n";
  if (const ProofPtr* p = v.proof()) {
    out += "proof (" + std::to_string(proof_size(**p)) + " nodes" +
           (v.rules ? ", " + rule_set_name(*v.rules) : std::string()) + "):\n";
    proof_text(**p, 1, out);
  } else if (const CaseCertificate* c = v.cases()) {
    out += "case certificate: " + std::to_string(c->branches.size()) + " branches over " +
           std::to_string(c->terms.size()) + " terms\n";
    for (const auto& b : c->branches) {
      out += "  branch:";
      for (const auto& [t, nonempty] : b.assignment) out += " " + t.text() + (nonempty ? "+" : "-");
      out += "  (" + std::to_string(proof_size(*b.proof)) + " nodes)\n";
    }
  } else if (const FiniteModel* m = v.model()) {
    out += "countermodel, " + std::to_string(m->size()) + " elements\n" + model_text(*m);
  }
  if (!v.note.empty()) out += "note: " + v.note + "\n";
  return out;
}

int exit_for(Answer a) {
  switch (a) {
    case Answer::Yes: return kExitYes;
    case Answer::No: return kExitNo;
    case Answer::Unknown: return kExitUnknown;
  }
  return kExitError;
}

struct Common {
  std::string format = "json";
  std::string output;

  void add(CLI::App* app) {
    app->add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}));
    app->add_option("-o,--output", output, "write the main output here instead of stdout");
  }
  bool json() const { return format == "json"; }
  void emit(std::ostream& out, const std::string& text) const {
    if (output.empty()) {
      out << text;
    } else {
      write_file(output, text);
    }
  }
};

// ------------------------------------------------------------- commands

struct DecideCmd {
  Common common;
  std::string theory;
  std::string goal;
  std::string fragment;
  std::string certificate;
  std::size_t branch_cap = DecideOptions{}.branch_cap;
  int depth_slack = DecideOptions{}.depth_slack;
  int depth = -1;
  int model_bound = ClausalOptions{}.model_bound;
  std::size_t clause_cap = ClausalOptions{}.clause_cap;

  void add(CLI::App* app) {
    app->add_option("theory", theory, "theory file")->required();
    app->add_option("-g,--goal", goal, "goal sentence (default: the file's '# goal:' line)");
    app->add_option("--fragment", fragment, "decide as this fragment, e.g. L2+ or L3.5");
    app->add_option("--certificate", certificate, "also write the verdict with its certificate here");
    app->add_option("--branch-cap", branch_cap, "case-split nodes before giving up")->check(CLI::PositiveNumber);
    app->add_option("--depth-slack", depth_slack, "extra term depth for case-split saturation")
        ->check(CLI::NonNegativeNumber);
    app->add_option("--depth", depth, "clausal literal depth bound (default: input depth + 2)");
    app->add_option("--model-bound", model_bound, "largest countermodel searched by the clausal deciders")
        ->check(CLI::NonNegativeNumber);
    app->add_option("--clause-cap", clause_cap, "clausal search clause cap")->check(CLI::PositiveNumber);
    common.add(app);
  }

  int run(std::ostream& out) {
    Problem p = load_problem(theory, goal);
    DispatchOptions opts;
    if (!fragment.empty()) {
      opts.fragment = parse_fragment(fragment);
      if (!opts.fragment) throw UsageError("unknown fragment '" + fragment + "'");
    }
    opts.decide.branch_cap = branch_cap;
    opts.decide.depth_slack = depth_slack;
    opts.clausal.depth_bound = depth;
    opts.clausal.model_bound = model_bound;
    opts.clausal.clause_cap = clause_cap;
    Fragment f = dispatch_fragment(p.theory.sentences, p.goal, opts.fragment);
    Verdict v = decide(p.theory.sentences, p.goal, opts);
    Json j = verdict_to_json(v);
    j["goal"] = p.goal.text();
    j["fragment"] = fragment_name(f);
    if (!certificate.empty()) write_file(certificate, j.dump(2) + "\n");
    common.emit(out, common.json() ? j.dump(2) + "\n" : "fragment: " + fragment_name(f) + "\n" + verdict_text(v));
    return exit_for(v.answer);
  }
};

// Clausal proofs conclude the canonical clause of the goal.
bool concludes(const ProofNode& p, const Sentence& goal, RuleSet rs) {
  if (rs == RuleSet::ClausalRules) return same_clause(p.conclusion, embed_l45(goal));
  return p.conclusion == goal;
}

struct CheckCmd {
  Common common;
  std::string theory;
  std::string cert;
  std::string rules;
  std::string goal;

  void add(CLI::App* app) {
    app->add_option("theory", theory, "theory file")->required();
    app->add_option("certificate", cert, "proof JSON or verdict JSON")->required();
    app->add_option("-r,--rules", rules, "rule set for a bare proof, e.g. L2PlusRules");
    app->add_option("-g,--goal", goal, "sentence the certificate must establish");
    common.add(app);
  }

  int run(std::ostream& out) {
    std::string text = read_file(theory);
    Theory th = parse_theory(text);
    Json j = Json::parse(read_file(cert));
    std::string goal_text = goal;
    if (goal_text.empty() && j.contains("goal")) goal_text = j.at("goal").get<std::string>();
    if (goal_text.empty()) goal_text = goal_comment(text).value_or("");
    Vocabulary vocab = th.vocab;
    std::optional<Sentence> phi;
    if (!goal_text.empty()) phi = read_goal(goal_text, &vocab);

    Json report;
    CheckResult res;
    std::string kind;
    if (j.contains("answer")) {
      Verdict v = verdict_from_json(j, &vocab);
      if (const ProofPtr* p = v.proof()) {
        kind = "proof";
        std::optional<RuleSet> rs = rules.empty() ? v.rules : parse_rule_set(rules);
        if (!rs) throw UsageError("no rule set: pass --rules");
        report["rules"] = rule_set_name(*rs);
        res = check_proof(**p, th.sentences, *rs);
        if (res && phi && !concludes(**p, *phi, *rs)) res = {false, "proof concludes " + (*p)->conclusion.text()};
      } else if (const CaseCertificate* c = v.cases()) {
        kind = "cases";
        if (!phi) throw UsageError("a case certificate needs the goal: pass --goal");
        res = check_case_certificate(*c, th.sentences, *phi);
      } else if (const FiniteModel* m = v.model()) {
        kind = "model";
        if (!phi) throw UsageError("a countermodel needs the goal: pass --goal");
        if (!is_countermodel(*m, th.sentences, *phi)) res = {false, "not a countermodel"};
      } else {
        kind = "none";
        res = {false, "the verdict carries no certificate"};
      }
    } else {
      kind = "proof";
      if (rules.empty()) throw UsageError("a bare proof needs --rules");
      auto rs = parse_rule_set(rules);
      if (!rs) throw UsageError("unknown rule set '" + rules + "'");
      report["rules"] = rule_set_name(*rs);
      ProofPtr p = proof_from_json(j, &vocab);
      res = check_proof(*p, th.sentences, *rs);
      if (res && phi && !concludes(*p, *phi, *rs)) res = {false, "proof concludes " + p->conclusion.text()};
    }
    report["kind"] = kind;
    report["accepted"] = res.ok;
    if (!res.ok) report["error"] = res.error;
    common.emit(out, common.json() ? report.dump(2) + "\n"
                                   : std::string(res.ok ? "accepted" : "rejected: " + res.error) + "\n");
    return res.ok ? 0 : 1;
  }
};

struct EvalCmd {
  Common common;
  std::string theory;
  std::string model;

  void add(CLI::App* app) {
    app->add_option("theory", theory, "theory file")->required();
    app->add_option("model", model, "model JSON")->required();
    common.add(app);
  }

  int run(std::ostream& out) {
    Theory th = parse_theory(read_file(theory));
    FiniteModel m = model_from_json(Json::parse(read_file(model)));
    Json rows = Json::array();
    std::string text;
    bool all = true;
    for (const Sentence& s : th.sentences) {
      bool holds = satisfies(m, s);
      all = all && holds;
      rows.push_back({{"sentence", s.text()}, {"holds", holds}});
      text += std::string(holds ? "true   " : "false  ") + s.text() + "\n";
    }
    Json j = {{"sentences", rows}, {"all_hold", all}};
    common.emit(out, common.json() ? j.dump(2) + "\n" : text);
    return all ? 0 : 1;
  }
};

struct OracleCmd {
  Common common;
  std::string theory;
  std::string goal;
  int max_size = 3;
  long long budget = OracleOptions{}.budget;

  void add(CLI::App* app) {
    app->add_option("theory", theory, "theory file")->required();
    app->add_option("-g,--goal", goal, "goal sentence (default: the file's '# goal:' line)");
    app->add_option("--max-size", max_size, "largest domain searched")->check(CLI::NonNegativeNumber);
    app->add_option("--budget", budget, "solver conflict budget")->check(CLI::PositiveNumber);
    common.add(app);
  }

  int run(std::ostream& out) {
    Problem p = load_problem(theory, goal);
    OracleOptions opts;
    opts.budget = budget;
    OracleResult r = oracle_consequence(p.theory.sentences, p.goal, max_size, opts);
    Verdict v;
    v.stats.model_bound = r.bound;
    if (r.found) {
      v.answer = Answer::No;
      v.certificate = r.countermodel;
    } else {
      v.note = "no countermodel with at most " + std::to_string(r.bound) + " elements";
    }
    Json j = verdict_to_json(v);
    j["goal"] = p.goal.text();
    common.emit(out, common.json() ? j.dump(2) + "\n" : verdict_text(v));
    return exit_for(v.answer);
  }
};

std::string theory_file(const Theory& th, const Sentence& goal, const std::string& header) {
  return "# " + header + "\n# goal: " + goal.text() + "\n" + print_theory(th);
}

struct GenCmd {
  Common common;
  std::string family;
  std::vector<std::string> params;
  std::string svec;
  std::string subcase;

  void add(CLI::App* app) {
    app->add_option("family", family, "gamma-n | delta-ni | one-in-three | three-sat | fixture")
        ->required()
        ->check(CLI::IsMember({"gamma-n", "delta-ni", "one-in-three", "three-sat", "fixture"}));
    app->add_option("params", params,
                    "gamma-n N | delta-ni N I | one-in-three FILE | three-sat FILE | fixture m1|m2|m3|m4 N [I]");
    app->add_option("--svec", svec, "fixture m4: comma-separated verb sequence, e.g. r2,r1");
    app->add_option("--subcase", subcase, "fixture m4: a, b or c")->check(CLI::IsMember({"a", "b", "c"}));
    common.add(app);
  }

  int number(std::size_t i) const {
    if (i >= params.size()) throw UsageError("gen " + family + ": missing parameter");
    try {
      return std::stoi(params[i]);
    } catch (const std::exception&) {
      throw UsageError("gen " + family + ": '" + params[i] + "' is not a number");
    }
  }

  int run(std::ostream& out) {
    if (family == "fixture") return fixture(out);
    Theory th;
    Sentence goal;
    std::string header;
    if (family == "gamma-n") {
      th = gen_gamma_n(number(0));
      goal = Sentence::some(Term::noun("a"), Term::noun("a"));
      header = "gamma_" + params[0];
    } else if (family == "delta-ni") {
      th = gen_delta_ni(number(0), number(1));
      goal = Sentence::some(Term::noun("a"), Term::noun("a"));
      header = "delta_" + params[0] + "," + params[1];
    } else {
      if (params.empty()) throw UsageError("gen " + family + ": missing DIMACS file");
      std::string text = read_file(params[0]);
      Encoding e = family == "one-in-three" ? encode_one_in_three(parse_one_in_three(text))
                                            : encode_3sat(parse_dimacs(text));
      th = e.theory;
      goal = e.goal;
      header = family + " encoding of " + params[0];
    }
    if (common.json()) {
      Json sentences = Json::array();
      for (const auto& s : th.sentences) sentences.push_back(s.text());
      Json j = {{"nouns", th.vocab.nouns}, {"verbs", th.vocab.verbs}, {"sentences", sentences}, {"goal", goal.text()}};
      common.emit(out, j.dump(2) + "\n");
    } else {
      common.emit(out, theory_file(th, goal, header));
    }
    return 0;
  }

  int fixture(std::ostream& out) {
    if (params.empty()) throw UsageError("gen fixture: which model?");
    const std::string& which = params[0];
    int n = number(1);
    FiniteModel m;
    if (which == "m1") {
      m = fixture_m1(n);
    } else if (which == "m2") {
      m = fixture_m2(n);
    } else if (which == "m3") {
      m = fixture_m3(n, number(2));
    } else if (which == "m4") {
      std::vector<std::string> s;
      std::stringstream ss(svec);
      std::string item;
      while (std::getline(ss, item, ',')) s.push_back(item);
      M4Subcase sc = subcase == "b" ? M4Subcase::B : subcase == "c" ? M4Subcase::C : M4Subcase::A;
      if (subcase.empty()) {
        auto guess = m4_subcase_for(n, s);
        if (!guess) throw UsageError("gen fixture m4: --svec fits no subcase");
        sc = *guess;
      }
      m = fixture_m4(n, s, sc);
    } else {
      throw UsageError("gen fixture: unknown model '" + which + "'");
    }
    common.emit(out, common.json() ? model_to_json(m).dump(2) + "\n" : model_text(m));
    return 0;
  }
};

struct TranslateCmd {
  Common common;
  std::string direction;
  std::string theory;
  std::string goal;
  std::string names;

  void add(CLI::App* app) {
    app->add_option("direction", direction, "star (flat file to L5.5) or flatten (L5.5 to flat)")
        ->required()
        ->check(CLI::IsMember({"star", "flatten"}));
    app->add_option("theory", theory, "input theory file")->required();
    app->add_option("-g,--goal", goal, "goal sentence (default: the file's '# goal:' line)");
    app->add_option("--names", names, "flatten: write the term-to-noun map here as JSON");
    common.add(app);
  }

  int run(std::ostream& out) {
    std::string text = read_file(theory);
    std::string goal_text = goal.empty() ? goal_comment(text).value_or("") : goal;
    if (direction == "star") {
      ParseOptions opts;
      opts.allow_reserved = true;
      RStarTheory th = parse_rstar_theory(text, opts);
      Theory res;
      res.vocab = th.vocab;
      for (const auto& s : th.sentences) res.add(star_translate(s));
      std::optional<Sentence> g;
      if (!goal_text.empty()) {
        opts.declare_unknown = true;
        g = star_translate(parse_rstar_sentence(goal_text, &res.vocab, opts));
      }
      if (common.json()) {
        Json sentences = Json::array();
        for (const auto& s : res.sentences) sentences.push_back(s.text());
        Json j = {{"sentences", sentences}};
        if (g) j["goal"] = g->text();
        common.emit(out, j.dump(2) + "\n");
      } else {
        common.emit(out, (g ? "# goal: " + g->text() + "\n" : std::string()) + print_theory(res));
      }
      return 0;
    }
    if (goal_text.empty()) throw UsageError("flatten needs a goal: pass --goal or add a '# goal:' line");
    Theory th = parse_theory(text);
    Sentence g = read_goal(goal_text, &th.vocab);
    FlattenResult f = flatten(th.sentences, g);
    Json map = Json::object();
    for (const auto& [t, n] : f.names) map[t.text()] = n;
    if (!names.empty()) write_file(names, map.dump(2) + "\n");
    if (common.json()) {
      Json sentences = Json::array();
      for (const auto& s : f.theory.sentences) sentences.push_back(print_rstar_sentence(s));
      Json j = {{"sentences", sentences},
                {"bridge_rows", f.bridge_rows},
                {"goal", print_rstar_sentence(f.goal)},
                {"names", map}};
      common.emit(out, j.dump(2) + "\n");
    } else {
      common.emit(out, "# goal: " + print_rstar_sentence(f.goal) + "\n" + print_rstar_theory(f.theory));
    }
    return 0;
  }
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Certifying deciders for relational syllogistic logics", "relsyl"};
  app.require_subcommand(1);
  DecideCmd decide_cmd;
  CheckCmd check_cmd;
  EvalCmd eval_cmd;
  OracleCmd oracle_cmd;
  GenCmd gen_cmd;
  TranslateCmd translate_cmd;
  decide_cmd.add(app.add_subcommand("decide", "decide gamma |= goal with a certificate"));
  check_cmd.add(app.add_subcommand("check-proof", "check a proof or verdict certificate"));
  eval_cmd.add(app.add_subcommand("eval", "truth value of each sentence in a model"));
  oracle_cmd.add(app.add_subcommand("oracle", "bounded countermodel search"));
  gen_cmd.add(app.add_subcommand("gen", "generate instance families, encodings and fixture models"));
  translate_cmd.add(app.add_subcommand("translate", "star translation and flattening"));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : kExitParse;
  }
  try {
    if (app.got_subcommand("decide")) return decide_cmd.run(out);
    if (app.got_subcommand("check-proof")) return check_cmd.run(out);
    if (app.got_subcommand("eval")) return eval_cmd.run(out);
    if (app.got_subcommand("oracle")) return oracle_cmd.run(out);
    if (app.got_subcommand("gen")) return gen_cmd.run(out);
    if (app.got_subcommand("translate")) return translate_cmd.run(out);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const Json::exception& e) {
    err << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitParse;
  } catch (const BudgetError& e) {
    err << "budget exhausted: " << e.what() << "\n";
    return kExitBudget;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}

}  // namespace relsyl::cli
