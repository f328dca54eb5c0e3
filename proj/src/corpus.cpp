#include "relsyl/corpus.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace relsyl {

namespace {

Term noun(const std::string& p) { return Term::noun(p); }
Term all_of(const std::string& r, Term t) { return Term::all_of(r, std::move(t)); }
Term some_of(const std::string& r, Term t) { return Term::some_of(r, std::move(t)); }

void check_n(int n) {
  if (n < 1) throw std::out_of_range("n must be positive");
}

Theory gamma_theory(int n, int drop) {
  check_n(n);
  Theory th;
  th.vocab.nouns = {"a", "b"};
  for (int i = 1; i <= n; ++i) th.vocab.verbs.insert(gamma_verb(i));
  Term a = noun("a");
  Term b = noun("b");
  Term r1r1a = all_of(gamma_verb(1), all_of(gamma_verb(1), a));
  th.add(Sentence::some(r1r1a, r1r1a));
  for (int i = 1; i < n; ++i) {
    if (i == drop) continue;
    std::string ri = gamma_verb(i);
    std::string rj = gamma_verb(i + 1);
    th.add(Sentence::all(all_of(ri, b), all_of(rj, all_of(rj, a))));
  }
  if (drop != n) th.add(Sentence::all(all_of(gamma_verb(n), b), a));
  return th;
}

FiniteModel gamma_model(int n, std::vector<std::string> labels) {
  check_n(n);
  FiniteModel m(std::move(labels));
  m.declare_noun("a");
  m.declare_noun("b");
  for (int i = 1; i <= n; ++i) m.declare_verb(gamma_verb(i));
  return m;
}

bool is_gamma_verb(int n, const std::string& s) {
  for (int i = 1; i <= n; ++i) {
    if (s == gamma_verb(i)) return true;
  }
  return false;
}

void check_variable(int v, int variables) {
  if (v < 1 || v > variables) throw std::invalid_argument("variable " + std::to_string(v) + " out of range");
}

std::vector<bool> assignment_of(unsigned long bits, int n) {
  std::vector<bool> out(n);
  for (int v = 0; v < n; ++v) out[v] = (bits >> v) & 1UL;
  return out;
}

void check_cap(int variables) {
  if (variables < 0) throw std::invalid_argument("negative variable count");
  if (variables > 20) throw std::length_error("truth-table search is capped at 20 variables");
}

}  // namespace

std::string gamma_verb(int i) { return "r" + std::to_string(i); }

Theory gen_gamma_n(int n) { return gamma_theory(n, 0); }

Theory gen_delta_ni(int n, int i) {
  check_n(n);
  if (i < 1 || i > n) throw std::out_of_range("need 1 <= i <= n");
  return gamma_theory(n, i);
}

FiniteModel fixture_m1(int n) {
  FiniteModel m = gamma_model(n, {"*"});
  m.add_to_noun("a", 0);
  m.add_to_noun("b", 0);
  return m;
}

FiniteModel fixture_m2(int n) {
  FiniteModel m = gamma_model(n, {"*"});
  m.add_to_noun("a", 0);
  return m;
}

FiniteModel fixture_m3(int n, int i) {
  if (i < 1 || i > n) throw std::invalid_argument("M3(i) needs 1 <= i <= n");
  FiniteModel m = gamma_model(n, {"*"});
  m.add_to_noun("b", 0);
  for (int j = 1; j <= i; ++j) m.add_pair(gamma_verb(j), 0, 0);
  return m;
}

std::optional<M4Subcase> m4_subcase_for(int n, const std::vector<std::string>& svec) {
  std::size_t k = svec.size();
  if (k == 0 || k % 2 != 0) return std::nullopt;
  for (const auto& s : svec) {
    if (!is_gamma_verb(n, s)) return std::nullopt;
  }
  const std::string r1 = gamma_verb(1);
  if (svec[k - 1] != r1) return M4Subcase::A;
  if (svec[k - 2] != r1) return M4Subcase::B;
  if (k > 2) return M4Subcase::C;
  return std::nullopt;
}

FiniteModel fixture_m4(int n, const std::vector<std::string>& svec, M4Subcase subcase) {
  auto expected = m4_subcase_for(n, svec);
  if (!expected || *expected != subcase) throw std::invalid_argument("svec does not match the M4 subcase");
  enum { w, x, y, z };
  FiniteModel m = gamma_model(n, {"w", "x", "y", "z"});
  m.add_to_noun("a", w);
  for (std::size_t e = 0; e < 4; ++e) m.add_to_noun("b", e);
  const std::string r1 = gamma_verb(1);
  m.add_pair(r1, x, w);
  m.add_pair(r1, y, x);
  std::size_t k = svec.size();
  if (subcase == M4Subcase::A) m.add_pair(svec[k - 1], z, w);
  if (subcase == M4Subcase::C) m.add_pair(svec[k - 3], z, y);
  return m;
}

Term all_chain_term(const std::vector<std::string>& svec, const Term& base) {
  Term t = base;
  for (auto it = svec.rbegin(); it != svec.rend(); ++it) t = all_of(*it, t);
  return t;
}

std::string variable_noun(int v) { return "x" + std::to_string(v); }

Encoding encode_one_in_three(const OneInThreeInstance& s) {
  Theory th;
  th.vocab.nouns = {"start", "finish"};
  for (int v = 1; v <= s.variables; ++v) th.vocab.nouns.insert(variable_noun(v));
  Term start = noun("start");
  Term finish = noun("finish");
  std::set<std::pair<int, int>> pairs;
  for (std::size_t j = 0; j < s.clauses.size(); ++j) {
    const auto& c = s.clauses[j];
    for (int v : c) check_variable(v, s.variables);
    if (c[0] == c[1] || c[0] == c[2] || c[1] == c[2]) {
      throw std::invalid_argument("clause " + std::to_string(j + 1) + " repeats a variable");
    }
    std::string tag = "_c" + std::to_string(j + 1);
    std::string y = "y" + tag, z = "z" + tag;
    std::string r1 = "r1" + tag, r2 = "r2" + tag, r3 = "r3" + tag;
    th.vocab.nouns.insert({y, z});
    th.vocab.verbs.insert({r1, r2, r3});
    Term u = noun(variable_noun(c[0])), v = noun(variable_noun(c[1])), w = noun(variable_noun(c[2]));
    th.add(Sentence::all(start, all_of(r1, u)));
    th.add(Sentence::all(some_of(r1, u), noun(y)));
    th.add(Sentence::all(noun(y), all_of(r2, v)));
    th.add(Sentence::all(some_of(r2, v), noun(z)));
    th.add(Sentence::all(noun(z), all_of(r3, w)));
    th.add(Sentence::all(some_of(r3, w), finish));
    for (int a = 0; a < 3; ++a) {
      for (int b = a + 1; b < 3; ++b) pairs.insert(std::minmax(c[a], c[b]));
    }
  }
  for (auto [p, q] : pairs) {
    std::string key = "_" + variable_noun(p) + "_" + variable_noun(q);
    std::string r = "r" + key, rp = "rp" + key;
    th.vocab.verbs.insert({r, rp});
    Term tp = noun(variable_noun(p)), tq = noun(variable_noun(q));
    th.add(Sentence::all(all_of(r, tp), some_of(rp, tq)));
    th.add(Sentence::all(all_of(r, tq), some_of(rp, tp)));
  }
  return {th, Sentence::all(start, finish)};
}

Encoding encode_3sat(const CnfInstance& f) {
  Theory th;
  th.vocab.nouns = {"q"};
  for (int v = 1; v <= f.variables; ++v) th.vocab.nouns.insert(variable_noun(v));
  auto literal = [&](int l) {
    if (l == 0) throw std::invalid_argument("literal 0");
    check_variable(std::abs(l), f.variables);
    Term p = noun(variable_noun(std::abs(l)));
    return l > 0 ? p : Term::negate(p);
  };
  for (std::size_t i = 0; i < f.clauses.size(); ++i) {
    const auto& c = f.clauses[i];
    std::string tag = "_c" + std::to_string(i + 1);
    std::string y = "y" + tag, z = "z" + tag, r = "r" + tag;
    th.vocab.nouns.insert({y, z});
    th.vocab.verbs.insert(r);
    Term u = literal(c[0]), v = literal(c[1]), w = literal(c[2]);
    th.add(Sentence::all(Term::negate(u), all_of(r, noun(y))));
    th.add(Sentence::all(Term::negate(v), all_of(r, Term::negate(noun(y)))));
    th.add(Sentence::all(all_of(r, noun(z)), w));
  }
  Term q = noun("q");
  return {th, Sentence::all(q, Term::negate(q))};
}

std::optional<std::vector<bool>> brute_sat(const CnfInstance& f) {
  check_cap(f.variables);
  for (const auto& c : f.clauses) {
    for (int l : c) {
      if (l == 0) throw std::invalid_argument("literal 0");
      check_variable(std::abs(l), f.variables);
    }
  }
  for (unsigned long bits = 0; bits < (1UL << f.variables); ++bits) {
    bool ok = std::all_of(f.clauses.begin(), f.clauses.end(), [&](const auto& c) {
      return std::any_of(c.begin(), c.end(), [&](int l) {
        bool val = (bits >> (std::abs(l) - 1)) & 1UL;
        return l > 0 ? val : !val;
      });
    });
    if (ok) return assignment_of(bits, f.variables);
  }
  return std::nullopt;
}

std::optional<std::vector<bool>> one_in_three_check(const OneInThreeInstance& s) {
  check_cap(s.variables);
  for (const auto& c : s.clauses) {
    for (int v : c) check_variable(v, s.variables);
  }
  for (unsigned long bits = 0; bits < (1UL << s.variables); ++bits) {
    bool ok = std::all_of(s.clauses.begin(), s.clauses.end(), [&](const auto& c) {
      int on = 0;
      for (int v : c) on += (bits >> (v - 1)) & 1UL;
      return on == 1;
    });
    if (ok) return assignment_of(bits, s.variables);
  }
  return std::nullopt;
}

CnfInstance parse_dimacs(std::string_view text) {
  CnfInstance f;
  std::istringstream in{std::string(text)};
  std::string line;
  std::vector<int> pending;
  int declared_clauses = -1;
  int max_var = 0;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ls(line);
    std::string first;
    if (!(ls >> first) || first[0] == 'c' || first[0] == '%') continue;
    if (first == "p") {
      std::string fmt;
      if (!(ls >> fmt >> f.variables >> declared_clauses) || fmt != "cnf") {
        throw std::invalid_argument("line " + std::to_string(line_no) + ": bad problem line");
      }
      continue;
    }
    std::istringstream all(line);
    long long lit;
    while (all >> lit) {
      if (lit == 0) {
        if (pending.size() != 3) {
          throw std::invalid_argument("line " + std::to_string(line_no) + ": clause with " +
                                      std::to_string(pending.size()) + " literals, need 3");
        }
        f.clauses.push_back({pending[0], pending[1], pending[2]});
        pending.clear();
      } else {
        if (lit > 1000000 || lit < -1000000) throw std::invalid_argument("literal out of range");
        pending.push_back(static_cast<int>(lit));
        max_var = std::max(max_var, static_cast<int>(std::abs(lit)));
      }
    }
    if (!all.eof()) throw std::invalid_argument("line " + std::to_string(line_no) + ": not an integer");
  }
  if (!pending.empty()) throw std::invalid_argument("last clause is not terminated by 0");
  if (declared_clauses >= 0 && declared_clauses != static_cast<int>(f.clauses.size())) {
    throw std::invalid_argument("clause count differs from the problem line");
  }
  if (max_var > f.variables) {
    if (declared_clauses >= 0) throw std::invalid_argument("variable exceeds the problem line");
    f.variables = max_var;
  }
  return f;
}

std::string print_dimacs(const CnfInstance& f) {
  std::string out = "p cnf " + std::to_string(f.variables) + " " + std::to_string(f.clauses.size()) + "\n";
  for (const auto& c : f.clauses) {
    out += std::to_string(c[0]) + " " + std::to_string(c[1]) + " " + std::to_string(c[2]) + " 0\n";
  }
  return out;
}

OneInThreeInstance parse_one_in_three(std::string_view text) {
  CnfInstance f = parse_dimacs(text);
  OneInThreeInstance s;
  s.variables = f.variables;
  for (const auto& c : f.clauses) {
    for (int l : c) {
      if (l < 0) throw std::invalid_argument("one-in-three clauses take positive variables");
    }
    s.clauses.push_back(c);
  }
  return s;
}

}  // namespace relsyl
