#include "naive.hpp"

#include <stdexcept>

namespace naive {

using relsyl::SentenceKind;
using relsyl::TermKind;

std::vector<bool> eval(const Model& m, const relsyl::Term& t) {
  const int n = m.size;
  std::vector<bool> out(n, false);
  switch (t.kind()) {
    case TermKind::Noun: {
      auto it = m.nouns.find(t.name());
      if (it == m.nouns.end()) throw std::invalid_argument("naive: unknown noun " + t.name());
      return it->second;
    }
    case TermKind::Not: {
      std::vector<bool> b = eval(m, t.body());
      for (int i = 0; i < n; ++i) out[i] = !b[i];
      return out;
    }
    case TermKind::AllOf:
    case TermKind::SomeOf: {
      auto it = m.verbs.find(t.name());
      if (it == m.verbs.end()) throw std::invalid_argument("naive: unknown verb " + t.name());
      const auto& rel = it->second;
      std::vector<bool> b = eval(m, t.body());
      bool universal = t.kind() == TermKind::AllOf;
      for (int a = 0; a < n; ++a) {
        bool v = universal;
        for (int c = 0; c < n; ++c) {
          if (!b[c]) continue;
          if (universal && !rel[a][c]) v = false;
          if (!universal && rel[a][c]) v = true;
        }
        out[a] = v;
      }
      return out;
    }
  }
  return out;
}

namespace {

std::vector<bool> meet(const Model& m, const std::vector<relsyl::Term>& ts) {
  std::vector<bool> acc(m.size, true);
  for (const auto& t : ts) {
    std::vector<bool> e = eval(m, t);
    for (int i = 0; i < m.size; ++i) acc[i] = acc[i] && e[i];
  }
  return acc;
}

bool any(const std::vector<bool>& v) {
  for (bool b : v) {
    if (b) return true;
  }
  return false;
}

bool included(const Model& m, const relsyl::Term& x, const relsyl::Term& y) {
  std::vector<bool> a = eval(m, x), b = eval(m, y);
  for (int i = 0; i < m.size; ++i) {
    if (a[i] && !b[i]) return false;
  }
  return true;
}

}  // namespace

bool holds(const Model& m, const relsyl::Sentence& s) {
  switch (s.kind()) {
    case SentenceKind::All: return included(m, s.term(0), s.term(1));
    case SentenceKind::Some: return any(meet(m, {s.term(0), s.term(1)}));
    case SentenceKind::AllOrSome:
      return included(m, s.term(0), s.term(1)) || any(meet(m, {s.term(2), s.term(3)}));
    case SentenceKind::EmptyMeet: return !any(meet(m, s.terms()));
    case SentenceKind::NonemptyMeet: return any(meet(m, s.terms()));
  }
  return false;
}

bool holds_all(const Model& m, const std::vector<relsyl::Sentence>& ss) {
  for (const auto& s : ss) {
    if (!holds(m, s)) return false;
  }
  return true;
}

bool for_each_model(const relsyl::Vocabulary& vocab, int size,
                    const std::function<bool(const Model&)>& visit) {
  const int n = size;
  const std::size_t bits = vocab.nouns.size() * n + vocab.verbs.size() * n * n;
  if (bits > 30) throw std::length_error("naive: model space too large");
  const unsigned long long total = 1ULL << bits;
  for (unsigned long long mask = 0; mask < total; ++mask) {
    Model m;
    m.size = n;
    std::size_t bit = 0;
    for (const auto& p : vocab.nouns) {
      std::vector<bool> ext(n);
      for (int i = 0; i < n; ++i) ext[i] = (mask >> bit++) & 1ULL;
      m.nouns[p] = ext;
    }
    for (const auto& r : vocab.verbs) {
      std::vector<std::vector<bool>> rel(n, std::vector<bool>(n));
      for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) rel[a][b] = (mask >> bit++) & 1ULL;
      }
      m.verbs[r] = rel;
    }
    if (visit(m)) return true;
  }
  return false;
}

relsyl::Vocabulary vocab_of(const std::vector<relsyl::Sentence>& ss) {
  relsyl::Vocabulary v;
  v.nouns = relsyl::nouns_in(ss);
  v.verbs = relsyl::verbs_in(ss);
  return v;
}

std::optional<Model> countermodel(const std::vector<relsyl::Sentence>& gamma,
                                  const relsyl::Sentence& phi, int max_size) {
  std::vector<relsyl::Sentence> all = gamma;
  all.push_back(phi);
  relsyl::Vocabulary v = vocab_of(all);
  std::optional<Model> found;
  for (int n = 0; n <= max_size && !found; ++n) {
    for_each_model(v, n, [&](const Model& m) {
      if (holds_all(m, gamma) && !holds(m, phi)) {
        found = m;
        return true;
      }
      return false;
    });
  }
  return found;
}

relsyl::FiniteModel to_finite(const Model& m) {
  relsyl::FiniteModel out(static_cast<std::size_t>(m.size));
  for (const auto& [p, ext] : m.nouns) {
    out.declare_noun(p);
    for (int i = 0; i < m.size; ++i) {
      if (ext[i]) out.add_to_noun(p, i);
    }
  }
  for (const auto& [r, rel] : m.verbs) {
    out.declare_verb(r);
    for (int a = 0; a < m.size; ++a) {
      for (int b = 0; b < m.size; ++b) {
        if (rel[a][b]) out.add_pair(r, a, b);
      }
    }
  }
  return out;
}

Model from_finite(const relsyl::FiniteModel& m, const relsyl::Vocabulary& vocab) {
  Model out;
  out.size = static_cast<int>(m.size());
  for (const auto& p : vocab.nouns) {
    std::vector<bool> ext(out.size);
    for (int i = 0; i < out.size; ++i) ext[i] = m.noun(p).test(i);
    out.nouns[p] = ext;
  }
  for (const auto& r : vocab.verbs) {
    std::vector<std::vector<bool>> rel(out.size, std::vector<bool>(out.size));
    for (int a = 0; a < out.size; ++a) {
      for (int b = 0; b < out.size; ++b) rel[a][b] = m.related(r, a, b);
    }
    out.verbs[r] = rel;
  }
  return out;
}

}  // namespace naive
