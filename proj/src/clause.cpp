#include "relsyl/clause.hpp"

#include <algorithm>

#include "relsyl/errors.hpp"

namespace relsyl {

Term normalize_literal(const Term& t) {
  Term cur = t;
  while (cur.kind() == TermKind::Not && cur.body().kind() == TermKind::Not) {
    cur = cur.body().body();
  }
  return cur;
}

Term complement_literal(const Term& t) {
  Term n = normalize_literal(t);
  return n.kind() == TermKind::Not ? n.body() : Term::negate(n);
}

bool complementary(const Term& a, const Term& b) {
  return complement_literal(a) == normalize_literal(b);
}

Clause::Clause(bool empty_meet, const std::vector<Term>& literals) : empty_meet_(empty_meet) {
  if (literals.empty()) throw std::invalid_argument("clause needs a literal");
  for (const Term& t : literals) lits_.push_back(normalize_literal(t));
  std::sort(lits_.begin(), lits_.end());
  lits_.erase(std::unique(lits_.begin(), lits_.end()), lits_.end());
}

std::optional<Clause> Clause::from_sentence(const Sentence& s) {
  if (s.kind() == SentenceKind::EmptyMeet) return Clause(true, s.terms());
  if (s.kind() == SentenceKind::NonemptyMeet) return Clause(false, s.terms());
  return std::nullopt;
}

bool Clause::contains(const Term& lit) const {
  return std::binary_search(lits_.begin(), lits_.end(), normalize_literal(lit));
}

bool Clause::subsumes(const Clause& other) const {
  return empty_meet_ == other.empty_meet_ &&
         std::includes(other.lits_.begin(), other.lits_.end(), lits_.begin(), lits_.end());
}

int Clause::depth() const {
  int d = 0;
  for (const Term& t : lits_) d = std::max(d, t.depth());
  return d;
}

Sentence Clause::to_sentence() const {
  return empty_meet_ ? Sentence::empty_meet(lits_) : Sentence::nonempty_meet(lits_);
}

Sentence embed_l45(const Sentence& s) {
  switch (s.kind()) {
    case SentenceKind::All:
      return Sentence::empty_meet({s.lhs(), Term::negate(s.rhs())});
    case SentenceKind::Some:
      return Sentence::nonempty_meet({s.lhs(), s.rhs()});
    case SentenceKind::EmptyMeet:
    case SentenceKind::NonemptyMeet:
      return s;
    case SentenceKind::AllOrSome:
      break;
  }
  throw FragmentError("no clause form for: " + s.text());
}

Clause embed_clause(const Sentence& s) { return *Clause::from_sentence(embed_l45(s)); }

bool same_clause(const Sentence& a, const Sentence& b) {
  auto ca = Clause::from_sentence(a);
  auto cb = Clause::from_sentence(b);
  return ca && cb && *ca == *cb;
}

}  // namespace relsyl
