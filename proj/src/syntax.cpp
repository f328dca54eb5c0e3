#include "relsyl/syntax.hpp"

#include <algorithm>
#include <cctype>
#include <functional>

#include "lexer.hpp"

namespace relsyl {

using detail::Tok;
using detail::TokenStream;

// ---------------------------------------------------------------- terms

struct Term::Node {
  TermKind kind;
  std::string name;
  std::shared_ptr<const Node> body;
  std::string text;
  std::size_t hash;
  int depth;
};

namespace {

std::size_t text_hash(const std::string& s) { return std::hash<std::string>{}(s); }

void require_identifier(const std::string& name, const char* role) {
  if (!is_identifier(name) && !is_reserved_identifier(name)) {
    throw std::invalid_argument(std::string("invalid ") + role + " name '" + name + "'");
  }
}

}  // namespace

Term Term::noun(std::string name) {
  require_identifier(name, "noun");
  auto n = std::make_shared<Node>();
  n->kind = TermKind::Noun;
  n->text = name;
  n->name = std::move(name);
  n->hash = text_hash(n->text);
  n->depth = 0;
  return Term(std::move(n));
}

Term Term::all_of(std::string verb, Term body) {
  require_identifier(verb, "verb");
  if (body.is_null()) throw std::invalid_argument("null term body");
  auto n = std::make_shared<Node>();
  n->kind = TermKind::AllOf;
  n->text = "(" + verb + " all " + body.text() + ")";
  n->name = std::move(verb);
  n->depth = body.depth() + 1;
  n->body = std::move(body.node_);
  n->hash = text_hash(n->text);
  return Term(std::move(n));
}

Term Term::some_of(std::string verb, Term body) {
  require_identifier(verb, "verb");
  if (body.is_null()) throw std::invalid_argument("null term body");
  auto n = std::make_shared<Node>();
  n->kind = TermKind::SomeOf;
  n->text = "(" + verb + " some " + body.text() + ")";
  n->name = std::move(verb);
  n->depth = body.depth() + 1;
  n->body = std::move(body.node_);
  n->hash = text_hash(n->text);
  return Term(std::move(n));
}

Term Term::negate(Term body) {
  if (body.is_null()) throw std::invalid_argument("null term body");
  auto n = std::make_shared<Node>();
  n->kind = TermKind::Not;
  n->text = "(not " + body.text() + ")";
  n->depth = body.depth() + 1;
  n->body = std::move(body.node_);
  n->hash = text_hash(n->text);
  return Term(std::move(n));
}

TermKind Term::kind() const { return node_->kind; }
const std::string& Term::name() const { return node_->name; }
Term Term::body() const { return Term(node_->body); }
const std::string& Term::text() const { return node_->text; }
int Term::depth() const { return node_->depth; }
std::size_t Term::hash() const { return node_ ? node_->hash : 0; }

bool Term::operator==(const Term& other) const {
  if (node_ == other.node_) return true;
  if (!node_ || !other.node_) return false;
  return node_->hash == other.node_->hash && node_->text == other.node_->text;
}

std::strong_ordering Term::operator<=>(const Term& other) const {
  if (node_ == other.node_) return std::strong_ordering::equal;
  if (!node_) return std::strong_ordering::less;
  if (!other.node_) return std::strong_ordering::greater;
  int c = node_->text.compare(other.node_->text);
  return c < 0 ? std::strong_ordering::less
               : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

// ------------------------------------------------------------ sentences

struct Sentence::Data {
  SentenceKind kind;
  std::vector<Term> terms;
  std::string text;
  std::size_t hash;
};

Sentence Sentence::make(SentenceKind kind, std::vector<Term> terms) {
  std::size_t want = 0;
  switch (kind) {
    case SentenceKind::All:
    case SentenceKind::Some: want = 2; break;
    case SentenceKind::AllOrSome: want = 4; break;
    case SentenceKind::EmptyMeet:
    case SentenceKind::NonemptyMeet: want = 0; break;
  }
  if (want != 0 && terms.size() != want) {
    throw std::invalid_argument("wrong number of terms for sentence");
  }
  if (want == 0 && terms.empty()) throw std::invalid_argument("meet sentence needs a term");
  for (const Term& t : terms) {
    if (t.is_null()) throw std::invalid_argument("null term in sentence");
  }
  auto d = std::make_shared<Data>();
  d->kind = kind;
  std::string& s = d->text;
  switch (kind) {
    case SentenceKind::All:
      s = "all " + terms[0].text() + " " + terms[1].text();
      break;
    case SentenceKind::Some:
      s = "some " + terms[0].text() + " " + terms[1].text();
      break;
    case SentenceKind::AllOrSome:
      s = "all " + terms[0].text() + " " + terms[1].text() + " or some " + terms[2].text() + " " +
          terms[3].text();
      break;
    case SentenceKind::EmptyMeet:
    case SentenceKind::NonemptyMeet:
      s = kind == SentenceKind::EmptyMeet ? "[" : "<";
      for (const Term& t : terms) s += " " + t.text();
      s += kind == SentenceKind::EmptyMeet ? " ]" : " >";
      break;
  }
  d->terms = std::move(terms);
  d->hash = text_hash(d->text);
  return Sentence(std::move(d));
}

Sentence Sentence::all(Term x, Term y) { return make(SentenceKind::All, {std::move(x), std::move(y)}); }
Sentence Sentence::some(Term x, Term y) {
  return make(SentenceKind::Some, {std::move(x), std::move(y)});
}
Sentence Sentence::all_or_some(Term a, Term b, Term x, Term y) {
  return make(SentenceKind::AllOrSome, {std::move(a), std::move(b), std::move(x), std::move(y)});
}
Sentence Sentence::empty_meet(std::vector<Term> terms) {
  return make(SentenceKind::EmptyMeet, std::move(terms));
}
Sentence Sentence::nonempty_meet(std::vector<Term> terms) {
  return make(SentenceKind::NonemptyMeet, std::move(terms));
}

SentenceKind Sentence::kind() const { return data_->kind; }
const std::vector<Term>& Sentence::terms() const { return data_->terms; }
const std::string& Sentence::text() const { return data_->text; }
std::size_t Sentence::hash() const { return data_ ? data_->hash : 0; }

bool Sentence::operator==(const Sentence& other) const {
  if (data_ == other.data_) return true;
  if (!data_ || !other.data_) return false;
  return data_->hash == other.data_->hash && data_->text == other.data_->text;
}

std::strong_ordering Sentence::operator<=>(const Sentence& other) const {
  if (data_ == other.data_) return std::strong_ordering::equal;
  if (!data_) return std::strong_ordering::less;
  if (!other.data_) return std::strong_ordering::greater;
  int c = data_->text.compare(other.data_->text);
  return c < 0 ? std::strong_ordering::less
               : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

bool Theory::add(const Sentence& s) {
  if (contains(s)) return false;
  sentences.push_back(s);
  return true;
}

bool Theory::contains(const Sentence& s) const {
  return std::find(sentences.begin(), sentences.end(), s) != sentences.end();
}

ParseError::ParseError(int line, int column, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) +
                         ": " + message),
      line_(line),
      column_(column),
      detail_(message) {}

// -------------------------------------------------------------- reading

bool is_identifier(std::string_view s) {
  if (s.empty()) return false;
  char c = s[0];
  if (!(std::isalpha(static_cast<unsigned char>(c)) || c == '_')) return false;
  for (char ch : s) {
    if (!(std::isalnum(static_cast<unsigned char>(ch)) || ch == '_' || ch == '\'')) return false;
  }
  return !detail::is_keyword(s);
}

bool is_reserved_identifier(std::string_view s) {
  if (s.size() < 2 || s[0] != '@') return false;
  for (char ch : s.substr(1)) {
    if (!(std::isalnum(static_cast<unsigned char>(ch)) || ch == '_' || ch == '\'' || ch == '.')) {
      return false;
    }
  }
  return true;
}

namespace {

class SentenceReader {
 public:
  SentenceReader(TokenStream& ts, Vocabulary* vocab, const ParseOptions& opts)
      : ts_(ts), vocab_(vocab), opts_(opts) {}

  Term term() {
    const detail::Token& t = ts_.peek();
    if (t.kind == Tok::Ident) {
      if (detail::is_keyword(t.text)) ts_.fail("expected a term");
      std::string name = resolve(ts_.next(), /*verb=*/false);
      return Term::noun(std::move(name));
    }
    if (t.kind != Tok::LParen) ts_.fail("expected a term");
    ts_.next();
    Term result;
    if (ts_.at_keyword("not")) {
      ts_.next();
      result = Term::negate(term());
    } else {
      if (ts_.peek().kind != Tok::Ident || detail::is_keyword(ts_.peek().text)) {
        ts_.fail("expected a verb or 'not'");
      }
      std::string verb = resolve(ts_.next(), /*verb=*/true);
      if (ts_.at_keyword("all")) {
        ts_.next();
        result = Term::all_of(std::move(verb), term());
      } else if (ts_.at_keyword("some")) {
        ts_.next();
        result = Term::some_of(std::move(verb), term());
      } else {
        ts_.fail("expected 'all' or 'some'");
      }
    }
    ts_.expect(Tok::RParen, "')'");
    return result;
  }

  Sentence sentence() {
    Sentence s;
    if (ts_.at_keyword("all")) {
      ts_.next();
      Term x = term();
      Term y = term();
      if (ts_.at_keyword("or")) {
        ts_.next();
        ts_.expect_keyword("some");
        Term u = term();
        Term v = term();
        s = Sentence::all_or_some(x, y, u, v);
      } else {
        s = Sentence::all(x, y);
      }
    } else if (ts_.at_keyword("some")) {
      ts_.next();
      Term x = term();
      Term y = term();
      s = Sentence::some(x, y);
    } else if (ts_.peek().kind == Tok::LBracket || ts_.peek().kind == Tok::LAngle) {
      bool empty = ts_.next().kind == Tok::LBracket;
      Tok close = empty ? Tok::RBracket : Tok::RAngle;
      std::vector<Term> terms;
      while (ts_.peek().kind != close) terms.push_back(term());
      ts_.next();
      if (terms.empty()) ts_.fail("a meet needs at least one term");
      s = empty ? Sentence::empty_meet(std::move(terms)) : Sentence::nonempty_meet(std::move(terms));
    } else {
      ts_.fail("expected a sentence");
    }
    if (!ts_.at_end()) ts_.fail("unexpected trailing input");
    return s;
  }

 private:
  std::string resolve(const detail::Token& tok, bool verb) {
    const std::string& name = tok.text;
    if (name[0] == '@' && !opts_.allow_reserved) {
      throw ParseError(tok.line, tok.column, "reserved identifier '" + name + "'");
    }
    auto& own = verb ? vocab_->verbs : vocab_->nouns;
    auto& other = verb ? vocab_->nouns : vocab_->verbs;
    if (own.count(name)) return name;
    const char* role = verb ? "verb" : "noun";
    if (other.count(name)) {
      throw ParseError(tok.line, tok.column,
                       "'" + name + "' is declared as a " + (verb ? "noun" : "verb") +
                           " but used as a " + role);
    }
    if (!opts_.declare_unknown) {
      throw ParseError(tok.line, tok.column, std::string("undeclared ") + role + " '" + name + "'");
    }
    own.insert(name);
    return name;
  }

  TokenStream& ts_;
  Vocabulary* vocab_;
  const ParseOptions& opts_;
};

void declare(Vocabulary& vocab, TokenStream& ts, bool verbs, const ParseOptions& opts) {
  while (!ts.at_end()) {
    const detail::Token& t = ts.peek();
    if (t.kind != Tok::Ident || detail::is_keyword(t.text)) ts.fail("expected an identifier");
    if (t.text[0] == '@' && !opts.allow_reserved) {
      throw ParseError(t.line, t.column, "reserved identifier '" + t.text + "'");
    }
    auto& own = verbs ? vocab.verbs : vocab.nouns;
    auto& other = verbs ? vocab.nouns : vocab.verbs;
    if (other.count(t.text)) {
      throw ParseError(t.line, t.column, "'" + t.text + "' declared as both noun and verb");
    }
    own.insert(t.text);
    ts.next();
  }
}

bool is_declaration(const std::vector<detail::Token>& toks) {
  return toks.size() >= 2 && toks[0].kind == Tok::Ident &&
         (toks[0].text == "nouns" || toks[0].text == "verbs") && toks[1].kind == Tok::Colon;
}

}  // namespace

Theory parse_theory(std::string_view text, const ParseOptions& options) {
  Theory theory;
  std::vector<std::vector<detail::Token>> lines;
  int line_no = 0;
  for (std::string_view line : detail::split_lines(text)) {
    ++line_no;
    lines.push_back(detail::lex_line(line, line_no));
  }
  // Declarations may appear anywhere in the file.
  for (auto& toks : lines) {
    if (!is_declaration(toks)) continue;
    TokenStream ts(toks);
    bool verbs = ts.next().text == "verbs";
    ts.next();
    declare(theory.vocab, ts, verbs, options);
  }
  for (auto& toks : lines) {
    if (toks.size() == 1 || is_declaration(toks)) continue;
    TokenStream ts(toks);
    SentenceReader reader(ts, &theory.vocab, options);
    Sentence s = reader.sentence();
    if (!theory.add(s)) {
      theory.warnings.push_back("line " + std::to_string(toks[0].line) +
                                ": duplicate sentence dropped: " + s.text());
    }
  }
  return theory;
}

Term parse_term(std::string_view text, Vocabulary* vocab, const ParseOptions& options) {
  Vocabulary scratch;
  if (!vocab) vocab = &scratch;
  TokenStream ts(detail::lex_line(text, 1));
  SentenceReader reader(ts, vocab, options);
  Term t = reader.term();
  if (!ts.at_end()) ts.fail("unexpected trailing input");
  return t;
}

Sentence parse_sentence(std::string_view text, Vocabulary* vocab, const ParseOptions& options) {
  Vocabulary scratch;
  if (!vocab) vocab = &scratch;
  TokenStream ts(detail::lex_line(text, 1));
  if (ts.at_end()) ts.fail("expected a sentence");
  SentenceReader reader(ts, vocab, options);
  return reader.sentence();
}

// ------------------------------------------------------------- printing

std::string print_term(const Term& t) { return t.text(); }
std::string print_sentence(const Sentence& s) { return s.text(); }

std::string print_theory(const Theory& theory) {
  std::string out;
  auto names = [&](const char* header, const std::set<std::string>& ids) {
    if (ids.empty()) return;
    out += header;
    for (const auto& id : ids) out += " " + id;
    out += "\n";
  };
  names("nouns:", theory.vocab.nouns);
  names("verbs:", theory.vocab.verbs);
  for (const Sentence& s : theory.sentences) out += s.text() + "\n";
  return out;
}

// ------------------------------------------------------------ fragments

namespace {

enum Feature : unsigned {
  kSome = 1,
  kSomeOf = 2,
  kNot = 4,
  kDisjunction = 8,
  kEmptyMeet = 16,
  kNonemptyMeet = 32,
  kRStar = 64,
};

struct FragmentInfo {
  Fragment fragment;
  const char* name;
  const char* alias;
  unsigned features;
};

constexpr FragmentInfo kFragments[] = {
    {Fragment::L1, "L1", "L1", 0},
    {Fragment::L2, "L2", "L2", kSome},
    {Fragment::L2Plus, "L2Plus", "L2+", kSome | kDisjunction},
    {Fragment::L3, "L3", "L3", kSomeOf},
    {Fragment::L3Half, "L3Half", "L3.5", kSomeOf | kSome},
    {Fragment::L4, "L4", "L4", kNot},
    {Fragment::L4Half, "L4Half", "L4.5", kNot | kSome},
    {Fragment::L4Plus, "L4Plus", "L4+", kNot | kEmptyMeet},
    {Fragment::L4HalfPlus, "L4HalfPlus", "L4.5+", kNot | kSome | kEmptyMeet | kNonemptyMeet},
    {Fragment::L5, "L5", "L5", kSomeOf | kNot},
    {Fragment::L5Half, "L5Half", "L5.5", kSomeOf | kNot | kSome},
    {Fragment::RStarDagger, "RStarDagger", "R*", kRStar},
};

const FragmentInfo& info(Fragment f) {
  for (const auto& i : kFragments) {
    if (i.fragment == f) return i;
  }
  throw std::logic_error("unknown fragment");
}

void term_features(const Term& t, unsigned& f) {
  switch (t.kind()) {
    case TermKind::Noun: return;
    case TermKind::AllOf: break;
    case TermKind::SomeOf: f |= kSomeOf; break;
    case TermKind::Not: f |= kNot; break;
  }
  term_features(t.body(), f);
}

}  // namespace

std::string fragment_name(Fragment f) { return info(f).name; }

std::optional<Fragment> parse_fragment(std::string_view name) {
  for (const auto& i : kFragments) {
    if (name == i.name || name == i.alias) return i.fragment;
  }
  return std::nullopt;
}

bool includes(Fragment big, Fragment small) {
  if ((big == Fragment::RStarDagger) != (small == Fragment::RStarDagger)) return false;
  unsigned b = info(big).features;
  unsigned s = info(small).features;
  return (s & ~b) == 0;
}

std::optional<Fragment> fragment_of(const std::vector<Sentence>& sentences) {
  unsigned used = 0;
  for (const Sentence& s : sentences) {
    switch (s.kind()) {
      case SentenceKind::All: break;
      case SentenceKind::Some: used |= kSome; break;
      case SentenceKind::AllOrSome: used |= kDisjunction; break;
      case SentenceKind::EmptyMeet: used |= kEmptyMeet; break;
      case SentenceKind::NonemptyMeet: used |= kNonemptyMeet; break;
    }
    for (const Term& t : s.terms()) term_features(t, used);
  }
  std::optional<Fragment> best;
  for (const auto& i : kFragments) {
    if ((used & ~i.features) != 0) continue;
    if (!best || includes(*best, i.fragment)) best = i.fragment;
  }
  return best;
}

std::optional<Fragment> fragment_of(const Theory& theory) { return fragment_of(theory.sentences); }

// ------------------------------------------------------------ term sets

namespace {

void collect_subterms(const Term& t, TermSet& out) {
  Term cur = t;
  while (out.insert(cur).second && cur.kind() != TermKind::Noun) cur = cur.body();
}

}  // namespace

TermSet subterms(const Term& t) {
  TermSet out;
  collect_subterms(t, out);
  return out;
}

TermSet term_closure(const std::vector<Sentence>& sentences) {
  TermSet out;
  for (const Sentence& s : sentences) {
    for (const Term& t : s.terms()) collect_subterms(t, out);
  }
  return out;
}

std::set<std::string> verbs_in(const Term& t) {
  std::set<std::string> out;
  for (Term cur = t; cur.kind() != TermKind::Noun; cur = cur.body()) {
    if (cur.kind() != TermKind::Not) out.insert(cur.name());
  }
  return out;
}

std::set<std::string> nouns_in(const Term& t) {
  Term cur = t;
  while (cur.kind() != TermKind::Noun) cur = cur.body();
  return {cur.name()};
}

std::set<std::string> verbs_in(const std::vector<Sentence>& sentences) {
  std::set<std::string> out;
  for (const Sentence& s : sentences) {
    for (const Term& t : s.terms()) out.merge(verbs_in(t));
  }
  return out;
}

std::set<std::string> nouns_in(const std::vector<Sentence>& sentences) {
  std::set<std::string> out;
  for (const Sentence& s : sentences) {
    for (const Term& t : s.terms()) out.merge(nouns_in(t));
  }
  return out;
}

TermSet extend_terms(const TermSet& terms, const std::set<std::string>& verbs, bool with_some_of) {
  TermSet out = terms;
  for (const Term& w : terms) {
    for (const std::string& r : verbs) {
      out.insert(Term::all_of(r, w));
      if (with_some_of) out.insert(Term::some_of(r, w));
    }
  }
  return out;
}

TermSet extended_terms(const std::vector<Sentence>& sentences, bool with_some_of) {
  return extend_terms(term_closure(sentences), verbs_in(sentences), with_some_of);
}

int max_depth(const std::vector<Sentence>& sentences) {
  int d = 0;
  for (const Sentence& s : sentences) {
    for (const Term& t : s.terms()) d = std::max(d, t.depth());
  }
  return d;
}

}  // namespace relsyl
