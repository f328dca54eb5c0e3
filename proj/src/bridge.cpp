#include "relsyl/bridge.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "lexer.hpp"
#include "relsyl/errors.hpp"

namespace relsyl {

using detail::Tok;
using detail::TokenStream;

std::string print_rstar_term(const RStarTerm& t) {
  switch (t.kind) {
    case RStarKind::Noun: return t.noun;
    case RStarKind::NounBar: return "(not " + t.noun + ")";
    case RStarKind::AllOf:
    case RStarKind::SomeOf:
      return "(" + std::string(t.complemented ? "~" : "") + t.verb +
             (t.kind == RStarKind::AllOf ? " all " : " some ") + t.noun + ")";
  }
  return {};
}

std::string print_rstar_sentence(const RStarSentence& s) {
  return std::string(s.universal ? "all " : "some ") + print_rstar_term(s.lhs) + " " + print_rstar_term(s.rhs);
}

std::string print_rstar_theory(const RStarTheory& th) {
  std::string out;
  auto names = [&](const char* header, const std::set<std::string>& ids) {
    if (ids.empty()) return;
    out += header;
    for (const auto& id : ids) out += " " + id;
    out += "\n";
  };
  names("nouns:", th.vocab.nouns);
  names("verbs:", th.vocab.verbs);
  for (const auto& s : th.sentences) out += print_rstar_sentence(s) + "\n";
  return out;
}

namespace {

class RStarReader {
 public:
  RStarReader(TokenStream& ts, Vocabulary* vocab, const ParseOptions& opts)
      : ts_(ts), vocab_(vocab), opts_(opts) {}

  RStarTerm term() {
    if (ts_.peek().kind == Tok::Ident) return RStarTerm::make_noun(name(false));
    ts_.expect(Tok::LParen, "a flat term");
    RStarTerm t;
    if (ts_.at_keyword("not")) {
      ts_.next();
      if (ts_.peek().kind != Tok::Ident) ts_.fail("expected a noun after 'not' in a flat term");
      t = RStarTerm::noun_bar(name(false));
    } else {
      bool bar = false;
      if (ts_.peek().kind == Tok::Tilde) {
        ts_.next();
        bar = true;
      }
      std::string verb = name(true);
      bool all = ts_.at_keyword("all");
      if (!all && !ts_.at_keyword("some")) ts_.fail("expected 'all' or 'some'");
      ts_.next();
      if (ts_.peek().kind != Tok::Ident) ts_.fail("expected a noun: flat terms do not nest");
      std::string p = name(false);
      t = all ? RStarTerm::all_of(verb, bar, p) : RStarTerm::some_of(verb, bar, p);
    }
    ts_.expect(Tok::RParen, "')'");
    return t;
  }

  RStarSentence sentence() {
    RStarSentence s;
    if (ts_.at_keyword("all")) {
      s.universal = true;
    } else if (ts_.at_keyword("some")) {
      s.universal = false;
    } else {
      ts_.fail("expected 'all' or 'some'");
    }
    ts_.next();
    s.lhs = term();
    s.rhs = term();
    if (!ts_.at_end()) ts_.fail("unexpected trailing input");
    return s;
  }

 private:
  std::string name(bool verb) {
    const detail::Token& tok = ts_.peek();
    if (tok.kind != Tok::Ident || detail::is_keyword(tok.text)) ts_.fail(verb ? "expected a verb" : "expected a noun");
    ts_.next();
    const std::string& id = tok.text;
    if (id[0] == '@' && !opts_.allow_reserved) {
      throw ParseError(tok.line, tok.column, "reserved identifier '" + id + "'");
    }
    auto& own = verb ? vocab_->verbs : vocab_->nouns;
    auto& other = verb ? vocab_->nouns : vocab_->verbs;
    if (own.count(id)) return id;
    if (other.count(id)) {
      throw ParseError(tok.line, tok.column, "'" + id + "' is declared as a " + (verb ? "noun" : "verb"));
    }
    if (!opts_.declare_unknown) {
      throw ParseError(tok.line, tok.column, std::string("undeclared ") + (verb ? "verb" : "noun") + " '" + id + "'");
    }
    own.insert(id);
    return id;
  }

  TokenStream& ts_;
  Vocabulary* vocab_;
  const ParseOptions& opts_;
};

bool is_declaration(const std::vector<detail::Token>& toks) {
  return toks.size() >= 2 && toks[0].kind == Tok::Ident &&
         (toks[0].text == "nouns" || toks[0].text == "verbs") && toks[1].kind == Tok::Colon;
}

}  // namespace

RStarTheory parse_rstar_theory(std::string_view text, const ParseOptions& options) {
  RStarTheory th;
  std::vector<std::vector<detail::Token>> lines;
  int line_no = 0;
  for (std::string_view line : detail::split_lines(text)) lines.push_back(detail::lex_line(line, ++line_no));
  for (auto& toks : lines) {
    if (!is_declaration(toks)) continue;
    TokenStream ts(toks);
    bool verbs = ts.next().text == "verbs";
    ts.next();
    while (!ts.at_end()) {
      const detail::Token& t = ts.next();
      if (t.kind != Tok::Ident || detail::is_keyword(t.text)) {
        throw ParseError(t.line, t.column, "expected an identifier");
      }
      if (t.text[0] == '@' && !options.allow_reserved) {
        throw ParseError(t.line, t.column, "reserved identifier '" + t.text + "'");
      }
      if ((verbs ? th.vocab.nouns : th.vocab.verbs).count(t.text)) {
        throw ParseError(t.line, t.column, "'" + t.text + "' declared as both noun and verb");
      }
      (verbs ? th.vocab.verbs : th.vocab.nouns).insert(t.text);
    }
  }
  std::set<RStarSentence> seen;
  for (auto& toks : lines) {
    if (toks.size() == 1 || is_declaration(toks)) continue;
    TokenStream ts(toks);
    RStarReader reader(ts, &th.vocab, options);
    RStarSentence s = reader.sentence();
    if (seen.insert(s).second) th.sentences.push_back(s);
  }
  return th;
}

RStarSentence parse_rstar_sentence(std::string_view text, Vocabulary* vocab, const ParseOptions& options) {
  Vocabulary scratch;
  if (!vocab) vocab = &scratch;
  TokenStream ts(detail::lex_line(text, 1));
  RStarReader reader(ts, vocab, options);
  return reader.sentence();
}

Term star_translate(const RStarTerm& t) {
  Term p = Term::noun(t.noun);
  switch (t.kind) {
    case RStarKind::Noun: return p;
    case RStarKind::NounBar: return Term::negate(p);
    case RStarKind::AllOf:
      return t.complemented ? Term::negate(Term::some_of(t.verb, p)) : Term::all_of(t.verb, p);
    case RStarKind::SomeOf:
      return t.complemented ? Term::negate(Term::all_of(t.verb, p)) : Term::some_of(t.verb, p);
  }
  return p;
}

Sentence star_translate(const RStarSentence& s) {
  Term x = star_translate(s.lhs);
  Term y = star_translate(s.rhs);
  return s.universal ? Sentence::all(x, y) : Sentence::some(x, y);
}

std::vector<Sentence> star_translate(const std::vector<RStarSentence>& sentences) {
  std::vector<Sentence> out;
  out.reserve(sentences.size());
  for (const auto& s : sentences) out.push_back(star_translate(s));
  return out;
}

ElementSet eval_rstar(const FiniteModel& m, const RStarTerm& t) {
  auto nouns = m.noun_names();
  auto verbs = m.verb_names();
  auto known = [](const std::vector<std::string>& ids, const std::string& id) {
    return std::find(ids.begin(), ids.end(), id) != ids.end();
  };
  if (!known(nouns, t.noun)) throw std::invalid_argument("model does not interpret noun '" + t.noun + "'");
  const ElementSet& p = m.noun(t.noun);
  if (t.kind == RStarKind::Noun) return p;
  if (t.kind == RStarKind::NounBar) return p.complement();
  if (!known(verbs, t.verb)) throw std::invalid_argument("model does not interpret verb '" + t.verb + "'");
  ElementSet out(m.size());
  for (std::size_t a = 0; a < m.size(); ++a) {
    ElementSet succ = m.successors(t.verb, a);
    if (t.complemented) succ = succ.complement();
    bool in = t.kind == RStarKind::AllOf ? p.subset_of(succ) : p.intersects(succ);
    if (in) out.set(a);
  }
  return out;
}

bool satisfies_rstar(const FiniteModel& m, const RStarSentence& s) {
  ElementSet x = eval_rstar(m, s.lhs);
  ElementSet y = eval_rstar(m, s.rhs);
  return s.universal ? x.subset_of(y) : x.intersects(y);
}

namespace {

std::string prefix_form(const Term& t) {
  switch (t.kind()) {
    case TermKind::Noun: return t.name();
    case TermKind::AllOf: return t.name() + ".all." + prefix_form(t.body());
    case TermKind::SomeOf: return t.name() + ".some." + prefix_form(t.body());
    case TermKind::Not: return "not." + prefix_form(t.body());
  }
  return {};
}

}  // namespace

std::string flat_name(const Term& t) { return "@" + prefix_form(t); }

FlattenResult flatten(const std::vector<Sentence>& gamma, const Sentence& phi) {
  std::vector<Sentence> all = gamma;
  all.push_back(phi);
  for (const Sentence& s : all) {
    if (s.kind() != SentenceKind::All && s.kind() != SentenceKind::Some) {
      throw FragmentError("flatten takes all/some sentences only: " + s.text());
    }
  }
  auto f = fragment_of(all);
  if (!f || !includes(Fragment::L5Half, *f)) throw FragmentError("flatten takes L5.5 input");

  FlattenResult out;
  Vocabulary& vocab = out.theory.vocab;
  vocab.nouns = nouns_in(all);
  vocab.verbs = verbs_in(all);
  TermSet terms = term_closure(all);
  for (const Term& t : terms) {
    out.names[t] = flat_name(t);
    vocab.nouns.insert(out.names[t]);
  }
  std::set<RStarSentence> seen;
  auto emit = [&](bool universal, RStarTerm x, RStarTerm y) {
    RStarSentence s{universal, std::move(x), std::move(y)};
    if (seen.insert(s).second) out.theory.sentences.push_back(s);
  };
  auto both = [&](const RStarTerm& x, const RStarTerm& y) {
    emit(true, x, y);
    emit(true, y, x);
  };
  for (const Term& t : terms) {
    RStarTerm xt = RStarTerm::make_noun(out.names.at(t));
    switch (t.kind()) {
      case TermKind::Noun: both(xt, RStarTerm::make_noun(t.name())); break;
      case TermKind::AllOf: both(xt, RStarTerm::all_of(t.name(), false, out.names.at(t.body()))); break;
      case TermKind::SomeOf: both(xt, RStarTerm::some_of(t.name(), false, out.names.at(t.body()))); break;
      case TermKind::Not: {
        // the complement rows depend on what is complemented
        Term u = t.body();
        switch (u.kind()) {
          case TermKind::Noun: both(xt, RStarTerm::noun_bar(u.name())); break;
          case TermKind::AllOf: both(xt, RStarTerm::some_of(u.name(), true, out.names.at(u.body()))); break;
          case TermKind::SomeOf: both(xt, RStarTerm::all_of(u.name(), true, out.names.at(u.body()))); break;
          case TermKind::Not: both(xt, RStarTerm::make_noun(out.names.at(u.body()))); break;
        }
        break;
      }
    }
  }
  out.bridge_rows = out.theory.sentences.size();
  auto rename = [&](const Sentence& s) {
    return RStarSentence{s.kind() == SentenceKind::All, RStarTerm::make_noun(out.names.at(s.lhs())),
                         RStarTerm::make_noun(out.names.at(s.rhs()))};
  };
  for (const Sentence& s : gamma) emit(s.kind() == SentenceKind::All, rename(s).lhs, rename(s).rhs);
  out.goal = rename(phi);
  return out;
}

FiniteModel expand_model(const FiniteModel& m, const FlattenResult& f) {
  FiniteModel out = m;
  for (const auto& [t, name] : f.names) out.set_noun(name, eval_term(m, t));
  return out;
}

FiniteModel restrict_model(const FiniteModel& m, const Vocabulary& vocab) {
  FiniteModel out(m.labels());
  for (const auto& p : vocab.nouns) out.set_noun(p, m.noun(p));
  for (const auto& r : vocab.verbs) {
    out.declare_verb(r);
    for (std::size_t a = 0; a < m.size(); ++a) {
      for (std::size_t b : m.successors(r, a).elements()) out.add_pair(r, a, b);
    }
  }
  return out;
}

}  // namespace relsyl
