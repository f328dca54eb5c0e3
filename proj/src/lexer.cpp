#include "lexer.hpp"

#include <cctype>

namespace relsyl::detail {

namespace {

bool ident_start(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) || c == '_' || c == '@';
}

bool ident_char(char c, bool reserved) {
  if (std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'') return true;
  return reserved && c == '.';
}

}  // namespace

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t nl = text.find('\n', start);
    if (nl == std::string_view::npos) {
      if (start < text.size()) lines.push_back(text.substr(start));
      break;
    }
    std::string_view line = text.substr(start, nl - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(line);
    start = nl + 1;
  }
  return lines;
}

bool is_keyword(std::string_view s) {
  return s == "all" || s == "some" || s == "not" || s == "or" || s == "nouns" || s == "verbs";
}

std::vector<Token> lex_line(std::string_view line, int line_no) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    char c = line[i];
    int col = static_cast<int>(i) + 1;
    if (c == '#') break;
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    Tok single = Tok::End;
    switch (c) {
      case '(': single = Tok::LParen; break;
      case ')': single = Tok::RParen; break;
      case '[': single = Tok::LBracket; break;
      case ']': single = Tok::RBracket; break;
      case '<': single = Tok::LAngle; break;
      case '>': single = Tok::RAngle; break;
      case ':': single = Tok::Colon; break;
      case '~': single = Tok::Tilde; break;
      default: break;
    }
    if (single != Tok::End) {
      out.push_back({single, std::string(1, c), line_no, col});
      ++i;
      continue;
    }
    if (ident_start(c)) {
      bool reserved = c == '@';
      std::size_t j = i + 1;
      while (j < line.size() && ident_char(line[j], reserved)) ++j;
      if (reserved && j == i + 1) {
        throw ParseError(line_no, col, "lexical error: '@' must be followed by a name");
      }
      out.push_back({Tok::Ident, std::string(line.substr(i, j - i)), line_no, col});
      i = j;
      continue;
    }
    throw ParseError(line_no, col, std::string("lexical error: unexpected character '") + c + "'");
  }
  out.push_back({Tok::End, "", line_no, static_cast<int>(line.size()) + 1});
  return out;
}

const Token& TokenStream::expect(Tok kind, const char* what) {
  if (peek().kind != kind) fail(std::string("expected ") + what);
  return next();
}

void TokenStream::expect_keyword(std::string_view kw) {
  if (!at_keyword(kw)) fail("expected '" + std::string(kw) + "'");
  next();
}

void TokenStream::fail(const std::string& message) const {
  const Token& t = peek();
  std::string found = t.kind == Tok::End ? "end of line" : "'" + t.text + "'";
  throw ParseError(t.line, t.column, "malformed input: " + message + ", found " + found);
}

}  // namespace relsyl::detail
