// Line-oriented tokenizer shared by the theory readers.
#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "relsyl/syntax.hpp"

namespace relsyl::detail {

enum class Tok { Ident, LParen, RParen, LBracket, RBracket, LAngle, RAngle, Colon, Tilde, End };

struct Token {
  Tok kind;
  std::string text;
  int line;
  int column;
};

// Tokenizes one line; '#' starts a comment that runs to the end of the line.
std::vector<Token> lex_line(std::string_view line, int line_no);

std::vector<std::string_view> split_lines(std::string_view text);

bool is_keyword(std::string_view s);

class TokenStream {
 public:
  explicit TokenStream(std::vector<Token> tokens) : toks_(std::move(tokens)) {}

  const Token& peek(std::size_t ahead = 0) const {
    std::size_t i = pos_ + ahead;
    return i < toks_.size() ? toks_[i] : toks_.back();
  }
  const Token& next() {
    const Token& t = peek();
    if (pos_ + 1 < toks_.size()) ++pos_;
    return t;
  }
  bool at_end() const { return peek().kind == Tok::End; }
  bool at_keyword(std::string_view kw) const {
    return peek().kind == Tok::Ident && peek().text == kw;
  }
  const Token& expect(Tok kind, const char* what);
  void expect_keyword(std::string_view kw);
  [[noreturn]] void fail(const std::string& message) const;

 private:
  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

}  // namespace relsyl::detail
