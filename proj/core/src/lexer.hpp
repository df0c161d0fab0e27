#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "umlf/parse.hpp"

namespace umlf::detail {

enum class TokenKind : std::uint8_t {
  Ident,
  String,
  LBrace,
  RBrace,
  LParen,
  RParen,
  LBracket,
  RBracket,
  Colon,
  Comma,
  Dot,
  Arrow,     // ->
  FatArrow,  // =>
  Equals,
  End,
};

struct Token {
  TokenKind kind = TokenKind::End;
  std::string text;  // identifier spelling or decoded string value
  int line = 1;
  int column = 1;
};

const char* token_kind_name(TokenKind kind);

// Tokenizes the whole input; lexical problems are appended to errors and the
// offending character skipped, so parsing can report everything in one pass.
std::vector<Token> tokenize(std::string_view source, std::vector<ParseError>& errors);

// Shared cursor over the token stream with error collection.
class TokenStream {
 public:
  TokenStream(std::vector<Token> tokens, std::vector<ParseError>& errors)
      : tokens_(std::move(tokens)), errors_(errors) {}

  const Token& peek() const { return tokens_[pos_]; }
  const Token& next();
  bool at_end() const { return peek().kind == TokenKind::End; }

  bool check(TokenKind kind) const { return peek().kind == kind; }
  bool check_ident(std::string_view spelling) const {
    return peek().kind == TokenKind::Ident && peek().text == spelling;
  }
  bool accept(TokenKind kind);
  bool accept_ident(std::string_view spelling);

  // Consumes and returns true on match; otherwise records an error naming
  // what was expected and leaves the cursor in place.
  bool expect(TokenKind kind, std::string_view expected);
  // As expect, but yields the identifier text.
  bool expect_ident(std::string& out, std::string_view expected);

  void error_here(std::string expected);
  static std::string describe(const Token& token);

  std::vector<ParseError>& errors() { return errors_; }

 private:
  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  std::vector<ParseError>& errors_;
};

}  // namespace umlf::detail
