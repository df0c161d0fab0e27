#include "lexer.hpp"

#include <cctype>

namespace umlf::detail {

namespace {

bool ident_start(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}

bool ident_continue(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

}  // namespace

const char* token_kind_name(TokenKind kind) {
  switch (kind) {
    case TokenKind::Ident: return "identifier";
    case TokenKind::String: return "string";
    case TokenKind::LBrace: return "'{'";
    case TokenKind::RBrace: return "'}'";
    case TokenKind::LParen: return "'('";
    case TokenKind::RParen: return "')'";
    case TokenKind::LBracket: return "'['";
    case TokenKind::RBracket: return "']'";
    case TokenKind::Colon: return "':'";
    case TokenKind::Comma: return "','";
    case TokenKind::Dot: return "'.'";
    case TokenKind::Arrow: return "'->'";
    case TokenKind::FatArrow: return "'=>'";
    case TokenKind::Equals: return "'='";
    case TokenKind::End: return "end of input";
  }
  return "token";
}

std::vector<Token> tokenize(std::string_view source, std::vector<ParseError>& errors) {
  std::vector<Token> tokens;
  int line = 1;
  int column = 1;
  std::size_t i = 0;
  const std::size_t n = source.size();

  auto advance = [&](std::size_t count) {
    for (std::size_t k = 0; k < count && i < n; ++k, ++i) {
      if (source[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
  };
  auto push = [&](TokenKind kind, std::string text, int l, int c) {
    tokens.push_back({kind, std::move(text), l, c});
  };

  while (i < n) {
    const char c = source[i];
    if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
      advance(1);
      continue;
    }
    if (c == '/' && i + 1 < n && source[i + 1] == '/') {
      while (i < n && source[i] != '\n') advance(1);
      continue;
    }
    const int tl = line;
    const int tc = column;
    if (ident_start(c)) {
      std::size_t j = i;
      while (j < n) {
        if (ident_continue(source[j])) {
          ++j;
        } else if (source[j] == '-' && j + 1 < n && ident_continue(source[j + 1])) {
          // Hyphen joins words inside names like appl-class; a bare '-' is
          // left for the arrow token.
          j += 2;
        } else {
          break;
        }
      }
      push(TokenKind::Ident, std::string(source.substr(i, j - i)), tl, tc);
      advance(j - i);
      continue;
    }
    if (c == '"') {
      std::string value;
      std::size_t j = i + 1;
      bool closed = false;
      while (j < n) {
        if (source[j] == '"') {
          closed = true;
          ++j;
          break;
        }
        if (source[j] == '\\' && j + 1 < n &&
            (source[j + 1] == '"' || source[j + 1] == '\\')) {
          value.push_back(source[j + 1]);
          j += 2;
          continue;
        }
        if (source[j] == '\n') break;
        value.push_back(source[j]);
        ++j;
      }
      if (!closed) {
        errors.push_back({tl, tc, "closing '\"'", "end of line"});
        advance(j - i);
        continue;
      }
      push(TokenKind::String, std::move(value), tl, tc);
      advance(j - i);
      continue;
    }
    if (c == '-' && i + 1 < n && source[i + 1] == '>') {
      push(TokenKind::Arrow, "->", tl, tc);
      advance(2);
      continue;
    }
    if (c == '=' && i + 1 < n && source[i + 1] == '>') {
      push(TokenKind::FatArrow, "=>", tl, tc);
      advance(2);
      continue;
    }
    TokenKind kind;
    switch (c) {
      case '{': kind = TokenKind::LBrace; break;
      case '}': kind = TokenKind::RBrace; break;
      case '(': kind = TokenKind::LParen; break;
      case ')': kind = TokenKind::RParen; break;
      case '[': kind = TokenKind::LBracket; break;
      case ']': kind = TokenKind::RBracket; break;
      case ':': kind = TokenKind::Colon; break;
      case ',': kind = TokenKind::Comma; break;
      case '.': kind = TokenKind::Dot; break;
      case '=': kind = TokenKind::Equals; break;
      default: {
        errors.push_back(
            {tl, tc, "a token", std::string("'") + c + "'"});
        advance(1);
        continue;
      }
    }
    push(kind, std::string(1, c), tl, tc);
    advance(1);
  }
  tokens.push_back({TokenKind::End, "", line, column});
  return tokens;
}

const Token& TokenStream::next() {
  const Token& t = tokens_[pos_];
  if (t.kind != TokenKind::End) ++pos_;
  return t;
}

bool TokenStream::accept(TokenKind kind) {
  if (!check(kind)) return false;
  next();
  return true;
}

bool TokenStream::accept_ident(std::string_view spelling) {
  if (!check_ident(spelling)) return false;
  next();
  return true;
}

bool TokenStream::expect(TokenKind kind, std::string_view expected) {
  if (accept(kind)) return true;
  error_here(std::string(expected));
  return false;
}

bool TokenStream::expect_ident(std::string& out, std::string_view expected) {
  if (check(TokenKind::Ident)) {
    out = next().text;
    return true;
  }
  error_here(std::string(expected));
  return false;
}

void TokenStream::error_here(std::string expected) {
  const Token& t = peek();
  errors_.push_back({t.line, t.column, std::move(expected), describe(t)});
}

std::string TokenStream::describe(const Token& token) {
  switch (token.kind) {
    case TokenKind::Ident:
      return "'" + token.text + "'";
    case TokenKind::String:
      return "string literal";
    case TokenKind::End:
      return "end of input";
    default:
      return token_kind_name(token.kind);
  }
}

}  // namespace umlf::detail
