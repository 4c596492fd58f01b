#pragma once

#include <cctype>
#include <string>
#include <string_view>
#include <vector>

#include "picgram/error.hpp"

namespace picgram {

struct Token {
  enum class Kind { name, terminal, boundary, arrow, row_concat, col_concat, bar, plus, lbrace, rbrace,
                    lbracket, rbracket, lparen, rparen, comma, slash, equals, directive, newline, end };
  Kind kind = Kind::end;
  std::string text;
  std::size_t line = 1;
  std::size_t column = 1;
};

inline const char* describe(Token::Kind k) {
  switch (k) {
    case Token::Kind::name: return "name";
    case Token::Kind::terminal: return "terminal";
    case Token::Kind::boundary: return "'#'";
    case Token::Kind::arrow: return "'->'";
    case Token::Kind::row_concat: return "'--'";
    case Token::Kind::col_concat: return "'||'";
    case Token::Kind::bar: return "'|'";
    case Token::Kind::plus: return "'+'";
    case Token::Kind::lbrace: return "'{'";
    case Token::Kind::rbrace: return "'}'";
    case Token::Kind::lbracket: return "'['";
    case Token::Kind::rbracket: return "']'";
    case Token::Kind::lparen: return "'('";
    case Token::Kind::rparen: return "')'";
    case Token::Kind::comma: return "','";
    case Token::Kind::slash: return "'/'";
    case Token::Kind::equals: return "'='";
    case Token::Kind::directive: return "directive";
    case Token::Kind::newline: return "end of line";
    case Token::Kind::end: return "end of input";
  }
  return "token";
}

inline Error syntax_error(std::size_t line, std::size_t column, const std::string& what) {
  return Error(errc::syntax, "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what);
}

inline Error syntax_error(const Token& t, const std::string& what) { return syntax_error(t.line, t.column, what); }

/// Splits grammar text into tokens. Inside braces a line break is a row
/// separator (reported as `slash`); inside brackets and parentheses it is
/// ignored; elsewhere it ends a statement unless the next line starts with
/// `|` or `+`.
inline std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> out;
  std::size_t line = 1, col = 1, i = 0;
  std::vector<char> nesting;
  auto push = [&](Token::Kind k, std::string s, std::size_t l, std::size_t c) { out.push_back({k, std::move(s), l, c}); };
  auto is_reserved = [](char c) {
    return std::string_view("{}[](),;|+#%/=").find(c) != std::string_view::npos || std::isspace(static_cast<unsigned char>(c));
  };
  while (i < text.size()) {
    const char c = text[i];
    const std::size_t l0 = line, c0 = col;
    auto advance = [&](std::size_t n) { i += n; col += n; };
    if (c == '\n') {
      if (!nesting.empty() && nesting.back() == '{') push(Token::Kind::slash, "\n", l0, c0);
      else if (nesting.empty()) push(Token::Kind::newline, "\n", l0, c0);
      ++i;
      ++line;
      col = 1;
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    if (text.substr(i, 2) == "//") {
      while (i < text.size() && text[i] != '\n') advance(1);
      continue;
    }
    if (text.substr(i, 2) == "->") { push(Token::Kind::arrow, "->", l0, c0); advance(2); continue; }
    if (text.substr(i, 2) == "--") { push(Token::Kind::row_concat, "--", l0, c0); advance(2); continue; }
    if (text.substr(i, 2) == "||") { push(Token::Kind::col_concat, "||", l0, c0); advance(2); continue; }
    switch (c) {
      case '{': case '[': case '(':
        nesting.push_back(c);
        push(c == '{' ? Token::Kind::lbrace : c == '[' ? Token::Kind::lbracket : Token::Kind::lparen, std::string(1, c), l0, c0);
        advance(1);
        continue;
      case '}': case ']': case ')': {
        const char open = c == '}' ? '{' : c == ']' ? '[' : '(';
        if (nesting.empty() || nesting.back() != open) throw syntax_error(l0, c0, std::string("unbalanced '") + c + "'");
        nesting.pop_back();
        push(c == '}' ? Token::Kind::rbrace : c == ']' ? Token::Kind::rbracket : Token::Kind::rparen, std::string(1, c), l0, c0);
        advance(1);
        continue;
      }
      case '|': push(Token::Kind::bar, "|", l0, c0); advance(1); continue;
      case '+': push(Token::Kind::plus, "+", l0, c0); advance(1); continue;
      case ',': push(Token::Kind::comma, ",", l0, c0); advance(1); continue;
      case ';': push(Token::Kind::newline, ";", l0, c0); advance(1); continue;
      case '/': push(Token::Kind::slash, "/", l0, c0); advance(1); continue;
      case '=': push(Token::Kind::equals, "=", l0, c0); advance(1); continue;
      case '#': push(Token::Kind::boundary, "#", l0, c0); advance(1); continue;
      case '%': {
        std::size_t j = i + 1;
        while (j < text.size() && std::isalpha(static_cast<unsigned char>(text[j]))) ++j;
        push(Token::Kind::directive, std::string(text.substr(i + 1, j - i - 1)), l0, c0);
        advance(j - i);
        continue;
      }
      case '\'': {
        if (i + 2 >= text.size() || text[i + 2] != '\'') throw syntax_error(l0, c0, "malformed terminal literal");
        push(Token::Kind::terminal, std::string(1, text[i + 1]), l0, c0);
        advance(3);
        continue;
      }
      default: break;
    }
    std::size_t j = i;
    while (j < text.size() && !is_reserved(text[j]) && text.substr(j, 2) != "->" && text.substr(j, 2) != "--" &&
           text.substr(j, 2) != "//")
      ++j;
    push(Token::Kind::name, std::string(text.substr(i, j - i)), l0, c0);
    advance(j - i);
  }
  if (!nesting.empty()) throw syntax_error(line, col, std::string("unclosed '") + nesting.back() + "'");
  push(Token::Kind::newline, "", line, col);
  push(Token::Kind::end, "", line, col);
  // Lines starting with '|' or '+' continue the previous statement.
  std::vector<Token> joined;
  for (std::size_t k = 0; k < out.size(); ++k) {
    if (out[k].kind == Token::Kind::newline) {
      std::size_t n = k;
      while (n < out.size() && out[n].kind == Token::Kind::newline) ++n;
      if (n < out.size() && (out[n].kind == Token::Kind::bar || out[n].kind == Token::Kind::plus) && !joined.empty()) {
        k = n - 1;
        continue;
      }
      if (!joined.empty() && joined.back().kind == Token::Kind::newline) continue;
    }
    joined.push_back(out[k]);
  }
  return joined;
}

/// Cursor over a token vector with expectation helpers.
class TokenStream {
 public:
  explicit TokenStream(std::vector<Token> tokens) : t_(std::move(tokens)) {}

  const Token& peek(std::size_t ahead = 0) const { return t_[std::min(pos_ + ahead, t_.size() - 1)]; }
  bool at(Token::Kind k) const { return peek().kind == k; }
  const Token& next() { return t_[std::min(pos_++, t_.size() - 1)]; }

  bool accept(Token::Kind k) {
    if (!at(k)) return false;
    ++pos_;
    return true;
  }

  const Token& expect(Token::Kind k, const char* context) {
    if (!at(k))
      throw syntax_error(peek(), std::string("expected ") + describe(k) + " " + context + ", found " +
                                     (peek().text.empty() || peek().kind == Token::Kind::newline ? describe(peek().kind)
                                                                                                  : "'" + peek().text + "'"));
    return next();
  }

  void skip_newlines() {
    while (at(Token::Kind::newline)) ++pos_;
  }

 private:
  std::vector<Token> t_;
  std::size_t pos_ = 0;
};

}  // namespace picgram
