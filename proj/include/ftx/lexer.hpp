#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "ftx/dialect.hpp"
#include "ftx/diagnostics.hpp"

namespace ftx {

enum class TokenCategory { name, number, op, punct };

constexpr std::string_view to_string(TokenCategory c) noexcept {
  switch (c) {
    case TokenCategory::name: return "NAME";
    case TokenCategory::number: return "NUMBER";
    case TokenCategory::op: return "OPERATOR";
    case TokenCategory::punct: return "PUNCT";
  }
  return "?";
}

struct Token {
  std::string lexeme;
  TokenCategory category;
  SourcePosition position;

  friend bool operator==(const Token&, const Token&) = default;
};

// Separator of the root dialect's multiple-output construct, `a : b`.
inline constexpr std::string_view multi_output_token = ":";

namespace detail {

// Longest match first.
inline constexpr std::array<std::string_view, 28> operator_lexemes = {
    "**", "::", "||", "&&", "==", "!=", "<=", ">=", "<<", ">>",  //
    "+",  "-",  "*",  "/",  "%",  "<",  ">",  "&",  "|",  "^",   //
    "~",  "!",  multi_output_token, "(",  ")",  "[",  "]",  ","};

constexpr bool is_punct(std::string_view s) {
  return s == "(" || s == ")" || s == "[" || s == "]" || s == ",";
}

constexpr bool is_digit(char c) { return c >= '0' && c <= '9'; }
constexpr bool is_name_start(char c) {
  return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || c == '_';
}
constexpr bool is_name_char(char c) { return is_name_start(c) || is_digit(c); }
constexpr bool is_space(char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r'; }

// Length of the NUMBER lexeme starting at `i`, or 0.
inline std::size_t scan_number(std::string_view text, std::size_t i) {
  std::size_t j = i;
  while (j < text.size() && is_digit(text[j])) ++j;
  bool int_digits = j > i;
  bool frac_digits = false;
  if (j < text.size() && text[j] == '.') {
    std::size_t k = j + 1;
    while (k < text.size() && is_digit(text[k])) ++k;
    frac_digits = k > j + 1;
    if (int_digits || frac_digits) j = k;
  }
  if (!int_digits && !frac_digits) return 0;
  if (j < text.size() && (text[j] == 'e' || text[j] == 'E')) {
    std::size_t k = j + 1;
    if (k < text.size() && (text[k] == '+' || text[k] == '-')) ++k;
    std::size_t digits = k;
    while (k < text.size() && is_digit(text[k])) ++k;
    if (k > digits) j = k;
  }
  return j - i;
}

inline std::size_t utf8_length(unsigned char lead) {
  if (lead >= 0xF0) return 4;
  if (lead >= 0xE0) return 3;
  if (lead >= 0xC0) return 2;
  return 1;
}

}  // namespace detail

// Splits `text` into tokens. The same lexeme set is used for both parse
// dialects; dialect restrictions are enforced by the grammar.
inline std::vector<Token> tokenize(std::string_view text, Dialect source) {
  require_parse_dialect(source);
  std::vector<Token> tokens;
  SourcePosition pos;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k) {
      if (text[pos.offset] == '\n') {
        ++pos.line;
        pos.column = 1;
      } else if ((static_cast<unsigned char>(text[pos.offset]) & 0xC0) != 0x80) {
        ++pos.column;
      }
      ++pos.offset;
    }
  };

  while (pos.offset < text.size()) {
    const std::size_t i = pos.offset;
    const char c = text[i];
    if (detail::is_space(c)) {
      advance(1);
      continue;
    }
    if (detail::is_name_start(c)) {
      std::size_t j = i + 1;
      while (j < text.size() && detail::is_name_char(text[j])) ++j;
      tokens.push_back({std::string(text.substr(i, j - i)), TokenCategory::name, pos});
      advance(j - i);
      continue;
    }
    if (std::size_t n = detail::scan_number(text, i)) {
      tokens.push_back({std::string(text.substr(i, n)), TokenCategory::number, pos});
      advance(n);
      continue;
    }
    bool matched = false;
    for (std::string_view op : detail::operator_lexemes) {
      if (text.substr(i, op.size()) == op) {
        tokens.push_back({std::string(op),
                          detail::is_punct(op) ? TokenCategory::punct : TokenCategory::op, pos});
        advance(op.size());
        matched = true;
        break;
      }
    }
    if (matched) continue;

    std::size_t len = detail::utf8_length(static_cast<unsigned char>(c));
    if (i + len > text.size()) len = text.size() - i;
    throw ParseError(pos, std::string(text.substr(i, len)),
                     {"NAME", "NUMBER", "OPERATOR", "PUNCT"}, "not a valid token");
  }
  return tokens;
}

}  // namespace ftx
