#pragma once

#include <string>
#include <string_view>
#include <unordered_map>
#include <variant>
#include <vector>

#include "ftx/ast.hpp"
#include "ftx/dialect.hpp"
#include "ftx/diagnostics.hpp"
#include "ftx/grammar.hpp"
#include "ftx/lalr.hpp"
#include "ftx/lexer.hpp"

namespace ftx {

namespace detail {

class DialectParser {
 public:
  explicit DialectParser(Dialect d) : dialect_(d), parser_(grammar::build(d)) {
    const auto& shape = parser_.grammar().shape();
    name_ = *shape.find("NAME");
    number_ = *shape.find("NUMBER");
    invalid_ = *shape.find("$invalid");
    for (auto lexeme : operator_lexemes) {
      if (auto id = shape.find(lexeme); id && shape[*id].terminal) ops_.emplace(std::string(lexeme), *id);
    }
  }

  NodePtr parse(std::string_view text) const {
    std::vector<Token> tokens = tokenize(text, dialect_);
    std::vector<lr::SymbolId> ids;
    ids.reserve(tokens.size());
    for (const auto& t : tokens) ids.push_back(terminal_of(t));

    auto result = parser_.parse(ids, [&tokens](std::size_t i) {
      return grammar::SemanticValue{{}, {}, tokens[i].lexeme};
    });
    if (auto* value = std::get_if<grammar::SemanticValue>(&result)) return std::move(value->node);

    const auto& rejection = std::get<lr::Rejection>(result);
    const auto& shape = parser_.grammar().shape();
    std::vector<std::string> expected;
    for (auto id : rejection.expected) expected.push_back(shape[id].display);

    if (rejection.token_index >= tokens.size()) {
      throw ParseError(position_of(text, text.size()), std::string(end_of_input), std::move(expected));
    }
    const Token& bad = tokens[rejection.token_index];
    std::string detail;
    if (dialect_ == Dialect::numexpr && grammar::is_root_only(bad.lexeme))
      detail = "not available in the numexpr dialect";
    throw ParseError(bad.position, bad.lexeme, std::move(expected), std::move(detail));
  }

  const lr::Parser<grammar::SemanticValue>& tables() const { return parser_; }

 private:
  lr::SymbolId terminal_of(const Token& t) const {
    switch (t.category) {
      case TokenCategory::name: return name_;
      case TokenCategory::number: return number_;
      default: break;
    }
    auto it = ops_.find(t.lexeme);
    return it == ops_.end() ? invalid_ : it->second;
  }

  Dialect dialect_;
  lr::Parser<grammar::SemanticValue> parser_;
  lr::SymbolId name_ = -1;
  lr::SymbolId number_ = -1;
  lr::SymbolId invalid_ = -1;
  std::unordered_map<std::string, lr::SymbolId> ops_;
};

}  // namespace detail

// Shared, immutable parser for `d`; tables are built on first use.
inline const detail::DialectParser& dialect_parser(Dialect d) {
  require_parse_dialect(d);
  if (d == Dialect::root) {
    static const detail::DialectParser root(Dialect::root);
    return root;
  }
  static const detail::DialectParser numexpr(Dialect::numexpr);
  return numexpr;
}

// Parses `text` in the `source` dialect. Throws ParseError.
inline NodePtr parse(std::string_view text, Dialect source) {
  return dialect_parser(source).parse(text);
}

}  // namespace ftx
