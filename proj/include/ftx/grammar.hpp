#pragma once

// Grammars of the two parse dialects, loosest-binding level first:
//
//   top         := parts                               (root)   | expr  (numexpr)
//   parts       := parts ":" expr | expr               (root only, multiple output)
//   expr        := lor                                 (root)   | bor   (numexpr)
//   lor         := lor "||" land | land                (root only)
//   land        := land "&&" bor | bor                 (root only)
//   bor         := bor "|" bxor | bxor
//   bxor        := bxor "^" band | band
//   band        := band "&" eq | eq
//   eq          := eq ("==" | "!=") rel | rel
//   rel         := rel ("<" | "<=" | ">" | ">=") shift | shift
//   shift       := shift ("<<" | ">>") add | add
//   add         := add ("+" | "-") mul | mul
//   mul         := mul ("*" | "/" | "%") unary | unary      ("%" root only)
//   unary       := ("+" | "-" | "~" | "!") unary | power     ("!" root only)
//   power       := postfix "**" unary | postfix              (right-associative)
//   postfix     := primary | subscripted                     (numexpr: primary)
//   subscripted := primary slice | subscripted slice         (root only)
//   slice       := "[" expr "]" | "[" "]"                    (root only)
//   primary     := NUMBER | NAME | "(" expr ")" | call
//   call        := NAME "(" args ")" | NAME "(" ")"
//                | NAME "::" NAME "(" args ")" | NAME "::" NAME "(" ")"   ("::" root only)
//   args        := args "," expr | expr
//
// Comparisons do not chain: `a < b < c` is `(a < b) < c`.

#include <array>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "ftx/ast.hpp"
#include "ftx/dialect.hpp"
#include "ftx/lalr.hpp"
#include "ftx/lexer.hpp"

namespace ftx::grammar {

struct SemanticValue {
  NodePtr node;
  std::vector<NodePtr> list;
  std::string text;  // token lexeme
};

using Values = std::span<SemanticValue>;

// Lexemes that only the root dialect accepts.
inline constexpr std::array<std::string_view, 7> root_only_lexemes = {
    "||", "&&", "!", "%", "::", "[", multi_output_token};

inline bool is_root_only(std::string_view lexeme) {
  for (auto l : root_only_lexemes) {
    if (l == lexeme) return true;
  }
  return lexeme == "]";
}

namespace detail {

inline auto pass() {
  return [](Values v) { return std::move(v[0]); };
}

inline auto binary(BinaryOperator op) {
  return [op](Values v) { return SemanticValue{make_binary(op, v[0].node, v[2].node), {}, {}}; };
}

inline auto unary(UnaryOperator op) {
  return [op](Values v) { return SemanticValue{make_unary(op, v[1].node), {}, {}}; };
}

struct Level {
  std::string_view name;
  std::string_view next;
  std::vector<std::pair<std::string_view, BinaryOperator>> ops;
};

}  // namespace detail

inline lr::Grammar<SemanticValue> build(Dialect dialect) {
  require_parse_dialect(dialect);
  const bool root = dialect == Dialect::root;
  using BO = BinaryOperator;
  using UO = UnaryOperator;

  lr::Grammar<SemanticValue> g;
  g.terminal("NAME", "NAME");
  g.terminal("NUMBER", "NUMBER");
  for (auto lexeme : ftx::detail::operator_lexemes) {
    if (root || !is_root_only(lexeme)) g.terminal(std::string(lexeme));
  }

  if (root) {
    g.rule("top", {"parts"}, [](Values v) {
      if (v[0].list.size() == 1) return SemanticValue{v[0].list.front(), {}, {}};
      return SemanticValue{make_multi_output(std::move(v[0].list)), {}, {}};
    });
    g.rule("parts", {"parts", multi_output_token, "expr"}, [](Values v) {
      v[0].list.push_back(v[2].node);
      return std::move(v[0]);
    });
    g.rule("parts", {"expr"}, [](Values v) { return SemanticValue{{}, {v[0].node}, {}}; });
    g.rule("expr", {"lor"}, detail::pass());
  } else {
    g.rule("top", {"expr"}, detail::pass());
    g.rule("expr", {"bor"}, detail::pass());
  }

  std::vector<detail::Level> ladder;
  if (root) {
    ladder.push_back({"lor", "land", {{"||", BO::logical_or}}});
    ladder.push_back({"land", "bor", {{"&&", BO::logical_and}}});
  }
  ladder.push_back({"bor", "bxor", {{"|", BO::bit_or}}});
  ladder.push_back({"bxor", "band", {{"^", BO::bit_xor}}});
  ladder.push_back({"band", "eq", {{"&", BO::bit_and}}});
  ladder.push_back({"eq", "rel", {{"==", BO::equal}, {"!=", BO::not_equal}}});
  ladder.push_back({"rel", "shift", {{"<", BO::less}, {"<=", BO::less_equal}, {">", BO::greater},
                                     {">=", BO::greater_equal}}});
  ladder.push_back({"shift", "add", {{"<<", BO::shift_left}, {">>", BO::shift_right}}});
  ladder.push_back({"add", "mul", {{"+", BO::add}, {"-", BO::subtract}}});
  if (root) {
    ladder.push_back({"mul", "unary", {{"*", BO::multiply}, {"/", BO::divide}, {"%", BO::modulo}}});
  } else {
    ladder.push_back({"mul", "unary", {{"*", BO::multiply}, {"/", BO::divide}}});
  }
  for (const auto& level : ladder) {
    for (const auto& [lexeme, op] : level.ops) {
      g.rule(level.name, {level.name, lexeme, level.next}, detail::binary(op));
    }
    g.rule(level.name, {level.next}, detail::pass());
  }

  g.rule("unary", {"+", "unary"}, detail::unary(UO::plus));
  g.rule("unary", {"-", "unary"}, detail::unary(UO::minus));
  g.rule("unary", {"~", "unary"}, detail::unary(UO::bit_not));
  if (root) g.rule("unary", {"!", "unary"}, detail::unary(UO::logical_not));
  g.rule("unary", {"power"}, detail::pass());

  g.rule("power", {"postfix", "**", "unary"}, detail::binary(BO::power));
  g.rule("power", {"postfix"}, detail::pass());

  if (root) {
    g.rule("postfix", {"primary"}, detail::pass());
    g.rule("postfix", {"subscripted"}, [](Values v) {
      return SemanticValue{make_matrix(v[0].node, std::move(v[0].list)), {}, {}};
    });
    g.rule("subscripted", {"primary", "slice"}, [](Values v) {
      return SemanticValue{v[0].node, {v[1].node}, {}};
    });
    g.rule("subscripted", {"subscripted", "slice"}, [](Values v) {
      v[0].list.push_back(v[1].node);
      return std::move(v[0]);
    });
    g.rule("slice", {"[", "expr", "]"}, [](Values v) {
      return SemanticValue{make_slice(v[1].node), {}, {}};
    });
    g.rule("slice", {"[", "]"}, [](Values) { return SemanticValue{make_slice(make_empty()), {}, {}}; });
  } else {
    g.rule("postfix", {"primary"}, detail::pass());
  }

  g.rule("primary", {"NUMBER"}, [](Values v) { return SemanticValue{make_literal(std::move(v[0].text)), {}, {}}; });
  g.rule("primary", {"NAME"}, [](Values v) { return SemanticValue{make_symbol(std::move(v[0].text)), {}, {}}; });
  g.rule("primary", {"(", "expr", ")"}, [](Values v) { return std::move(v[1]); });
  g.rule("primary", {"call"}, detail::pass());

  g.rule("call", {"NAME", "(", "args", ")"}, [](Values v) {
    return SemanticValue{make_call(std::move(v[0].text), std::move(v[2].list)), {}, {}};
  });
  g.rule("call", {"NAME", "(", ")"}, [](Values v) {
    return SemanticValue{make_call(std::move(v[0].text), {}), {}, {}};
  });
  if (root) {
    g.rule("call", {"NAME", "::", "NAME", "(", "args", ")"}, [](Values v) {
      return SemanticValue{make_call(std::move(v[0].text), std::move(v[2].text), std::move(v[4].list)), {}, {}};
    });
    g.rule("call", {"NAME", "::", "NAME", "(", ")"}, [](Values v) {
      return SemanticValue{make_call(std::move(v[0].text), std::move(v[2].text), {}), {}, {}};
    });
  }
  g.rule("args", {"args", ",", "expr"}, [](Values v) {
    v[0].list.push_back(v[2].node);
    return std::move(v[0]);
  });
  g.rule("args", {"expr"}, [](Values v) { return SemanticValue{{}, {v[0].node}, {}}; });

  g.set_start("top");
  // Stands in for lexemes the dialect has no use for; it has no actions.
  g.terminal("$invalid", "invalid token");
  return g;
}

}  // namespace ftx::grammar
