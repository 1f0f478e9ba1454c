#pragma once

// Debug serialization of trees as s-expressions.
//
//   Literal   (lit LEXEME)            Symbol  (sym NAME)
//   UnaryOp   (u+ X) (u- X) (u! X) (u~ X)
//   BinaryOp  (OP L R)                e.g. (+ (lit 1) (* (lit 2) (lit 3)))
//   Call      (call NAME ARG...)      (call NS::NAME ARG...)
//   Matrix    (matrix BASE SLICE...)  Slice (slice X)   Empty (empty)
//
// The multiple-output construct prints as (call $multi_out ...). In indented
// form every child goes on its own line, two spaces deeper than its parent.

#include <string>
#include <type_traits>
#include <variant>
#include <vector>

#include "ftx/ast.hpp"

namespace ftx {

enum class SexprStyle { compact, indented };

namespace detail {

inline void write_sexpr(const Node& n, SexprStyle style, int depth, std::string& out) {
  auto open = [&](std::string_view head, const std::vector<const Node*>& children) {
    out += '(';
    out += head;
    for (const Node* c : children) {
      if (style == SexprStyle::indented) {
        out += '\n';
        out.append(static_cast<std::size_t>(depth + 1) * 2, ' ');
      } else {
        out += ' ';
      }
      write_sexpr(*c, style, depth + 1, out);
    }
    out += ')';
  };

  std::visit(
      [&](const auto& x) {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, Literal>) {
          out += "(lit " + x.lexeme + ")";
        } else if constexpr (std::is_same_v<T, Symbol>) {
          out += "(sym " + x.name + ")";
        } else if constexpr (std::is_same_v<T, UnaryOp>) {
          open("u" + std::string(spelling(x.op)), {x.operand.get()});
        } else if constexpr (std::is_same_v<T, BinaryOp>) {
          open(spelling(x.op), {x.left.get(), x.right.get()});
        } else if constexpr (std::is_same_v<T, Call>) {
          std::vector<const Node*> kids;
          for (const auto& a : x.args) kids.push_back(a.get());
          open("call " + (x.ns ? *x.ns + "::" : std::string()) + x.name, kids);
        } else if constexpr (std::is_same_v<T, Matrix>) {
          std::vector<const Node*> kids{x.base.get()};
          for (const auto& s : x.slices) kids.push_back(s.get());
          open("matrix", kids);
        } else if constexpr (std::is_same_v<T, Slice>) {
          open("slice", {x.index.get()});
        } else {
          out += "(empty)";
        }
      },
      n.variant());
}

}  // namespace detail

inline std::string to_sexpr(const Node& n, SexprStyle style = SexprStyle::compact) {
  std::string out;
  detail::write_sexpr(n, style, 0, out);
  return out;
}

inline std::string to_sexpr(const NodePtr& n, SexprStyle style = SexprStyle::compact) {
  return n ? to_sexpr(*n, style) : std::string("<null>");
}

}  // namespace ftx
