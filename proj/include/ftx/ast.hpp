#pragma once

#include <charconv>
#include <cstddef>
#include <cstdlib>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <type_traits>
#include <utility>
#include <variant>
#include <vector>

namespace ftx {

enum class UnaryOperator { plus, minus, logical_not, bit_not };

enum class BinaryOperator {
  logical_or,
  logical_and,
  bit_or,
  bit_xor,
  bit_and,
  equal,
  not_equal,
  less,
  less_equal,
  greater,
  greater_equal,
  shift_left,
  shift_right,
  add,
  subtract,
  multiply,
  divide,
  modulo,
  power,
};

constexpr std::string_view spelling(UnaryOperator op) noexcept {
  switch (op) {
    case UnaryOperator::plus: return "+";
    case UnaryOperator::minus: return "-";
    case UnaryOperator::logical_not: return "!";
    case UnaryOperator::bit_not: return "~";
  }
  return "?";
}

constexpr std::string_view spelling(BinaryOperator op) noexcept {
  switch (op) {
    case BinaryOperator::logical_or: return "||";
    case BinaryOperator::logical_and: return "&&";
    case BinaryOperator::bit_or: return "|";
    case BinaryOperator::bit_xor: return "^";
    case BinaryOperator::bit_and: return "&";
    case BinaryOperator::equal: return "==";
    case BinaryOperator::not_equal: return "!=";
    case BinaryOperator::less: return "<";
    case BinaryOperator::less_equal: return "<=";
    case BinaryOperator::greater: return ">";
    case BinaryOperator::greater_equal: return ">=";
    case BinaryOperator::shift_left: return "<<";
    case BinaryOperator::shift_right: return ">>";
    case BinaryOperator::add: return "+";
    case BinaryOperator::subtract: return "-";
    case BinaryOperator::multiply: return "*";
    case BinaryOperator::divide: return "/";
    case BinaryOperator::modulo: return "%";
    case BinaryOperator::power: return "**";
  }
  return "?";
}

inline constexpr BinaryOperator all_binary_operators[] = {
    BinaryOperator::logical_or, BinaryOperator::logical_and, BinaryOperator::bit_or,
    BinaryOperator::bit_xor,    BinaryOperator::bit_and,     BinaryOperator::equal,
    BinaryOperator::not_equal,  BinaryOperator::less,        BinaryOperator::less_equal,
    BinaryOperator::greater,    BinaryOperator::greater_equal, BinaryOperator::shift_left,
    BinaryOperator::shift_right, BinaryOperator::add,        BinaryOperator::subtract,
    BinaryOperator::multiply,   BinaryOperator::divide,      BinaryOperator::modulo,
    BinaryOperator::power,
};

inline constexpr UnaryOperator all_unary_operators[] = {
    UnaryOperator::plus, UnaryOperator::minus, UnaryOperator::logical_not, UnaryOperator::bit_not};

class Node;
using NodePtr = std::shared_ptr<const Node>;

// The eight node kinds.

struct Literal {
  std::string lexeme;  // verbatim source spelling
  double value = 0.0;
};

struct Symbol {
  std::string name;
};

struct UnaryOp {
  UnaryOperator op;
  NodePtr operand;
};

struct BinaryOp {
  BinaryOperator op;
  NodePtr left;
  NodePtr right;
};

// A function call, optionally scope-qualified (`TMath::Sqrt`). The
// multiple-output construct `a : b` is also a Call, named `multi_output_name`.
struct Call {
  std::optional<std::string> ns;
  std::string name;
  std::vector<NodePtr> args;
};

struct Matrix {
  NodePtr base;
  std::vector<NodePtr> slices;  // each a Slice node
};

struct Slice {
  NodePtr index;  // an expression or an Empty node
};

struct Empty {};

inline constexpr std::string_view multi_output_name = "$multi_out";

enum class NodeKind { literal, symbol, unary_op, binary_op, call, matrix, slice, empty };

class Node {
 public:
  using Variant = std::variant<Literal, Symbol, UnaryOp, BinaryOp, Call, Matrix, Slice, Empty>;

  explicit Node(Variant v) : v_(std::move(v)) {}

  NodeKind kind() const noexcept { return static_cast<NodeKind>(v_.index()); }
  const Variant& variant() const noexcept { return v_; }

  template <typename T>
  bool is() const noexcept {
    return std::holds_alternative<T>(v_);
  }
  template <typename T>
  const T& as() const {
    return std::get<T>(v_);
  }
  template <typename T>
  const T* get_if() const noexcept {
    return std::get_if<T>(&v_);
  }

  bool is_multi_output() const noexcept {
    const auto* c = get_if<Call>();
    return c && !c->ns && c->name == multi_output_name;
  }

 private:
  Variant v_;
};

static_assert(std::variant_size_v<Node::Variant> == 8);

inline bool is_name_lexeme(std::string_view s) noexcept {
  if (s.empty()) return false;
  auto alpha = [](char c) { return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || c == '_'; };
  if (!alpha(s[0])) return false;
  for (char c : s.substr(1)) {
    if (!alpha(c) && !(c >= '0' && c <= '9')) return false;
  }
  return true;
}

// Parses a NUMBER lexeme; nullopt unless the whole string is a valid decimal number.
inline std::optional<double> number_value(std::string_view lexeme) noexcept {
  if (lexeme.empty() || lexeme[0] == '+' || lexeme[0] == '-') return std::nullopt;
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(lexeme.data(), lexeme.data() + lexeme.size(), v,
                                   std::chars_format::general);
  if (ptr != lexeme.data() + lexeme.size()) return std::nullopt;
  if (ec == std::errc::result_out_of_range) {
    // Overflow or underflow; strtod yields the conventional HUGE_VAL or 0.
    std::string copy(lexeme);
    return std::strtod(copy.c_str(), nullptr);
  }
  if (ec != std::errc{}) return std::nullopt;
  return v;
}

// Factories. They enforce the structural invariants of each kind.

inline NodePtr make_literal(std::string lexeme) {
  auto v = number_value(lexeme);
  if (!v) throw std::invalid_argument("not a numeric literal: '" + lexeme + "'");
  return std::make_shared<const Node>(Literal{std::move(lexeme), *v});
}

inline NodePtr make_symbol(std::string name) {
  if (!is_name_lexeme(name)) throw std::invalid_argument("not a valid name: '" + name + "'");
  return std::make_shared<const Node>(Symbol{std::move(name)});
}

namespace detail {
inline void require_expression(const NodePtr& n, const char* what) {
  if (!n) throw std::invalid_argument(std::string(what) + " is null");
  if (n->is<Slice>() || n->is<Empty>())
    throw std::invalid_argument(std::string(what) + " must be an expression node");
}
}  // namespace detail

inline NodePtr make_unary(UnaryOperator op, NodePtr operand) {
  detail::require_expression(operand, "unary operand");
  return std::make_shared<const Node>(UnaryOp{op, std::move(operand)});
}

inline NodePtr make_binary(BinaryOperator op, NodePtr left, NodePtr right) {
  detail::require_expression(left, "left operand");
  detail::require_expression(right, "right operand");
  return std::make_shared<const Node>(BinaryOp{op, std::move(left), std::move(right)});
}

inline NodePtr make_call(std::optional<std::string> ns, std::string name, std::vector<NodePtr> args) {
  if (ns && !is_name_lexeme(*ns)) throw std::invalid_argument("not a valid namespace: '" + *ns + "'");
  if (!is_name_lexeme(name) && !(name == multi_output_name && !ns))
    throw std::invalid_argument("not a valid function name: '" + name + "'");
  for (const auto& a : args) detail::require_expression(a, "call argument");
  return std::make_shared<const Node>(Call{std::move(ns), std::move(name), std::move(args)});
}

inline NodePtr make_call(std::string name, std::vector<NodePtr> args) {
  return make_call(std::nullopt, std::move(name), std::move(args));
}

inline NodePtr make_multi_output(std::vector<NodePtr> parts) {
  if (parts.size() < 2) throw std::invalid_argument("multiple output needs at least two parts");
  return make_call(std::nullopt, std::string(multi_output_name), std::move(parts));
}

inline NodePtr make_empty() { return std::make_shared<const Node>(Empty{}); }

inline NodePtr make_slice(NodePtr index) {
  if (!index) throw std::invalid_argument("slice index is null");
  if (index->is<Slice>()) throw std::invalid_argument("slice index cannot be a slice");
  return std::make_shared<const Node>(Slice{std::move(index)});
}

inline NodePtr make_matrix(NodePtr base, std::vector<NodePtr> slices) {
  detail::require_expression(base, "subscript base");
  if (slices.empty()) throw std::invalid_argument("subscript needs at least one slice");
  for (const auto& s : slices) {
    if (!s || !s->is<Slice>()) throw std::invalid_argument("subscript entries must be Slice nodes");
  }
  return std::make_shared<const Node>(Matrix{std::move(base), std::move(slices)});
}

// Structural equality: same kinds, same operator/name/namespace/lexeme
// fields, pairwise-equal children in order. Literal values are not compared,
// so `1e3` and `1000.0` differ.
inline bool ast_equal(const Node& a, const Node& b);

inline bool ast_equal(const NodePtr& a, const NodePtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return ast_equal(*a, *b);
}

namespace detail {
inline bool all_equal(const std::vector<NodePtr>& a, const std::vector<NodePtr>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!ast_equal(a[i], b[i])) return false;
  }
  return true;
}
}  // namespace detail

inline bool ast_equal(const Node& a, const Node& b) {
  if (a.kind() != b.kind()) return false;
  return std::visit(
      [&b](const auto& x) -> bool {
        using T = std::decay_t<decltype(x)>;
        const T& y = b.as<T>();
        if constexpr (std::is_same_v<T, Literal>) {
          return x.lexeme == y.lexeme;
        } else if constexpr (std::is_same_v<T, Symbol>) {
          return x.name == y.name;
        } else if constexpr (std::is_same_v<T, UnaryOp>) {
          return x.op == y.op && ast_equal(x.operand, y.operand);
        } else if constexpr (std::is_same_v<T, BinaryOp>) {
          return x.op == y.op && ast_equal(x.left, y.left) && ast_equal(x.right, y.right);
        } else if constexpr (std::is_same_v<T, Call>) {
          return x.ns == y.ns && x.name == y.name && detail::all_equal(x.args, y.args);
        } else if constexpr (std::is_same_v<T, Matrix>) {
          return ast_equal(x.base, y.base) && detail::all_equal(x.slices, y.slices);
        } else if constexpr (std::is_same_v<T, Slice>) {
          return ast_equal(x.index, y.index);
        } else {
          return true;
        }
      },
      a.variant());
}

inline std::size_t node_count(const Node& n) {
  return std::visit(
      [](const auto& x) -> std::size_t {
        using T = std::decay_t<decltype(x)>;
        std::size_t total = 1;
        if constexpr (std::is_same_v<T, UnaryOp>) {
          total += node_count(*x.operand);
        } else if constexpr (std::is_same_v<T, BinaryOp>) {
          total += node_count(*x.left) + node_count(*x.right);
        } else if constexpr (std::is_same_v<T, Call>) {
          for (const auto& a : x.args) total += node_count(*a);
        } else if constexpr (std::is_same_v<T, Matrix>) {
          total += node_count(*x.base);
          for (const auto& s : x.slices) total += node_count(*s);
        } else if constexpr (std::is_same_v<T, Slice>) {
          total += node_count(*x.index);
        }
        return total;
      },
      n.variant());
}

}  // namespace ftx
