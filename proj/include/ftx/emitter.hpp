#pragma once

// Emits a tree as an expression string in a target dialect.
//
// Output is fully parenthesized: each operand of a unary or binary operator
// is wrapped in parentheses, whatever its kind, so `1e3+px` becomes
// `(1e3)+(px)`. Call arguments, subscript indices and the parts of a
// multiple-output expression are not wrapped. Literals keep their source
// spelling.
//
// numexpr and python have no logical operators; `&&`, `||` and `!` become
// `&`, `|` and `~`, which agree with the originals on 0/1 operands only.

#include <string>
#include <type_traits>
#include <variant>

#include "ftx/ast.hpp"
#include "ftx/dialect.hpp"
#include "ftx/diagnostics.hpp"
#include "ftx/functions.hpp"
#include "ftx/lexer.hpp"

namespace ftx {

namespace detail {

class Emitter {
 public:
  Emitter(Dialect target, const FunctionRegistry& registry) : target_(target), registry_(registry) {}

  std::string operator()(const Node& n) const {
    return std::visit([this](const auto& x) { return emit(x); }, n.variant());
  }

 private:
  using Kind = EmitError::Kind;

  std::string wrap(const Node& n) const { return "(" + (*this)(n) + ")"; }

  [[noreturn]] void unsupported(const std::string& construct, const std::string& why) const {
    throw EmitError(Kind::unsupported_construct, construct,
                    "cannot emit " + construct + " as " + std::string(to_string(target_)) + ": " + why);
  }

  bool logical_forms() const { return target_ == Dialect::root; }

  std::string emit(const Literal& x) const { return x.lexeme; }
  std::string emit(const Symbol& x) const { return x.name; }

  std::string emit(const UnaryOp& x) const {
    std::string_view op = spelling(x.op);
    if (x.op == UnaryOperator::logical_not && !logical_forms()) op = "~";
    return std::string(op) + wrap(*x.operand);
  }

  std::string emit(const BinaryOp& x) const {
    std::string_view op = spelling(x.op);
    if (!logical_forms()) {
      if (x.op == BinaryOperator::logical_and) op = "&";
      if (x.op == BinaryOperator::logical_or) op = "|";
    }
    if (x.op == BinaryOperator::modulo && target_ == Dialect::numexpr)
      unsupported("operator '%'", "numexpr has no modulo operator");
    return wrap(*x.left) + std::string(op) + wrap(*x.right);
  }

  std::string emit(const Call& x) const {
    if (!x.ns && x.name == multi_output_name) {
      if (target_ != Dialect::root)
        unsupported("multiple-output expression", "only the root dialect has multiple outputs");
      std::string out;
      const std::string sep = " " + std::string(multi_output_token) + " ";
      for (std::size_t i = 0; i < x.args.size(); ++i) {
        if (i) out += sep;
        out += (*this)(*x.args[i]);
      }
      return out;
    }
    return callee(x) + "(" + arguments(x) + ")";
  }

  std::string callee(const Call& x) const {
    const std::string verbatim = x.ns ? *x.ns + "::" + x.name : x.name;
    // Plain names are valid root syntax as they stand.
    if (!x.ns && target_ == Dialect::root) return verbatim;
    const FunctionDescriptor* d = registry_.resolve(x);
    if (!d) {
      if (!x.ns || target_ == Dialect::root) return verbatim;
      throw EmitError(Kind::unknown_function, verbatim,
                      "cannot emit " + verbatim + " as " + std::string(to_string(target_)) +
                          ": unknown scope-qualified function");
    }
    auto spelled = render(*d, target_);
    if (!spelled)
      unsupported("function '" + verbatim + "'", "no " + std::string(to_string(target_)) + " counterpart for '" +
                                                      d->canonical + "'");
    return *spelled;
  }

  std::string arguments(const Call& x) const {
    std::string out;
    for (std::size_t i = 0; i < x.args.size(); ++i) {
      if (i) out += ", ";
      out += (*this)(*x.args[i]);
    }
    return out;
  }

  std::string emit(const Matrix& x) const {
    if (target_ == Dialect::numexpr) unsupported("subscript", "numexpr has no subscripts");
    const Node& base = *x.base;
    const bool bare = base.is<Symbol>() || base.is<Literal>() || (base.is<Call>() && !base.is_multi_output());
    std::string out = bare ? (*this)(base) : wrap(base);
    for (const auto& s : x.slices) {
      const Node& index = *s->as<Slice>().index;
      if (index.is<Empty>()) {
        out += target_ == Dialect::python ? "[:]" : "[]";
      } else {
        out += "[" + (*this)(index) + "]";
      }
    }
    return out;
  }

  std::string emit(const Slice&) const { unsupported("slice", "a slice can only appear inside a subscript"); }
  std::string emit(const Empty&) const { unsupported("empty slice", "it can only appear inside a subscript"); }

  Dialect target_;
  const FunctionRegistry& registry_;
};

}  // namespace detail

// Throws EmitError.
inline std::string emit(const Node& node, Dialect target,
                        const FunctionRegistry& registry = FunctionRegistry::builtin()) {
  return detail::Emitter(target, registry)(node);
}

inline std::string emit(const NodePtr& node, Dialect target,
                        const FunctionRegistry& registry = FunctionRegistry::builtin()) {
  return emit(*node, target, registry);
}

}  // namespace ftx
