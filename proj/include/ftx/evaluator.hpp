#pragma once

// Reference scalar evaluator with C-style semantics. Used as the semantics
// oracle in tests; it is not part of the transpilation path.
//
// Comparisons and logical operators yield 1.0 or 0.0, and logical operators
// treat any nonzero operand as true. Bitwise operators, shifts and `%`
// require integral-valued operands and work on 64-bit integers. Any
// non-finite intermediate result is reported as a domain error.

#include <cmath>
#include <cstdint>
#include <map>
#include <string>
#include <type_traits>
#include <variant>
#include <vector>

#include "ftx/ast.hpp"
#include "ftx/diagnostics.hpp"
#include "ftx/functions.hpp"

namespace ftx {

struct EvalEnv {
  std::map<std::string, double, std::less<>> bindings;
};

namespace detail {

class Evaluator {
 public:
  Evaluator(const EvalEnv& env, const FunctionRegistry& registry) : env_(env), registry_(registry) {}

  double operator()(const Node& n) const {
    return std::visit([this](const auto& x) { return eval(x); }, n.variant());
  }

 private:
  using Kind = EvalError::Kind;

  static double checked(double v, const std::string& what) {
    if (!std::isfinite(v)) throw EvalError(Kind::domain_error, what + " is not finite");
    return v;
  }

  static std::int64_t integral(double v, std::string_view op) {
    if (v != std::trunc(v))
      throw EvalError(Kind::non_integral_bitwise_operand,
                      "operand " + std::to_string(v) + " of '" + std::string(op) + "' is not integral");
    if (v < -9223372036854775808.0 || v >= 9223372036854775808.0)
      throw EvalError(Kind::domain_error, "operand of '" + std::string(op) + "' exceeds 64 bits");
    return static_cast<std::int64_t>(v);
  }

  static double truth(bool b) { return b ? 1.0 : 0.0; }

  double eval(const Literal& x) const { return checked(x.value, "literal " + x.lexeme); }

  double eval(const Symbol& x) const {
    auto it = env_.bindings.find(x.name);
    if (it == env_.bindings.end()) throw EvalError(Kind::unbound_symbol, "unbound symbol '" + x.name + "'");
    return it->second;
  }

  double eval(const UnaryOp& x) const {
    const double v = (*this)(*x.operand);
    switch (x.op) {
      case UnaryOperator::plus: return v;
      case UnaryOperator::minus: return -v;
      case UnaryOperator::logical_not: return truth(v == 0.0);
      case UnaryOperator::bit_not: return static_cast<double>(~integral(v, "~"));
    }
    return v;
  }

  double eval(const BinaryOp& x) const {
    using BO = BinaryOperator;
    const double a = (*this)(*x.left);
    const double b = (*this)(*x.right);
    const std::string_view op = spelling(x.op);
    switch (x.op) {
      case BO::logical_or: return truth(a != 0.0 || b != 0.0);
      case BO::logical_and: return truth(a != 0.0 && b != 0.0);
      case BO::bit_or: return static_cast<double>(integral(a, op) | integral(b, op));
      case BO::bit_xor: return static_cast<double>(integral(a, op) ^ integral(b, op));
      case BO::bit_and: return static_cast<double>(integral(a, op) & integral(b, op));
      case BO::equal: return truth(a == b);
      case BO::not_equal: return truth(a != b);
      case BO::less: return truth(a < b);
      case BO::less_equal: return truth(a <= b);
      case BO::greater: return truth(a > b);
      case BO::greater_equal: return truth(a >= b);
      case BO::shift_left:
      case BO::shift_right: {
        const std::int64_t lhs = integral(a, op);
        const std::int64_t count = integral(b, op);
        if (count < 0 || count > 63)
          throw EvalError(Kind::domain_error, "shift count " + std::to_string(count) + " out of range");
        return static_cast<double>(x.op == BO::shift_left ? lhs << count : lhs >> count);
      }
      case BO::add: return checked(a + b, "sum");
      case BO::subtract: return checked(a - b, "difference");
      case BO::multiply: return checked(a * b, "product");
      case BO::divide:
        if (b == 0.0) throw EvalError(Kind::domain_error, "division by zero");
        return checked(a / b, "quotient");
      case BO::modulo: {
        const std::int64_t lhs = integral(a, op);
        const std::int64_t rhs = integral(b, op);
        if (rhs == 0) throw EvalError(Kind::domain_error, "modulo by zero");
        return rhs == -1 ? 0.0 : static_cast<double>(lhs % rhs);
      }
      case BO::power: return checked(std::pow(a, b), "power");
    }
    return 0.0;
  }

  double eval(const Call& x) const {
    if (!x.ns && x.name == multi_output_name)
      throw EvalError(Kind::unsupported_node, "multiple-output expressions have no scalar value");
    const FunctionDescriptor* d = registry_.resolve(x);
    if (!d && !x.ns) d = registry_.find_spelling(x.name, Dialect::python);
    const std::string full = x.ns ? *x.ns + "::" + x.name : x.name;
    if (!d) throw EvalError(Kind::unknown_function, "unknown function '" + full + "'");
    if (d->arity != x.args.size())
      throw EvalError(Kind::unknown_function, "'" + full + "' takes " + std::to_string(d->arity) +
                                                  " arguments, got " + std::to_string(x.args.size()));
    std::vector<double> args;
    args.reserve(x.args.size());
    for (const auto& a : x.args) args.push_back((*this)(*a));
    return checked(d->semantics(args), full + "(...)");
  }

  double eval(const Matrix&) const {
    throw EvalError(Kind::unsupported_node, "subscripts have no scalar value");
  }
  double eval(const Slice&) const { throw EvalError(Kind::unsupported_node, "slice outside a subscript"); }
  double eval(const Empty&) const { throw EvalError(Kind::unsupported_node, "empty slice outside a subscript"); }

  const EvalEnv& env_;
  const FunctionRegistry& registry_;
};

}  // namespace detail

// Throws EvalError.
inline double evaluate(const Node& node, const EvalEnv& env,
                       const FunctionRegistry& registry = FunctionRegistry::builtin()) {
  return detail::Evaluator(env, registry)(node);
}

inline double evaluate(const NodePtr& node, const EvalEnv& env,
                       const FunctionRegistry& registry = FunctionRegistry::builtin()) {
  return evaluate(*node, env, registry);
}

}  // namespace ftx
