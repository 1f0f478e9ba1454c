#pragma once

// Umbrella header: parse root/numexpr expressions, emit root/numexpr/python.
//
//   auto tree = ftx::parse("TMath::Sqrt(px*px + py*py)", ftx::Dialect::root);
//   std::string s = ftx::emit(tree, ftx::Dialect::numexpr);
//   // s == "sqrt(((px)*(px))+((py)*(py)))"

#include "ftx/ast.hpp"
#include "ftx/bench.hpp"
#include "ftx/dialect.hpp"
#include "ftx/diagnostics.hpp"
#include "ftx/emitter.hpp"
#include "ftx/evaluator.hpp"
#include "ftx/functions.hpp"
#include "ftx/lexer.hpp"
#include "ftx/parser.hpp"
#include "ftx/sexpr.hpp"

namespace ftx {

inline constexpr std::string_view version = "0.1.0";

// parse followed by emit.
inline std::string convert(std::string_view text, Dialect from, Dialect to,
                           const FunctionRegistry& registry = FunctionRegistry::builtin()) {
  return emit(parse(text, from), to, registry);
}

}  // namespace ftx
