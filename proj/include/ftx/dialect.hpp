#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace ftx {

// Expression languages. Only root and numexpr can be parsed; all three can be emitted.
enum class Dialect { root, numexpr, python };

constexpr std::string_view to_string(Dialect d) noexcept {
  switch (d) {
    case Dialect::root: return "root";
    case Dialect::numexpr: return "numexpr";
    case Dialect::python: return "python";
  }
  return "?";
}

inline std::optional<Dialect> dialect_from_string(std::string_view name) noexcept {
  if (name == "root") return Dialect::root;
  if (name == "numexpr") return Dialect::numexpr;
  if (name == "python") return Dialect::python;
  return std::nullopt;
}

constexpr bool is_parse_dialect(Dialect d) noexcept {
  return d == Dialect::root || d == Dialect::numexpr;
}

inline void require_parse_dialect(Dialect d) {
  if (!is_parse_dialect(d)) {
    throw std::invalid_argument("dialect '" + std::string(to_string(d)) +
                                "' cannot be used as a parse source");
  }
}

}  // namespace ftx
