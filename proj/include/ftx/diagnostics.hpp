#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace ftx {

struct SourcePosition {
  std::size_t offset = 0;  // 0-based
  std::size_t line = 1;    // 1-based
  std::size_t column = 1;  // 1-based

  friend bool operator==(const SourcePosition&, const SourcePosition&) = default;

  std::string str() const { return std::to_string(line) + ":" + std::to_string(column); }
};

// Position of `offset` within `text`. Offsets past the end map to one column
// after the last character.
inline SourcePosition position_of(std::string_view text, std::size_t offset) {
  SourcePosition pos;
  pos.offset = offset;
  for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++pos.line;
      pos.column = 1;
    } else if ((static_cast<unsigned char>(text[i]) & 0xC0) != 0x80) {
      ++pos.column;
    }
  }
  return pos;
}

inline constexpr std::string_view end_of_input = "end of input";

class ParseError : public std::runtime_error {
 public:
  ParseError(SourcePosition position, std::string found, std::vector<std::string> expected,
             std::string detail = {})
      : std::runtime_error(format(position, found, expected, detail)),
        position_(position),
        found_(std::move(found)),
        expected_(std::move(expected)),
        detail_(std::move(detail)) {}

  const SourcePosition& position() const noexcept { return position_; }
  // The offending lexeme, or `end_of_input`.
  const std::string& found() const noexcept { return found_; }
  const std::vector<std::string>& expected() const noexcept { return expected_; }
  const std::string& detail() const noexcept { return detail_; }

  // The same error reported at another position, e.g. relative to an
  // enclosing document.
  ParseError relocated(SourcePosition position) const {
    return ParseError(position, found_, expected_, detail_);
  }

 private:
  static std::string format(const SourcePosition& pos, const std::string& found,
                            const std::vector<std::string>& expected,
                            const std::string& detail) {
    std::string msg = pos.str() + ": unexpected ";
    msg += found == end_of_input ? std::string(end_of_input) : "'" + found + "'";
    if (!detail.empty()) msg += " (" + detail + ")";
    msg += "; expected ";
    if (expected.size() > 1) msg += "one of ";
    for (std::size_t i = 0; i < expected.size(); ++i) {
      if (i) msg += ", ";
      msg += expected[i];
    }
    return msg;
  }

  SourcePosition position_;
  std::string found_;
  std::vector<std::string> expected_;
  std::string detail_;
};

class EmitError : public std::runtime_error {
 public:
  enum class Kind { unsupported_construct, unknown_function };

  EmitError(Kind kind, std::string construct, std::string message)
      : std::runtime_error(std::move(message)), kind_(kind), construct_(std::move(construct)) {}

  Kind kind() const noexcept { return kind_; }
  // Short name of the offending node, e.g. "multiple-output" or "TMath::Foo".
  const std::string& construct() const noexcept { return construct_; }

 private:
  Kind kind_;
  std::string construct_;
};

class EvalError : public std::runtime_error {
 public:
  enum class Kind {
    unbound_symbol,
    non_integral_bitwise_operand,
    unknown_function,
    domain_error,
    unsupported_node,
  };

  EvalError(Kind kind, std::string message)
      : std::runtime_error(std::move(message)), kind_(kind) {}

  Kind kind() const noexcept { return kind_; }

 private:
  Kind kind_;
};

}  // namespace ftx
