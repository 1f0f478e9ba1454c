#pragma once

// Function catalog with per-dialect spellings.
//
// The table format is CSV with the header row
//
//   canonical,arity,root,numexpr,python
//
// one descriptor per line. An empty spelling cell means the dialect has no
// counterpart. Root spellings may be scope-qualified (`TMath::Sqrt`).
// Blank lines and lines starting with '#' are ignored; cells are not quoted.
// Canonical names must have built-in semantics (see builtin_semantics()).

#include <cmath>
#include <cstddef>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "ftx/ast.hpp"
#include "ftx/dialect.hpp"
#include "ftx/function_table_data.hpp"

namespace ftx {

using ScalarFunction = std::function<double(std::span<const double>)>;

struct FunctionSemantics {
  std::size_t arity;
  ScalarFunction fn;
};

struct FunctionDescriptor {
  std::string canonical;
  std::size_t arity = 0;
  std::string root_spelling;
  std::optional<std::string> numexpr_spelling;
  std::optional<std::string> python_spelling;
  ScalarFunction semantics;

  const std::optional<std::string>& spelling_for(Dialect d) const {
    static const std::optional<std::string> none;
    switch (d) {
      case Dialect::numexpr: return numexpr_spelling;
      case Dialect::python: return python_spelling;
      case Dialect::root: break;
    }
    return none;
  }
};

class RegistryError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Reference scalar implementations, keyed by canonical name.
inline const std::map<std::string, FunctionSemantics, std::less<>>& builtin_semantics() {
  static const std::map<std::string, FunctionSemantics, std::less<>> table = [] {
    using Fn1 = double (*)(double);
    auto unary = [](Fn1 f) {
      return FunctionSemantics{1, [f](std::span<const double> a) { return f(a[0]); }};
    };
    std::map<std::string, FunctionSemantics, std::less<>> t;
    t["sqrt"] = unary([](double x) { return std::sqrt(x); });
    t["abs"] = unary([](double x) { return std::fabs(x); });
    t["sin"] = unary([](double x) { return std::sin(x); });
    t["cos"] = unary([](double x) { return std::cos(x); });
    t["tan"] = unary([](double x) { return std::tan(x); });
    t["asin"] = unary([](double x) { return std::asin(x); });
    t["acos"] = unary([](double x) { return std::acos(x); });
    t["atan"] = unary([](double x) { return std::atan(x); });
    t["sinh"] = unary([](double x) { return std::sinh(x); });
    t["cosh"] = unary([](double x) { return std::cosh(x); });
    t["tanh"] = unary([](double x) { return std::tanh(x); });
    t["exp"] = unary([](double x) { return std::exp(x); });
    t["log"] = unary([](double x) { return std::log(x); });
    t["log10"] = unary([](double x) { return std::log10(x); });
    t["atan2"] = {2, [](std::span<const double> a) { return std::atan2(a[0], a[1]); }};
    t["power"] = {2, [](std::span<const double> a) { return std::pow(a[0], a[1]); }};
    t["min"] = {2, [](std::span<const double> a) { return std::fmin(a[0], a[1]); }};
    t["max"] = {2, [](std::span<const double> a) { return std::fmax(a[0], a[1]); }};
    return t;
  }();
  return table;
}

class FunctionRegistry {
 public:
  static FunctionRegistry parse_csv(std::string_view text) {
    FunctionRegistry reg;
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t line_no = 0;
    bool header_seen = false;
    while (std::getline(in, line)) {
      ++line_no;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (line.empty() || line[0] == '#') continue;
      auto cells = split(line);
      auto fail = [&](const std::string& why) {
        throw RegistryError("function table line " + std::to_string(line_no) + ": " + why);
      };
      if (cells.size() != 5) fail("expected 5 columns, found " + std::to_string(cells.size()));
      if (!header_seen) {
        if (cells != std::vector<std::string>{"canonical", "arity", "root", "numexpr", "python"})
          fail("header must be 'canonical,arity,root,numexpr,python'");
        header_seen = true;
        continue;
      }
      FunctionDescriptor d;
      d.canonical = cells[0];
      if (d.canonical.empty()) fail("empty canonical name");
      try {
        std::size_t used = 0;
        int arity = std::stoi(cells[1], &used);
        if (used != cells[1].size() || arity < 0) throw std::invalid_argument("arity");
        d.arity = static_cast<std::size_t>(arity);
      } catch (const std::exception&) {
        fail("arity '" + cells[1] + "' is not a non-negative integer");
      }
      if (cells[2].empty()) fail("root spelling is required");
      if (!valid_spelling(cells[2], true)) fail("invalid root spelling '" + cells[2] + "'");
      d.root_spelling = cells[2];
      for (int col : {3, 4}) {
        if (cells[static_cast<std::size_t>(col)].empty()) continue;
        if (!valid_spelling(cells[static_cast<std::size_t>(col)], false))
          fail("invalid spelling '" + cells[static_cast<std::size_t>(col)] + "'");
        (col == 3 ? d.numexpr_spelling : d.python_spelling) = cells[static_cast<std::size_t>(col)];
      }
      const auto& sem = builtin_semantics();
      auto it = sem.find(d.canonical);
      if (it == sem.end()) fail("no semantics for canonical name '" + d.canonical + "'");
      if (it->second.arity != d.arity)
        fail("arity of '" + d.canonical + "' must be " + std::to_string(it->second.arity));
      d.semantics = it->second.fn;
      try {
        reg.add(std::move(d));
      } catch (const RegistryError& e) {
        fail(e.what());
      }
    }
    if (!header_seen) throw RegistryError("function table has no header row");
    return reg;
  }

  static FunctionRegistry load_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw RegistryError("cannot open function table '" + path.string() + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_csv(buf.str());
  }

  // The table shipped in data/functions.csv.
  static const FunctionRegistry& builtin() {
    static const FunctionRegistry reg = parse_csv(detail::builtin_function_table);
    return reg;
  }

  const std::vector<FunctionDescriptor>& descriptors() const { return descriptors_; }

  const FunctionDescriptor* find_canonical(std::string_view canonical) const {
    for (const auto& d : descriptors_) {
      if (d.canonical == canonical) return &d;
    }
    return nullptr;
  }

  // Descriptor whose `column` spelling is `spelling` (qualified, for root).
  const FunctionDescriptor* find_spelling(std::string_view spelling, Dialect column) const {
    const auto& index = index_[static_cast<std::size_t>(column)];
    auto it = index.find(std::string(spelling));
    return it == index.end() ? nullptr : &descriptors_[it->second];
  }

  // nullptr when not found, which is not an error: unknown calls are kept verbatim.
  const FunctionDescriptor* lookup_source(std::string_view name, std::optional<std::string_view> ns,
                                          Dialect source) const {
    require_parse_dialect(source);
    if (ns) {
      if (source != Dialect::root) return nullptr;
      return find_spelling(std::string(*ns) + "::" + std::string(name), source);
    }
    return find_spelling(name, source);
  }

  // Descriptor a Call node refers to: scope-qualified calls through the root
  // column, plain names through the numexpr column.
  const FunctionDescriptor* resolve(const Call& call) const {
    if (call.ns) return lookup_source(call.name, std::string_view(*call.ns), Dialect::root);
    return lookup_source(call.name, std::nullopt, Dialect::numexpr);
  }

 private:
  static std::vector<std::string> split(const std::string& line) {
    std::vector<std::string> cells;
    std::string cell;
    std::istringstream in(line);
    while (std::getline(in, cell, ',')) cells.push_back(cell);
    if (!line.empty() && line.back() == ',') cells.emplace_back();
    return cells;
  }

  static bool valid_spelling(std::string_view s, bool allow_scope) {
    auto sep = s.find("::");
    if (sep == std::string_view::npos) return is_name_lexeme(s);
    return allow_scope && is_name_lexeme(s.substr(0, sep)) && is_name_lexeme(s.substr(sep + 2));
  }

  void add(FunctionDescriptor d) {
    if (find_canonical(d.canonical)) throw RegistryError("duplicate canonical name '" + d.canonical + "'");
    const std::size_t slot = descriptors_.size();
    auto claim = [&](Dialect col, const std::optional<std::string>& spelling) {
      if (!spelling) return;
      auto& index = index_[static_cast<std::size_t>(col)];
      if (!index.emplace(*spelling, slot).second)
        throw RegistryError("duplicate " + std::string(to_string(col)) + " spelling '" + *spelling + "'");
    };
    claim(Dialect::root, d.root_spelling);
    claim(Dialect::numexpr, d.numexpr_spelling);
    claim(Dialect::python, d.python_spelling);
    descriptors_.push_back(std::move(d));
  }

  std::vector<FunctionDescriptor> descriptors_;
  std::unordered_map<std::string, std::size_t> index_[3];
};

// Spelling of `desc` in `target`; nullopt when that dialect has none.
inline std::optional<std::string> render(const FunctionDescriptor& desc, Dialect target) {
  if (target == Dialect::root) return desc.root_spelling;
  return desc.spelling_for(target);
}

}  // namespace ftx
