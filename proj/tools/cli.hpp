#pragma once

// Command-line front end.
//
//   ftx convert --from {root|numexpr} --to {root|numexpr|python}
//               [--expr STR | --input FILE] [--output FILE] [--batch]
//               [--functions CSV]
//   ftx bench   [--base EXPR] [--repeats 1,2,4,...,256] [--trials N] [--csv PATH]
//
// Exit codes: 0 success, 1 parse error, 2 emit error, 3 usage error.

#include <algorithm>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ftx/ftx.hpp"

namespace ftx::cli {

enum ExitCode : int { ok = 0, parse_failure = 1, emit_failure = 2, usage_failure = 3 };

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Expands "1,2,4,...,256": "..." continues the progression set by the two
// preceding values (geometric when their ratio is integral, else arithmetic)
// up to the value that follows it.
inline std::vector<std::size_t> parse_repeats(const std::string& text) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  for (std::string part; std::getline(ss, part, ',');) {
    part.erase(std::remove_if(part.begin(), part.end(), ::isspace), part.end());
    parts.push_back(part);
  }
  auto number = [](const std::string& s) -> std::size_t {
    if (s.empty() || !std::all_of(s.begin(), s.end(), ::isdigit))
      throw UsageError("--repeats: '" + s + "' is not a positive integer");
    std::size_t v = std::stoul(s);
    if (v == 0) throw UsageError("--repeats: values must be positive");
    return v;
  };
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] != "...") {
      out.push_back(number(parts[i]));
      continue;
    }
    if (out.size() < 2 || i + 1 >= parts.size() || parts[i + 1] == "...")
      throw UsageError("--repeats: '...' needs two values before it and one after");
    const std::size_t a = out[out.size() - 2], b = out.back(), end = number(parts[i + 1]);
    if (b <= a || end < b) throw UsageError("--repeats: '...' needs an increasing progression");
    const bool geometric = b % a == 0;
    for (std::size_t next = geometric ? b * (b / a) : b + (b - a); next < end;
         next = geometric ? next * (b / a) : next + (b - a)) {
      out.push_back(next);
    }
  }
  if (out.empty()) throw UsageError("--repeats is empty");
  return out;
}

namespace detail {

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read '" + path + "'");
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

inline std::vector<std::string> split_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::stringstream ss(text);
  for (std::string line; std::getline(ss, line);) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines.push_back(line);
  }
  return lines;
}

struct ConvertOptions {
  std::string from, to;
  std::optional<std::string> expr, input, output, functions;
  bool batch = false;
};

inline int convert(const ConvertOptions& opt, std::istream& in, std::ostream& out, std::ostream& err) {
  const Dialect from = *dialect_from_string(opt.from);
  const Dialect to = *dialect_from_string(opt.to);

  std::optional<FunctionRegistry> custom;
  if (opt.functions) {
    try {
      custom = FunctionRegistry::load_file(*opt.functions);
    } catch (const RegistryError& e) {
      throw UsageError(e.what());
    }
  }
  const FunctionRegistry& registry = custom ? *custom : FunctionRegistry::builtin();

  std::string text;
  if (opt.expr) {
    text = *opt.expr;
  } else if (opt.input) {
    text = read_file(*opt.input);
  } else {
    text.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
  }

  std::ofstream file;
  if (opt.output) {
    file.open(*opt.output, std::ios::binary);
    if (!file) throw UsageError("cannot write '" + *opt.output + "'");
  }
  std::ostream& sink = opt.output ? static_cast<std::ostream&>(file) : out;

  std::vector<std::string> lines;
  if (opt.batch) {
    lines = split_lines(text);
  } else {
    lines.push_back(std::move(text));
  }
  for (std::size_t i = 0; i < lines.size(); ++i) {
    try {
      sink << emit(parse(lines[i], from), to, registry) << '\n';
    } catch (const ParseError& e) {
      if (opt.batch) {
        SourcePosition p = e.position();
        p.line += i;
        err << "error: " << e.relocated(p).what() << '\n';
      } else {
        err << "error: " << e.what() << '\n';
      }
      return parse_failure;
    } catch (const EmitError& e) {
      err << "error: " << e.what() << '\n';
      return emit_failure;
    }
  }
  return ok;
}

struct BenchOptions {
  std::string base{bench::default_base};
  std::string repeats = "1,2,4,...,256";
  std::size_t trials = 5;
  std::optional<std::string> csv;
};

inline int run_bench(const BenchOptions& opt, std::ostream& out, std::ostream& err) {
  const auto repeats = parse_repeats(opt.repeats);
  std::vector<bench::BenchRecord> records;
  try {
    records = bench::run_bench(opt.base, repeats, opt.trials);
  } catch (const ParseError& e) {
    err << "error: base expression: " << e.what() << '\n';
    return parse_failure;
  }
  std::ostream* summary = &out;
  if (opt.csv) {
    std::ofstream file(*opt.csv, std::ios::binary);
    if (!file) throw UsageError("cannot write '" + *opt.csv + "'");
    bench::write_csv(file, records);
  } else {
    bench::write_csv(out, records);
    summary = &err;
  }
  if (records.size() >= 2) {
    *summary << "log-log slope of parse time vs length: " << bench::loglog_slope(records) << " over "
             << records.size() << " sizes\n";
  }
  return ok;
}

}  // namespace detail

// `args` excludes the program name.
inline int run(std::vector<std::string> args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Convert expressions between the root, numexpr and python dialects."};
  app.name("ftx");
  app.set_version_flag("--version", std::string(version));
  app.require_subcommand(1);

  detail::ConvertOptions conv;
  auto* convert = app.add_subcommand("convert", "Convert one expression (or one per line with --batch).");
  convert->add_option("--from", conv.from, "Source dialect")->required()->check(CLI::IsMember({"root", "numexpr"}));
  convert->add_option("--to", conv.to, "Target dialect")
      ->required()
      ->check(CLI::IsMember({"root", "numexpr", "python"}));
  auto* expr_opt = convert->add_option("--expr", conv.expr, "Expression text");
  auto* input_opt = convert->add_option("--input", conv.input, "Read the expression from FILE");
  expr_opt->excludes(input_opt);
  convert->add_option("--output", conv.output, "Write the result to FILE instead of stdout");
  convert->add_flag("--batch", conv.batch, "One expression per line; stop at the first error");
  convert->add_option("--functions", conv.functions, "Function table CSV replacing the built-in one");

  detail::BenchOptions bopt;
  auto* bench = app.add_subcommand("bench", "Time root-dialect parsing against input length.");
  bench->add_option("--base", bopt.base, "Base expression")->capture_default_str();
  bench->add_option("--repeats", bopt.repeats, "Repeat counts, e.g. 1,2,4,...,256")->capture_default_str();
  bench->add_option("--trials", bopt.trials, "Timed parses per size (median is reported)")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  bench->add_option("--csv", bopt.csv, "Write records to PATH (default: stdout)");

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? ok : usage_failure;
  }

  try {
    if (*convert) return detail::convert(conv, in, out, err);
    return detail::run_bench(bopt, out, err);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return usage_failure;
  }
}

}  // namespace ftx::cli
