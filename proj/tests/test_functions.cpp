#include <gtest/gtest.h>

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <cmath>
#include <functional>
#include <map>

#include "ftx/functions.hpp"

namespace ftx {
namespace {

const FunctionRegistry& reg() { return FunctionRegistry::builtin(); }

TEST(Lookup, Examples) {
  const auto* root_sqrt = reg().lookup_source("Sqrt", "TMath", Dialect::root);
  ASSERT_NE(root_sqrt, nullptr);
  EXPECT_EQ(root_sqrt->canonical, "sqrt");
  const auto* ne_sqrt = reg().lookup_source("sqrt", std::nullopt, Dialect::numexpr);
  ASSERT_NE(ne_sqrt, nullptr);
  EXPECT_EQ(ne_sqrt->canonical, "sqrt");
  EXPECT_EQ(reg().lookup_source("MyFunc", std::nullopt, Dialect::root), nullptr);
  EXPECT_EQ(reg().lookup_source("Sqrt", std::nullopt, Dialect::root), nullptr);
  EXPECT_EQ(reg().lookup_source("sqrt", "TMath", Dialect::numexpr), nullptr);
  EXPECT_THROW(reg().lookup_source("sqrt", std::nullopt, Dialect::python), std::invalid_argument);
}

TEST(Render, Examples) {
  const auto& sqrt = *reg().find_canonical("sqrt");
  EXPECT_EQ(render(sqrt, Dialect::root), "TMath::Sqrt");
  EXPECT_EQ(render(sqrt, Dialect::numexpr), "sqrt");
  EXPECT_EQ(render(sqrt, Dialect::python), "sqrt");
  EXPECT_EQ(render(*reg().find_canonical("asin"), Dialect::numexpr), "arcsin");
  EXPECT_EQ(render(*reg().find_canonical("power"), Dialect::numexpr), std::nullopt);
  EXPECT_EQ(render(*reg().find_canonical("max"), Dialect::python), "maximum");
}

TEST(Registry, SeedTable) {
  std::vector<std::string> names;
  for (const auto& d : reg().descriptors()) names.push_back(d.canonical);
  EXPECT_EQ(names, (std::vector<std::string>{"sqrt", "abs", "sin", "cos", "tan", "asin", "acos", "atan", "atan2",
                                             "sinh", "cosh", "tanh", "exp", "log", "log10", "power", "min",
                                             "max"}));
  for (const auto& d : reg().descriptors()) {
    EXPECT_EQ(d.root_spelling.rfind("TMath::", 0), 0u) << d.canonical;
    EXPECT_TRUE(std::isupper(static_cast<unsigned char>(d.root_spelling[7]))) << d.canonical;
  }
}

TEST(Registry, RoundTripThroughEverySpelling) {
  for (const auto& d : reg().descriptors()) {
    for (Dialect t : {Dialect::root, Dialect::numexpr, Dialect::python}) {
      auto spelled = render(d, t);
      if (!spelled) continue;
      auto sep = spelled->find("::");
      for (Dialect src : {Dialect::root, Dialect::numexpr}) {
        const FunctionDescriptor* back =
            sep == std::string::npos
                ? reg().lookup_source(*spelled, std::nullopt, src)
                : reg().lookup_source(spelled->substr(sep + 2), std::string_view(*spelled).substr(0, sep), src);
        // A spelling is recovered in every parse dialect whose column holds it.
        if (back) { EXPECT_EQ(back->canonical, d.canonical) << *spelled; }
        if (t == src) { EXPECT_EQ(back, &d) << *spelled; }
      }
    }
  }
}

// The shipped data file and the embedded table agree.
TEST(Schema, DataFileMatchesBuiltin) {
  auto loaded = FunctionRegistry::load_file(FTX_FUNCTION_TABLE_PATH);
  ASSERT_EQ(loaded.descriptors().size(), reg().descriptors().size());
  for (std::size_t i = 0; i < loaded.descriptors().size(); ++i) {
    const auto& a = loaded.descriptors()[i];
    const auto& b = reg().descriptors()[i];
    EXPECT_EQ(a.canonical, b.canonical);
    EXPECT_EQ(a.arity, b.arity);
    EXPECT_EQ(a.root_spelling, b.root_spelling);
    EXPECT_EQ(a.numexpr_spelling, b.numexpr_spelling);
    EXPECT_EQ(a.python_spelling, b.python_spelling);
  }
}

TEST(Schema, RejectsMalformedTables) {
  const std::string header = "canonical,arity,root,numexpr,python\n";
  auto bad = [&](const std::string& body) {
    EXPECT_THROW(FunctionRegistry::parse_csv(header + body), RegistryError) << body;
  };
  EXPECT_THROW(FunctionRegistry::parse_csv(""), RegistryError);
  EXPECT_THROW(FunctionRegistry::parse_csv("name,arity,root,numexpr,python\n"), RegistryError);
  bad("sqrt,1,TMath::Sqrt,sqrt\n");                       // too few columns
  bad("sqrt,one,TMath::Sqrt,sqrt,sqrt\n");                // arity not a number
  bad("sqrt,2,TMath::Sqrt,sqrt,sqrt\n");                  // arity disagrees with semantics
  bad("cbrt,1,TMath::Cbrt,cbrt,cbrt\n");                  // no semantics
  bad("sqrt,1,,sqrt,sqrt\n");                             // root spelling required
  bad("sqrt,1,TMath::Sqrt,a::b,sqrt\n");                  // scope only in root column
  bad("sqrt,1,TMath::Sqrt,sqrt,sqrt\nsqrt,1,TMath::S,s,s\n");  // duplicate canonical
  bad("sqrt,1,TMath::Sqrt,sqrt,sqrt\nabs,1,TMath::Sqrt,abs,abs\n");  // duplicate root spelling
  bad("sqrt,1,TMath::Sqrt,x,sqrt\nabs,1,TMath::Abs,x,abs\n");  // duplicate numexpr spelling
}

TEST(Schema, AcceptsCommentsBlankLinesAndMissingColumns) {
  auto r = FunctionRegistry::parse_csv(
      "# comment\ncanonical,arity,root,numexpr,python\n\nmax,2,TMath::Max,,\r\n");
  ASSERT_EQ(r.descriptors().size(), 1u);
  EXPECT_FALSE(r.descriptors()[0].numexpr_spelling);
  EXPECT_FALSE(r.descriptors()[0].python_spelling);
}

TEST(Schema, LoadFileReportsMissingFile) {
  EXPECT_THROW(FunctionRegistry::load_file("/nonexistent/functions.csv"), RegistryError);
}

// Independent reference: 50-digit binary floating point.
using Big = boost::multiprecision::cpp_bin_float_50;

double reference(const std::string& name, double x, double y) {
  using namespace boost::multiprecision;
  const Big a(x), b(y);
  static const std::map<std::string, std::function<Big(const Big&, const Big&)>> table{
      {"sqrt", [](const Big& u, const Big&) { return Big(sqrt(u)); }},
      {"abs", [](const Big& u, const Big&) { return Big(abs(u)); }},
      {"sin", [](const Big& u, const Big&) { return Big(sin(u)); }},
      {"cos", [](const Big& u, const Big&) { return Big(cos(u)); }},
      {"tan", [](const Big& u, const Big&) { return Big(tan(u)); }},
      {"asin", [](const Big& u, const Big&) { return Big(asin(u)); }},
      {"acos", [](const Big& u, const Big&) { return Big(acos(u)); }},
      {"atan", [](const Big& u, const Big&) { return Big(atan(u)); }},
      {"atan2", [](const Big& u, const Big& v) { return Big(atan2(u, v)); }},
      {"sinh", [](const Big& u, const Big&) { return Big(sinh(u)); }},
      {"cosh", [](const Big& u, const Big&) { return Big(cosh(u)); }},
      {"tanh", [](const Big& u, const Big&) { return Big(tanh(u)); }},
      {"exp", [](const Big& u, const Big&) { return Big(exp(u)); }},
      {"log", [](const Big& u, const Big&) { return Big(log(u)); }},
      {"log10", [](const Big& u, const Big&) { return Big(log10(u)); }},
      {"power", [](const Big& u, const Big& v) { return Big(pow(u, v)); }},
      {"min", [](const Big& u, const Big& v) { return u < v ? u : v; }},
      {"max", [](const Big& u, const Big& v) { return u < v ? v : u; }},
  };
  return static_cast<double>(table.at(name)(a, b));
}

TEST(Semantics, AgreeWithHighPrecisionReference) {
  for (const auto& d : reg().descriptors()) {
    // 100 points inside each function's domain.
    const bool unit = d.canonical == "asin" || d.canonical == "acos";
    const bool positive = d.canonical == "sqrt" || d.canonical == "log" || d.canonical == "log10" ||
                          d.canonical == "power";
    const double lo = unit ? -0.99 : positive ? 0.01 : -3.0;
    const double hi = unit ? 0.99 : 3.0;
    for (int i = 0; i < 100; ++i) {
      const double x = lo + (hi - lo) * i / 99.0;
      const double y = 0.5 + 0.023 * i;  // second argument, where used
      const double args[] = {x, y};
      const double got = d.semantics(std::span<const double>(args, d.arity));
      const double want = reference(d.canonical, x, y);
      const double scale = std::max(std::fabs(want), 1e-300);
      EXPECT_LE(std::fabs(got - want) / scale, 1e-12) << d.canonical << "(" << x << ", " << y << ")";
    }
  }
}

}  // namespace
}  // namespace ftx
