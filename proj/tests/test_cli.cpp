#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"

namespace ftx::cli {
namespace {

struct Result {
  int code;
  std::string out, err;
};

Result run_cli(std::vector<std::string> args, const std::string& stdin_text = "") {
  std::istringstream in(stdin_text);
  std::ostringstream out, err;
  const int code = run(std::move(args), in, out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path temp_file(const std::string& name, const std::string& content) {
  auto path = std::filesystem::temp_directory_path() / ("ftx_cli_test_" + name);
  std::ofstream(path, std::ios::binary) << content;
  return path;
}

TEST(Cli, ConvertExamples) {
  auto r = run_cli({"convert", "--from", "root", "--to", "numexpr", "--expr", "TMath::Sqrt(px*px + py*py)"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "sqrt(((px)*(px))+((py)*(py)))\n");
  r = run_cli({"convert", "--from", "root", "--to", "python", "--expr", "TMath::ASin(x)"});
  EXPECT_EQ(r.out, "arcsin(x)\n");
}

TEST(Cli, ExitCodes) {
  auto r = run_cli({"convert", "--from", "root", "--to", "python", "--expr", "a +"});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("1:4"), std::string::npos) << r.err;
  r = run_cli({"convert", "--from", "numexpr", "--to", "root", "--expr", "a[0]"});
  EXPECT_EQ(r.code, 1);
  r = run_cli({"convert", "--from", "root", "--to", "numexpr", "--expr", "a:b"});
  EXPECT_EQ(r.code, 2);
  EXPECT_EQ(run_cli({"convert", "--from", "python", "--to", "root", "--expr", "x"}).code, 3);
  EXPECT_EQ(run_cli({"convert", "--to", "root", "--expr", "x"}).code, 3);
  EXPECT_EQ(run_cli({"frobnicate"}).code, 3);
  EXPECT_EQ(run_cli({}).code, 3);
  EXPECT_EQ(run_cli({"convert", "--from", "root", "--to", "root", "--input", "/nonexistent/x"}).code, 3);
  EXPECT_EQ(run_cli({"convert", "--from", "root", "--to", "root", "--expr", "x", "--input", "y"}).code, 3);
  EXPECT_EQ(run_cli({"convert", "--from", "root", "--to", "root", "--expr", "x", "--functions", "/nonexistent"}).code,
            3);
}

TEST(Cli, InputSources) {
  const std::string expr = "TMath::Max(a, b) * 2";
  auto file = temp_file("input.txt", expr);
  auto a = run_cli({"convert", "--from", "root", "--to", "python", "--expr", expr});
  auto b = run_cli({"convert", "--from", "root", "--to", "python", "--input", file.string()});
  auto c = run_cli({"convert", "--from", "root", "--to", "python"}, expr);
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(a.out, c.out);

  auto out_path = std::filesystem::temp_directory_path() / "ftx_cli_test_output.txt";
  auto d = run_cli({"convert", "--from", "root", "--to", "python", "--expr", expr, "--output", out_path.string()});
  EXPECT_EQ(d.code, 0);
  EXPECT_EQ(d.out, "");
  std::ifstream in(out_path);
  std::string written((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  EXPECT_EQ(written, a.out);
}

TEST(Cli, Batch) {
  auto r = run_cli({"convert", "--from", "root", "--to", "numexpr", "--batch"}, "a+b\nx>0 && y\n");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "(a)+(b)\n((x)>(0))&(y)\n");
  r = run_cli({"convert", "--from", "root", "--to", "numexpr", "--batch"}, "a+b\nc*\nd\n");
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(r.out, "(a)+(b)\n");
  EXPECT_NE(r.err.find("2:3"), std::string::npos) << r.err;
}

TEST(Cli, CustomFunctions) {
  auto csv = temp_file("functions.csv", "canonical,arity,root,numexpr,python\nsqrt,1,M::R,r,np_r\n");
  auto r = run_cli({"convert", "--from", "root", "--to", "python", "--expr", "M::R(x)", "--functions", csv.string()});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "np_r(x)\n");
  auto bad = temp_file("bad.csv", "nonsense\n");
  EXPECT_EQ(run_cli({"convert", "--from", "root", "--to", "root", "--expr", "x", "--functions", bad.string()}).code,
            3);
}

TEST(Cli, VersionAndHelp) {
  auto r = run_cli({"--version"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find(version), std::string::npos);
  r = run_cli({"--help"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("convert"), std::string::npos);
}

TEST(Cli, Bench) {
  auto r = run_cli({"bench", "--repeats", "1,2,4", "--trials", "2"});
  EXPECT_EQ(r.code, 0);
  std::istringstream lines(r.out);
  std::string line;
  std::getline(lines, line);
  EXPECT_EQ(line, "repeats,chars,seconds,trials");
  int rows = 0;
  while (std::getline(lines, line)) ++rows;
  EXPECT_EQ(rows, 3);
  EXPECT_NE(r.err.find("slope"), std::string::npos);
  EXPECT_EQ(run_cli({"bench", "--base", "(", "--repeats", "1"}).code, 1);
  EXPECT_EQ(run_cli({"bench", "--repeats", "0"}).code, 3);
  EXPECT_EQ(run_cli({"bench", "--trials", "0"}).code, 3);
}

TEST(Cli, ParseRepeats) {
  EXPECT_EQ(parse_repeats("1,2,4,...,256"), (std::vector<std::size_t>{1, 2, 4, 8, 16, 32, 64, 128, 256}));
  EXPECT_EQ(parse_repeats("1, 3, ..., 9"), (std::vector<std::size_t>{1, 3, 9}));
  EXPECT_EQ(parse_repeats("2,4,...,10"), (std::vector<std::size_t>{2, 4, 8, 10}));
  EXPECT_EQ(parse_repeats("3,5,...,11"), (std::vector<std::size_t>{3, 5, 7, 9, 11}));
  EXPECT_EQ(parse_repeats("7"), (std::vector<std::size_t>{7}));
  EXPECT_THROW(parse_repeats(""), UsageError);
  EXPECT_THROW(parse_repeats("1,...,4"), UsageError);
  EXPECT_THROW(parse_repeats("1,2,..."), UsageError);
  EXPECT_THROW(parse_repeats("x"), UsageError);
}

}  // namespace
}  // namespace ftx::cli
