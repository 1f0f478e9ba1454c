#include <gtest/gtest.h>

#include <string>
#include <vector>

#include "ftx/lalr.hpp"
#include "ftx/parser.hpp"

namespace ftx::lr {
namespace {

// Parses space-separated symbols; tokens name terminals directly.
template <typename V>
std::variant<V, Rejection> run(const Parser<V>& p, const std::vector<std::string>& toks) {
  std::vector<SymbolId> ids;
  for (const auto& t : toks) ids.push_back(*p.grammar().shape().find(t));
  return p.parse(ids, [&](std::size_t i) { return V(toks[i]); });
}

// S -> L = R | R ; L -> * R | id ; R -> L. The classic grammar that is
// LALR(1) but not SLR(1).
Grammar<std::string> pointer_grammar() {
  Grammar<std::string> g;
  g.terminal("=");
  g.terminal("*");
  g.terminal("id");
  g.rule("S", {"L", "=", "R"}, [](std::span<std::string> v) { return "(= " + v[0] + " " + v[2] + ")"; });
  g.rule("S", {"R"}, [](std::span<std::string> v) { return v[0]; });
  g.rule("L", {"*", "R"}, [](std::span<std::string> v) { return "(* " + v[1] + ")"; });
  g.rule("L", {"id"}, [](std::span<std::string> v) { return v[0]; });
  g.rule("R", {"L"}, [](std::span<std::string> v) { return v[0]; });
  return g;
}

TEST(Lalr, AcceptsGrammarThatIsNotSlr) {
  Parser<std::string> p(pointer_grammar());
  auto r = run(p, {"*", "id", "=", "id"});
  ASSERT_TRUE(std::holds_alternative<std::string>(r));
  EXPECT_EQ(std::get<std::string>(r), "(= (* id) id)");
  auto r2 = run(p, {"*", "*", "id"});
  EXPECT_EQ(std::get<std::string>(r2), "(* (* id))");
}

TEST(Lalr, RejectionReportsTokenIndexAndExpectations) {
  Parser<std::string> p(pointer_grammar());
  auto r = run(p, {"id", "=", "="});
  ASSERT_TRUE(std::holds_alternative<Rejection>(r));
  const auto& rej = std::get<Rejection>(r);
  EXPECT_EQ(rej.token_index, 2u);
  std::vector<std::string> names;
  for (auto id : rej.expected) names.push_back(p.grammar().shape()[id].name);
  EXPECT_EQ(names, (std::vector<std::string>{"*", "id"}));

  auto early = run(p, {"*"});
  EXPECT_EQ(std::get<Rejection>(early).token_index, 1u);
}

TEST(Lalr, AmbiguousGrammarIsRejected) {
  Grammar<int> g;
  g.terminal("+");
  g.terminal("n");
  g.rule("E", {"E", "+", "E"}, [](std::span<int>) { return 0; });
  g.rule("E", {"n"}, [](std::span<int>) { return 0; });
  EXPECT_THROW(Parser<int>{g}, GrammarError);
}

TEST(Lalr, ReduceReduceConflictIsRejected) {
  Grammar<int> g;
  g.terminal("x");
  g.rule("S", {"A"}, [](std::span<int>) { return 0; });
  g.rule("S", {"B"}, [](std::span<int>) { return 0; });
  g.rule("A", {"x"}, [](std::span<int>) { return 1; });
  g.rule("B", {"x"}, [](std::span<int>) { return 2; });
  try {
    Parser<int> p{g};
    FAIL();
  } catch (const GrammarError& e) {
    EXPECT_NE(std::string(e.what()).find("reduce"), std::string::npos);
  }
}

TEST(Lalr, NullableProductions) {
  // S -> a B c ; B -> b B | (empty)
  Grammar<std::string> g;
  g.terminal("a");
  g.terminal("b");
  g.terminal("c");
  g.rule("S", {"a", "B", "c"}, [](std::span<std::string> v) { return "[" + v[1] + "]"; });
  g.rule("B", {"b", "B"}, [](std::span<std::string> v) { return "b" + v[1]; });
  g.rule("B", {}, [](std::span<std::string>) { return std::string(); });
  Parser<std::string> p(g);
  EXPECT_EQ(std::get<std::string>(run(p, {"a", "c"})), "[]");
  EXPECT_EQ(std::get<std::string>(run(p, {"a", "b", "b", "c"})), "[bb]");
}

TEST(Lalr, UndefinedNonterminalIsAnError) {
  Grammar<int> g;
  g.terminal("x");
  g.rule("S", {"x", "Missing"}, [](std::span<int>) { return 0; });
  EXPECT_THROW(Parser<int>{g}, GrammarError);
}

TEST(Lalr, ExpressionGrammarsAreConflictFree) {
  for (Dialect d : {Dialect::root, Dialect::numexpr}) {
    EXPECT_NO_THROW(Parser<grammar::SemanticValue>(grammar::build(d))) << to_string(d);
  }
  EXPECT_GT(dialect_parser(Dialect::root).tables().table().state_count(),
            dialect_parser(Dialect::numexpr).tables().table().state_count());
}

}  // namespace
}  // namespace ftx::lr
