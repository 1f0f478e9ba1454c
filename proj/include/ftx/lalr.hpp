#pragma once

// A small LALR(1) parser generator.
//
// Grammar<Value> collects terminals and productions, each production carrying
// a semantic action that folds the values of its right-hand side into one
// Value. LalrTable computes the LR(0) automaton and LALR(1) lookaheads by
// spontaneous generation and propagation (the "#" dummy-lookahead method),
// then fills ACTION/GOTO. Any shift/reduce or reduce/reduce conflict is a
// GrammarError. Parser<Value> drives the tables over a token stream.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <variant>
#include <vector>

namespace ftx::lr {

class GrammarError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

using SymbolId = int;

struct Symbol {
  std::string name;
  std::string display;  // used in diagnostics
  bool terminal = false;
};

struct Production {
  SymbolId lhs = 0;
  std::vector<SymbolId> rhs;
};

// Grammar structure, independent of semantic values.
class GrammarShape {
 public:
  GrammarShape() { end_ = terminal("$end", "end of input"); }

  SymbolId terminal(std::string name, std::string display = {}) {
    if (auto it = index_.find(name); it != index_.end()) {
      if (!symbols_[it->second].terminal) throw GrammarError("'" + name + "' is a nonterminal");
      return it->second;
    }
    if (display.empty()) display = "'" + name + "'";
    return add_symbol(std::move(name), std::move(display), true);
  }

  // Returns the id of `name`, creating a nonterminal when it is unknown.
  SymbolId symbol(std::string_view name) {
    if (auto it = index_.find(std::string(name)); it != index_.end()) return it->second;
    return add_symbol(std::string(name), std::string(name), false);
  }

  std::size_t add_production(SymbolId lhs, std::vector<SymbolId> rhs) {
    if (symbols_.at(static_cast<std::size_t>(lhs)).terminal)
      throw GrammarError("terminal '" + symbols_[lhs].name + "' on a left-hand side");
    if (productions_.empty() && start_ < 0) start_ = lhs;
    productions_.push_back({lhs, std::move(rhs)});
    return productions_.size() - 1;
  }

  void set_start(SymbolId s) { start_ = s; }

  SymbolId start() const { return start_; }
  SymbolId end() const { return end_; }
  const std::vector<Symbol>& symbols() const { return symbols_; }
  const std::vector<Production>& productions() const { return productions_; }
  const Symbol& operator[](SymbolId id) const { return symbols_.at(static_cast<std::size_t>(id)); }

  std::optional<SymbolId> find(std::string_view name) const {
    if (auto it = index_.find(std::string(name)); it != index_.end()) return it->second;
    return std::nullopt;
  }

 private:
  SymbolId add_symbol(std::string name, std::string display, bool terminal) {
    auto id = static_cast<SymbolId>(symbols_.size());
    index_.emplace(name, id);
    symbols_.push_back({std::move(name), std::move(display), terminal});
    return id;
  }

  std::vector<Symbol> symbols_;
  std::unordered_map<std::string, SymbolId> index_;
  std::vector<Production> productions_;
  SymbolId start_ = -1;
  SymbolId end_ = -1;
};

struct Action {
  enum class Type : std::uint8_t { error, shift, reduce, accept };
  Type type = Type::error;
  int target = 0;  // state for shift, production for reduce

  friend bool operator==(const Action&, const Action&) = default;
};

namespace detail {

// Fixed-width bit set over terminal indices.
class Bits {
 public:
  explicit Bits(std::size_t n = 0) : words_((n + 63) / 64, 0) {}

  void set(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
  bool test(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1U; }
  void reset(std::size_t i) { words_[i / 64] &= ~(std::uint64_t{1} << (i % 64)); }

  // Returns true when any new bit was added.
  bool merge(const Bits& o) {
    bool changed = false;
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t next = words_[w] | o.words_[w];
      changed |= next != words_[w];
      words_[w] = next;
    }
    return changed;
  }

 private:
  std::vector<std::uint64_t> words_;
};

struct Item {
  int production;
  int dot;
  friend auto operator<=>(const Item&, const Item&) = default;
};

}  // namespace detail

class LalrTable {
 public:
  explicit LalrTable(const GrammarShape& g) { build(g); }

  std::size_t state_count() const { return state_count_; }
  std::size_t terminal_count() const { return terminals_.size(); }

  const Action& action(std::size_t state, SymbolId terminal) const {
    return actions_[state * terminals_.size() + static_cast<std::size_t>(term_index_.at(terminal))];
  }

  int go_to(std::size_t state, SymbolId nonterminal) const {
    return gotos_[state * nonterminal_count_ + static_cast<std::size_t>(nonterm_index_.at(nonterminal))];
  }

  // Terminals with a non-error action in `state`.
  std::vector<SymbolId> expected(std::size_t state) const {
    std::vector<SymbolId> out;
    for (std::size_t t = 0; t < terminals_.size(); ++t) {
      if (actions_[state * terminals_.size() + t].type != Action::Type::error)
        out.push_back(terminals_[t]);
    }
    return out;
  }

 private:
  using Bits = detail::Bits;
  using Item = detail::Item;

  void build(const GrammarShape& g) {
    if (g.start() < 0) throw GrammarError("grammar has no productions");
    const auto& syms = g.symbols();
    term_index_.assign(syms.size(), -1);
    nonterm_index_.assign(syms.size(), -1);
    for (std::size_t s = 0; s < syms.size(); ++s) {
      if (syms[s].terminal) {
        term_index_[s] = static_cast<int>(terminals_.size());
        terminals_.push_back(static_cast<SymbolId>(s));
      } else {
        nonterm_index_[s] = static_cast<int>(nonterminal_count_++);
      }
    }
    for (const auto& p : g.productions()) {
      for (SymbolId x : p.rhs) {
        if (x < 0 || static_cast<std::size_t>(x) >= syms.size()) throw GrammarError("bad symbol id");
      }
    }
    for (std::size_t s = 0; s < syms.size(); ++s) {
      if (syms[s].terminal) continue;
      bool defined = std::any_of(g.productions().begin(), g.productions().end(),
                                 [&](const Production& p) { return p.lhs == static_cast<SymbolId>(s); });
      if (!defined) throw GrammarError("nonterminal '" + syms[s].name + "' has no productions");
    }

    // Augmented production S' -> start, stored last. S' gets symbol id -1.
    prods_ = g.productions();
    augmented_ = static_cast<int>(prods_.size());
    prods_.push_back({-1, {g.start()}});
    const std::size_t T = terminals_.size();
    const std::size_t hash = T;  // dummy lookahead
    terminal_flag_.assign(syms.size(), false);
    for (std::size_t s = 0; s < syms.size(); ++s) terminal_flag_[s] = syms[s].terminal;
    by_lhs_.clear();
    for (std::size_t p = 0; p < prods_.size(); ++p) by_lhs_[prods_[p].lhs].push_back(static_cast<int>(p));

    compute_first(g, T + 1);

    // LR(0) automaton.
    std::map<std::vector<Item>, int> state_of;
    std::vector<std::vector<Item>> kernels;
    std::vector<std::map<SymbolId, int>> transitions;
    kernels.push_back({{augmented_, 0}});
    transitions.emplace_back();
    state_of[kernels[0]] = 0;
    for (std::size_t s = 0; s < kernels.size(); ++s) {
      std::map<SymbolId, std::vector<Item>> next;
      for (const Item& it : closure0(kernels[s])) {
        const auto& rhs = prods_[static_cast<std::size_t>(it.production)].rhs;
        if (static_cast<std::size_t>(it.dot) < rhs.size())
          next[rhs[static_cast<std::size_t>(it.dot)]].push_back({it.production, it.dot + 1});
      }
      for (auto& [sym, kernel] : next) {
        std::sort(kernel.begin(), kernel.end());
        kernel.erase(std::unique(kernel.begin(), kernel.end()), kernel.end());
        auto [pos, inserted] = state_of.try_emplace(kernel, static_cast<int>(kernels.size()));
        if (inserted) {
          kernels.push_back(kernel);
          transitions.emplace_back();
        }
        transitions[s][sym] = pos->second;
      }
    }
    state_count_ = kernels.size();

    auto kernel_index = [&](int state, Item item) {
      const auto& k = kernels[static_cast<std::size_t>(state)];
      return static_cast<std::size_t>(std::lower_bound(k.begin(), k.end(), item) - k.begin());
    };

    // Lookaheads: spontaneous generation plus propagation links.
    std::vector<std::vector<Bits>> la(state_count_);
    for (std::size_t s = 0; s < state_count_; ++s) la[s].assign(kernels[s].size(), Bits(T + 1));
    la[0][0].set(static_cast<std::size_t>(term_index_[static_cast<std::size_t>(g.end())]));

    std::vector<std::vector<std::vector<std::pair<int, std::size_t>>>> links(state_count_);
    for (std::size_t s = 0; s < state_count_; ++s) {
      links[s].resize(kernels[s].size());
      for (std::size_t k = 0; k < kernels[s].size(); ++k) {
        Bits seed(T + 1);
        seed.set(hash);
        for (const auto& [item, bits] : closure1({{kernels[s][k], seed}}, T + 1)) {
          const auto& rhs = prods_[static_cast<std::size_t>(item.production)].rhs;
          if (static_cast<std::size_t>(item.dot) >= rhs.size()) continue;
          int target = transitions[s].at(rhs[static_cast<std::size_t>(item.dot)]);
          std::size_t tk = kernel_index(target, {item.production, item.dot + 1});
          Bits spontaneous = bits;
          if (spontaneous.test(hash)) {
            links[s][k].emplace_back(target, tk);
            spontaneous.reset(hash);
          }
          la[static_cast<std::size_t>(target)][tk].merge(spontaneous);
        }
      }
    }
    for (bool changed = true; changed;) {
      changed = false;
      for (std::size_t s = 0; s < state_count_; ++s) {
        for (std::size_t k = 0; k < kernels[s].size(); ++k) {
          for (auto [t, tk] : links[s][k]) changed |= la[static_cast<std::size_t>(t)][tk].merge(la[s][k]);
        }
      }
    }

    // Tables.
    actions_.assign(state_count_ * T, Action{});
    gotos_.assign(state_count_ * nonterminal_count_, -1);
    std::vector<std::string> conflicts;
    auto set_action = [&](std::size_t s, std::size_t t, Action a) {
      Action& cell = actions_[s * T + t];
      if (cell.type != Action::Type::error && cell != a) {
        conflicts.push_back("state " + std::to_string(s) + " on " + g[terminals_[t]].display + ": " +
                            describe(g, cell) + " vs " + describe(g, a));
        return;
      }
      cell = a;
    };

    for (std::size_t s = 0; s < state_count_; ++s) {
      for (const auto& [sym, target] : transitions[s]) {
        if (is_terminal_(sym)) {
          set_action(s, static_cast<std::size_t>(term_index_[static_cast<std::size_t>(sym)]),
                     {Action::Type::shift, target});
        } else {
          gotos_[s * nonterminal_count_ + static_cast<std::size_t>(nonterm_index_[static_cast<std::size_t>(sym)])] =
              target;
        }
      }
      std::vector<std::pair<Item, Bits>> seeds;
      for (std::size_t k = 0; k < kernels[s].size(); ++k) seeds.emplace_back(kernels[s][k], la[s][k]);
      for (const auto& [item, bits] : closure1(seeds, T + 1)) {
        const auto& rhs = prods_[static_cast<std::size_t>(item.production)].rhs;
        if (static_cast<std::size_t>(item.dot) != rhs.size()) continue;
        for (std::size_t t = 0; t < T; ++t) {
          if (!bits.test(t)) continue;
          if (item.production == augmented_) {
            set_action(s, t, {Action::Type::accept, 0});
          } else {
            set_action(s, t, {Action::Type::reduce, item.production});
          }
        }
      }
    }
    if (!conflicts.empty()) {
      std::string msg = "grammar is not LALR(1):";
      for (const auto& c : conflicts) msg += "\n  " + c;
      throw GrammarError(msg);
    }
  }

  bool is_terminal_(SymbolId x) const {
    return x >= 0 && terminal_flag_[static_cast<std::size_t>(x)];
  }

  std::string describe(const GrammarShape& g, const Action& a) const {
    switch (a.type) {
      case Action::Type::shift: return "shift " + std::to_string(a.target);
      case Action::Type::accept: return "accept";
      case Action::Type::reduce: {
        const auto& p = prods_[static_cast<std::size_t>(a.target)];
        std::string s = "reduce " + g[p.lhs].name + " ->";
        for (SymbolId x : p.rhs) s += " " + g[x].name;
        return s;
      }
      case Action::Type::error: break;
    }
    return "error";
  }

  void compute_first(const GrammarShape& g, std::size_t width) {
    const std::size_t n = g.symbols().size();
    nullable_.assign(n, false);
    first_.assign(n, Bits(width));
    for (std::size_t s = 0; s < n; ++s) {
      if (g.symbols()[s].terminal) first_[s].set(static_cast<std::size_t>(term_index_[s]));
    }
    for (bool changed = true; changed;) {
      changed = false;
      for (const auto& p : prods_) {
        if (p.lhs < 0) continue;
        auto lhs = static_cast<std::size_t>(p.lhs);
        bool all_nullable = true;
        for (SymbolId x : p.rhs) {
          changed |= first_[lhs].merge(first_[static_cast<std::size_t>(x)]);
          if (!nullable_[static_cast<std::size_t>(x)]) {
            all_nullable = false;
            break;
          }
        }
        if (all_nullable && !nullable_[lhs]) {
          nullable_[lhs] = true;
          changed = true;
        }
      }
    }
  }

  std::vector<Item> closure0(const std::vector<Item>& kernel) const {
    std::vector<Item> items = kernel;
    std::map<SymbolId, bool> seen;
    for (std::size_t i = 0; i < items.size(); ++i) {
      const auto& rhs = prods_[static_cast<std::size_t>(items[i].production)].rhs;
      if (static_cast<std::size_t>(items[i].dot) >= rhs.size()) continue;
      SymbolId next = rhs[static_cast<std::size_t>(items[i].dot)];
      if (is_terminal_(next) || seen[next]) continue;
      seen[next] = true;
      for (int q : by_lhs_.at(next)) items.push_back({q, 0});
    }
    return items;
  }

  std::map<Item, Bits> closure1(const std::vector<std::pair<Item, Bits>>& seeds, std::size_t width) const {
    std::map<Item, Bits> items;
    std::deque<Item> work;
    for (const auto& [item, bits] : seeds) {
      auto [it, inserted] = items.try_emplace(item, Bits(width));
      it->second.merge(bits);
      work.push_back(item);
    }
    while (!work.empty()) {
      Item item = work.front();
      work.pop_front();
      const auto& rhs = prods_[static_cast<std::size_t>(item.production)].rhs;
      if (static_cast<std::size_t>(item.dot) >= rhs.size()) continue;
      SymbolId next = rhs[static_cast<std::size_t>(item.dot)];
      if (is_terminal_(next)) continue;
      Bits follow(width);
      bool rest_nullable = true;
      for (std::size_t i = static_cast<std::size_t>(item.dot) + 1; i < rhs.size(); ++i) {
        follow.merge(first_[static_cast<std::size_t>(rhs[i])]);
        if (!nullable_[static_cast<std::size_t>(rhs[i])]) {
          rest_nullable = false;
          break;
        }
      }
      if (rest_nullable) follow.merge(items.at(item));
      for (int q : by_lhs_.at(next)) {
        auto [it, inserted] = items.try_emplace(Item{q, 0}, Bits(width));
        if (it->second.merge(follow) || inserted) work.push_back(it->first);
      }
    }
    return items;
  }

  std::vector<Production> prods_;
  int augmented_ = 0;
  std::map<SymbolId, std::vector<int>> by_lhs_;
  std::vector<bool> terminal_flag_;
  std::vector<bool> nullable_;
  std::vector<Bits> first_;

  std::vector<SymbolId> terminals_;
  std::vector<int> term_index_;
  std::vector<int> nonterm_index_;
  std::size_t nonterminal_count_ = 0;
  std::size_t state_count_ = 0;
  std::vector<Action> actions_;
  std::vector<int> gotos_;
};

// Where and why the input was rejected.
struct Rejection {
  std::size_t token_index;  // == token count when the input ended early
  std::vector<SymbolId> expected;
};

template <typename Value>
class Grammar {
 public:
  using SemanticAction = std::function<Value(std::span<Value>)>;

  SymbolId terminal(std::string name, std::string display = {}) {
    return shape_.terminal(std::move(name), std::move(display));
  }

  // Adds `lhs -> rhs...`. Names not declared as terminals become nonterminals.
  void rule(std::string_view lhs, std::initializer_list<std::string_view> rhs, SemanticAction action) {
    SymbolId l = shape_.symbol(lhs);
    std::vector<SymbolId> r;
    for (auto name : rhs) r.push_back(shape_.symbol(name));
    shape_.add_production(l, std::move(r));
    actions_.push_back(std::move(action));
  }

  void set_start(std::string_view name) { shape_.set_start(shape_.symbol(name)); }

  const GrammarShape& shape() const { return shape_; }
  const SemanticAction& action(std::size_t production) const { return actions_.at(production); }

 private:
  GrammarShape shape_;
  std::vector<SemanticAction> actions_;
};

// Table-driven shift-reduce parser. Immutable once constructed.
template <typename Value>
class Parser {
 public:
  explicit Parser(Grammar<Value> grammar) : grammar_(std::move(grammar)), table_(grammar_.shape()) {}

  const Grammar<Value>& grammar() const { return grammar_; }
  const LalrTable& table() const { return table_; }

  // `terminals[i]` is the terminal id of token i; `shift_value(i)` produces
  // its semantic value. End of input is implicit.
  template <typename ShiftFn>
  std::variant<Value, Rejection> parse(std::span<const SymbolId> terminals, ShiftFn&& shift_value) const {
    const auto& shape = grammar_.shape();
    std::vector<std::size_t> states{0};
    std::vector<Value> values;
    std::size_t i = 0;
    for (;;) {
      SymbolId look = i < terminals.size() ? terminals[i] : shape.end();
      const Action& a = table_.action(states.back(), look);
      switch (a.type) {
        case Action::Type::shift:
          states.push_back(static_cast<std::size_t>(a.target));
          values.push_back(shift_value(i));
          ++i;
          break;
        case Action::Type::reduce: {
          const auto p = static_cast<std::size_t>(a.target);
          const std::size_t n = shape.productions()[p].rhs.size();
          std::span<Value> rhs(values.data() + values.size() - n, n);
          Value folded = grammar_.action(p)(rhs);
          values.resize(values.size() - n);
          states.resize(states.size() - n);
          states.push_back(static_cast<std::size_t>(table_.go_to(states.back(), shape.productions()[p].lhs)));
          values.push_back(std::move(folded));
          break;
        }
        case Action::Type::accept:
          return std::move(values.back());
        case Action::Type::error:
          return Rejection{i, viable(states)};
      }
    }
  }

 private:
  // Terminals that would eventually be shifted (or accepted) from the
  // configuration `states`. Narrower than the raw action row, which LALR
  // state merging widens with default reductions.
  std::vector<SymbolId> viable(const std::vector<std::size_t>& states) const {
    const auto& shape = grammar_.shape();
    std::vector<SymbolId> out;
    for (SymbolId t : table_.expected(states.back())) {
      std::vector<std::size_t> sim = states;
      for (;;) {
        const Action& a = table_.action(sim.back(), t);
        if (a.type == Action::Type::reduce) {
          const auto& p = shape.productions()[static_cast<std::size_t>(a.target)];
          sim.resize(sim.size() - p.rhs.size());
          sim.push_back(static_cast<std::size_t>(table_.go_to(sim.back(), p.lhs)));
          continue;
        }
        if (a.type != Action::Type::error) out.push_back(t);
        break;
      }
    }
    return out;
  }

  Grammar<Value> grammar_;
  LalrTable table_;
};

}  // namespace ftx::lr
