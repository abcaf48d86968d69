#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "polycf/automata/npda.hpp"

namespace polycf {

// Grammar symbol: terminal ids index Cfg::terminals, nonterminal ids index
// Cfg::nonterminals.
struct GSym {
  bool terminal = false;
  std::size_t id = 0;
  friend auto operator<=>(const GSym&, const GSym&) = default;
};

struct Production {
  std::size_t lhs = 0;
  std::vector<GSym> rhs;
  friend auto operator<=>(const Production&, const Production&) = default;
};

struct Cfg {
  std::vector<std::string> nonterminals;
  std::vector<std::string> terminals;
  std::size_t start = 0;
  std::vector<Production> productions;

  std::size_t add_nonterminal(std::string name);
  std::string to_text() const;
};

// Chomsky normal form: X -> a, X -> Y Z, plus start -> epsilon when the
// language contains the empty word. The start symbol never occurs on a right
// side. Terminal ids are shared with the source grammar.
struct CnfGrammar {
  std::size_t num_nonterminals = 0;
  std::size_t num_terminals = 0;
  std::size_t start = 0;
  bool accepts_empty = false;
  bool empty_language = false;
  std::vector<std::vector<std::size_t>> by_terminal;  // terminal -> X with X -> a
  struct Binary {
    std::size_t lhs, left, right;
  };
  std::vector<std::vector<Binary>> by_left;  // left child -> rules
  // left_corner[Y] as a bitset: every X with X =>* Y ... by leftmost children.
  std::vector<std::vector<std::uint64_t>> left_corner;
  std::vector<std::string> names;

  std::size_t num_rules() const;
};

// Triple construction over productive triples [p X q], restricted to the part
// reachable from the start symbol.
Cfg pda_to_cfg(const Npda& a);
// START, TERM, BIN, DEL, UNIT, then removal of useless symbols.
CnfGrammar to_cnf(const Cfg& g);

// Incremental CYK chart with prefix viability. push/pop work at the right end.
class Chart {
 public:
  explicit Chart(const CnfGrammar& g);

  void push(std::size_t terminal);
  void pop();
  void clear();
  std::size_t length() const { return word_.size(); }

  bool accepts() const;
  // Some extension of the current word is in the language.
  bool viable() const;

 private:
  using Bits = std::vector<std::uint64_t>;
  struct Cell {
    Bits bits;
    std::vector<std::size_t> list;
  };
  bool test(const Bits& b, std::size_t x) const { return (b[x >> 6] >> (x & 63)) & 1U; }
  void set(Cell& c, std::size_t x) const;

  const CnfGrammar* g_;
  std::size_t words_;
  std::vector<std::size_t> word_;
  // column n holds cells [i][n] for i < n, stored at index i
  std::vector<std::vector<Cell>> span_;
  std::vector<std::vector<Bits>> prefix_;
};

bool cnf_accepts(const CnfGrammar& g, const std::vector<std::size_t>& terminals);

}  // namespace polycf
