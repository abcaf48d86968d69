#pragma once

#include <cstddef>
#include <limits>
#include <map>
#include <string>
#include <vector>

#include "polycf/automata/word.hpp"

namespace polycf {

// Interned names -> dense ids.
class SymbolTable {
 public:
  std::size_t add(const std::string& name);  // existing id if already present
  std::size_t id(const std::string& name) const;  // throws UnknownSymbol
  bool contains(const std::string& name) const { return index_.count(name) != 0; }
  const std::string& name(std::size_t id) const { return names_.at(id); }
  const std::vector<std::string>& names() const { return names_; }
  std::size_t size() const { return names_.size(); }

 private:
  std::vector<std::string> names_;
  std::map<std::string, std::size_t> index_;
};

// Nondeterministic PDA. Every move pops the top symbol and pushes a string
// (first element ends on top). A word is accepted when the machine can end in
// an accepting state with an empty stack after reading all of it.
class Npda {
 public:
  static constexpr std::size_t kEps = std::numeric_limits<std::size_t>::max();

  struct Transition {
    std::size_t from;
    std::size_t input;  // kEps for an epsilon move
    std::size_t top;
    std::size_t to;
    std::vector<std::size_t> push;

    friend bool operator==(const Transition&, const Transition&) = default;
    friend auto operator<=>(const Transition&, const Transition&) = default;
  };

  SymbolTable& states() { return states_; }
  SymbolTable& inputs() { return inputs_; }
  SymbolTable& stack() { return stack_; }
  const SymbolTable& states() const { return states_; }
  const SymbolTable& inputs() const { return inputs_; }
  const SymbolTable& stack() const { return stack_; }

  void set_start(std::size_t state, std::size_t stack_symbol);
  std::size_t start_state() const { return start_state_; }
  std::size_t start_stack() const { return start_stack_; }

  void set_accepting(std::size_t state, bool accepting = true);
  bool accepting(std::size_t state) const;

  void add_transition(Transition t);
  // Name-based helper; input "" or "_" means epsilon.
  void add(const std::string& from, const std::string& input, const std::string& top, const std::string& to,
           const std::vector<std::string>& push);
  const std::vector<Transition>& transitions() const { return transitions_; }

  // Drops duplicate transitions and sorts them.
  void canonicalize();

 private:
  SymbolTable states_, inputs_, stack_;
  std::size_t start_state_ = 0, start_stack_ = 0;
  std::vector<bool> accepting_;
  std::vector<Transition> transitions_;
};

// Complete DFA. Construction via add() leaves gaps; complete() routes them to
// a fresh sink state.
class Dfa {
 public:
  static constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

  SymbolTable& states() { return states_; }
  SymbolTable& inputs() { return inputs_; }
  const SymbolTable& states() const { return states_; }
  const SymbolTable& inputs() const { return inputs_; }

  void set_start(std::size_t s) { start_ = s; }
  std::size_t start() const { return start_; }
  void set_accepting(std::size_t state, bool accepting = true);
  bool accepting(std::size_t state) const;

  void set(std::size_t from, std::size_t input, std::size_t to);
  void add(const std::string& from, const std::string& input, const std::string& to);
  std::size_t next(std::size_t from, std::size_t input) const;
  void complete();
  bool accepts(const Word& w) const;

 private:
  SymbolTable states_, inputs_;
  std::size_t start_ = 0;
  std::vector<bool> accepting_;
  std::vector<std::vector<std::size_t>> delta_;
};

// Text formats.
//   pda states=q0,q1 input=x,X stack=Z,P,N
//   start q0 Z
//   accept q1
//   t q0 x Z -> q0 P Z     (input `_` is epsilon; push `_` is the empty string)
//   end
// DFA: header `dfa states=.. input=..`, `start q`, `accept q..`, `t q a -> q'`, `end`.
Npda parse_pda(const std::string& text);
std::string format_pda(const Npda& a);
Dfa parse_dfa(const std::string& text);
std::string format_dfa(const Dfa& d);

}  // namespace polycf
