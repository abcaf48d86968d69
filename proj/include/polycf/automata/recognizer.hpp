#pragma once

#include <map>
#include <memory>
#include <vector>

#include "polycf/automata/grammar.hpp"
#include "polycf/automata/npda.hpp"

namespace polycf {

// A PDA compiled to CNF, with its input symbols resolved.
class CompiledPda {
 public:
  explicit CompiledPda(const Npda& a);
  const Npda& machine() const { return pda_; }
  const CnfGrammar& grammar() const { return cnf_; }
  std::vector<std::size_t> encode(const Word& w) const;  // throws UnknownSymbol
  bool accepts(const Word& w) const;

 private:
  Npda pda_;
  CnfGrammar cnf_;
};

bool pda_accepts(const Npda& a, const Word& w);

// Intersection of the languages of its PDAs, all over the same input alphabet.
class KcfRecognizer {
 public:
  KcfRecognizer() = default;
  explicit KcfRecognizer(std::vector<Npda> pdas);

  const std::vector<Npda>& pdas() const { return pdas_; }
  std::size_t size() const { return pdas_.size(); }
  // Sorted input alphabet.
  const std::vector<Symbol>& alphabet() const { return alphabet_; }

 private:
  std::vector<Npda> pdas_;
  std::vector<Symbol> alphabet_;
};

bool kcf_accepts(const KcfRecognizer& r, const Word& w);

// Compiled recognizer with an incremental cursor for prefix-pruned search.
class KcfMatcher {
 public:
  explicit KcfMatcher(const KcfRecognizer& r);

  const std::vector<Symbol>& alphabet() const { return alphabet_; }
  std::size_t symbol(const Symbol& s) const;  // index into alphabet(); throws UnknownSymbol
  bool accepts(const Word& w) const;

  class Cursor {
   public:
    void push(std::size_t sym);
    void pop();
    std::size_t length() const { return length_; }
    bool accepts() const;
    bool viable() const;

   private:
    friend class KcfMatcher;
    const KcfMatcher* m_ = nullptr;
    std::vector<Chart> charts_;
    std::size_t length_ = 0;
  };
  Cursor cursor() const;

 private:
  std::vector<Symbol> alphabet_;
  std::vector<std::unique_ptr<CompiledPda>> parts_;
  std::vector<std::vector<std::size_t>> local_;  // alphabet index -> terminal id per part
};

// Adds a fresh bottom symbol and a final pop state; same language, but the
// original stack is never empty while the machine may still read input.
Npda guard_bottom(const Npda& a);

// Each PDA ignores the letters of the other alphabet.
KcfRecognizer direct_product(const KcfRecognizer& r1, const KcfRecognizer& r2);

// Reads g by simulating a run on h(g).
KcfRecognizer inverse_homomorphism(const KcfRecognizer& r, const std::map<Symbol, Word>& h);

// Replaces the last component with its product with the DFA.
KcfRecognizer intersect_regular(const KcfRecognizer& r, const Dfa& d);
Npda pda_times_dfa(const Npda& a, const Dfa& d);

// Components L_i u M_j for every pair.
KcfRecognizer kcf_union(const KcfRecognizer& r1, const KcfRecognizer& r2);
Npda pda_union(const Npda& a, const Npda& b);

}  // namespace polycf
