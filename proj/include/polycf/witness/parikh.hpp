#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "polycf/automata/builders.hpp"
#include "polycf/vecset.hpp"

namespace polycf {

using WordOracle = std::function<bool(const Word&)>;

// {(m_1..m_n) in [0,cap]^n : w_1^m_1 ... w_n^m_n accepted}, sorted.
std::vector<Vec0> bounded_parikh(const WordOracle& accept, const std::vector<Word>& words, unsigned cap);

// A block of a bounded pattern: a variable power of word, or word once.
struct ParikhBlock {
  Word word;
  bool variable = true;
};
std::vector<ParikhBlock> blocks_from_pattern(const std::vector<PatternItem>& items);

// Exponents of the variable blocks (each <= cap) whose word the recognizer
// accepts and the filter (if any) accepts. Prefixes the recognizer cannot
// extend to an accepted word are pruned.
std::vector<Vec0> bounded_parikh(const KcfRecognizer& r, const std::vector<ParikhBlock>& blocks, unsigned cap,
                                 const WordOracle& filter = {});

// Members of Phi(W(G) n M_k) with exponents <= cap; p = 0 selects Z wr Z.
// Throws Error if a member is not of the repeated form.
std::vector<Vec0> wreath_Lk_phi(long p, std::size_t k, unsigned cap);
std::vector<Vec0> abc_Lk_phi(long p, std::size_t k, unsigned cap);

struct PhiStructure {
  bool inside_Snk = true;   // repeated n times and halves equal
  bool increasing = true;   // strictly increasing blocks within each half
  std::size_t difference_rank = 0;
};
PhiStructure phi_structure(const std::vector<Vec0>& members, std::size_t n, std::size_t k);

// Rank over Q of {v - v_0}.
std::size_t difference_rank(const std::vector<Vec0>& members);

}  // namespace polycf
