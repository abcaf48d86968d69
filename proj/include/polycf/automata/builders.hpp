#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "polycf/automata/recognizer.hpp"

namespace polycf {

// Regular pattern item: a fixed letter or a starred letter.
struct PatternItem {
  Symbol letter;
  bool star = false;
};
// DFA for the concatenation of the items over the given alphabet (subset
// construction, completed with a sink).
Dfa pattern_dfa(const std::vector<Symbol>& alphabet, const std::vector<PatternItem>& items);
// Accepts every word over the alphabet, or none.
Dfa universal_dfa(const std::vector<Symbol>& alphabet);
Dfa empty_dfa(const std::vector<Symbol>& alphabet);

// W(Z, {x}): words with as many x as X. Stack: Z0 bottom with only P or
// only N above it.
Npda one_counter_pda(const Symbol& x, const Symbol& inv);
// W(Z^k) over x1..xk, X1..Xk as a direct product of k one-counter PDAs.
KcfRecognizer zk_recognizer(std::size_t k);
// Balanced brackets over ( and ).
Npda dyck_pda();
// Free group on x1..xn (or x, y, ... when names given): stack holds the
// freely reduced word.
Npda free_group_pda(const std::vector<Symbol>& generators);
// Single-PDA recognizers for the empty language and for all words.
Npda empty_pda(const std::vector<Symbol>& alphabet);
Npda all_words_pda(const std::vector<Symbol>& alphabet);

// W_k = (A* b a*)^k (A* B a*)^k.
Dfa wreath_shape(std::size_t k);
// m_i = n_i blockwise.
Npda wreath_pda_equal(std::size_t k);
// n_i < m_{i+1} for i outside {k, 2k}.
Npda wreath_pda_increase(std::size_t k);
KcfRecognizer build_Mk_wreath(std::size_t k);
// Block pattern of the wreath words: A^{m} b a^{n} per block.
std::vector<PatternItem> wreath_pattern(std::size_t k);

// W_k = (B A* B a* b A* b a*)^k (B A* b a* b A* B a*)^k.
Dfa abc_shape(std::size_t k);
// m_i = n_i and mu_i = nu_i.
Npda abc_pda_pairs(std::size_t k);
// m_i = mu_i.
Npda abc_pda_cross(std::size_t k);
// m_i < m_{i+1} for i outside {k, 2k}.
Npda abc_pda_increase(std::size_t k);
KcfRecognizer build_Mk_abc(std::size_t k);
std::vector<PatternItem> abc_pattern(std::size_t k);

}  // namespace polycf
