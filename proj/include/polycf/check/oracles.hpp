#pragma once

#include <cstddef>
#include <functional>
#include <random>
#include <vector>

#include "polycf/automata/grammar.hpp"
#include "polycf/automata/npda.hpp"
#include "polycf/diophantine.hpp"
#include "polycf/vecset.hpp"

// Slow reference implementations used to cross-check the library, and the
// random generators shared by the self-test suites and the test binaries.
namespace polycf::check {

// Breadth-first search over PDA configurations with a stack depth cap.
// Only finds runs whose stack stays within the cap.
bool explore_accepts(const Npda& a, const Word& w, std::size_t depth_cap);
std::size_t max_push(const Npda& a);

// Earley recognizer on an arbitrary CFG (epsilon rules allowed).
bool earley_accepts(const Cfg& g, const std::vector<std::size_t>& terminals);

// Every word of length <= max_len, shortest first.
void for_each_word(const std::vector<Symbol>& alphabet, std::size_t max_len,
                   const std::function<void(const Word&)>& f);

// Points c + sum alpha_i p_i with every alpha_i <= coeff_bound, restricted to
// [0, box]^r. With coeff_bound >= box this is exactly L n [0, box]^r.
BoxGrid naive_points(const LinearSet& l, unsigned coeff_bound, unsigned box);

// Minimal nonzero solutions of A x = 0 found by scanning [0, box]^cols.
// Equals the Hilbert basis intersected with the box.
std::vector<Vec0> brute_hilbert_basis(const HomSystem& sys, unsigned box);

LinearSet random_linear_set(std::size_t r, std::size_t max_periods, long max_entry, std::mt19937_64& rng,
                            bool zero_constant = false);
HomSystem random_system(std::size_t rows, std::size_t cols, long bound, std::mt19937_64& rng);
// Zero constant, periods kept only while the set stays stratified.
LinearSet random_stratified(std::size_t r, std::size_t attempts, std::mt19937_64& rng);
// Three states, inputs a and b, stack symbols Z and Y.
Npda random_pda(std::mt19937_64& rng);

}  // namespace polycf::check
