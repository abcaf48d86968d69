#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "polycf/error.hpp"

namespace polycf {

using Symbol = std::string;
using Word = std::vector<Symbol>;

class UnknownSymbol : public Error {
 public:
  explicit UnknownSymbol(const std::string& what) : Error(what) {}
};

// Splits text into alphabet symbols by greedy longest match; whitespace is
// ignored. Throws UnknownSymbol when no symbol matches.
Word tokenize(std::string_view text, const std::vector<Symbol>& alphabet);

// Concatenates symbols (with a separator when any symbol is longer than one
// character and separate is true).
std::string format_word(const Word& w, bool separate = false);

// Formal inverse of a generator letter: case swap of the first character.
Symbol invert_letter(const Symbol& s);
Word invert_word(const Word& w);

}  // namespace polycf
