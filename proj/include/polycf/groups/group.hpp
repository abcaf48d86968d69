#pragma once

#include <cstddef>
#include <memory>
#include <random>
#include <string>
#include <vector>

#include "polycf/automata/word.hpp"

namespace polycf {

// Word-problem oracle for a finitely generated group. Letters are the
// generators followed by their formal inverses.
class Group {
 public:
  virtual ~Group() = default;

  virtual std::string descriptor() const = 0;
  virtual const std::vector<Symbol>& alphabet() const = 0;
  virtual bool is_trivial(const Word& w) const = 0;
  // Printed normal form of the element represented by w.
  virtual std::string normal_form(const Word& w) const = 0;
  // Defining relators (a finite sample when the presentation is infinite).
  virtual std::vector<Word> relators() const = 0;

  bool equal(const Word& u, const Word& v) const;
};

bool in_word_problem(const Group& g, const Word& w);

// free:n | free:x,y,.. | zn:k | bs:m,n | wreath:p=P | wreath:Z | gc:c0,..,cs | abc:p=P
std::unique_ptr<Group> make_group(const std::string& descriptor);

// Uniform random word over the letters.
Word random_word(const std::vector<Symbol>& letters, std::size_t length, std::mt19937_64& rng);

// Word helpers.
Word power(const Word& w, long e);          // negative e uses the inverse
Word conjugate(const Word& w, const Word& by);  // by^-1 w by
Word commutator(const Word& u, const Word& v);  // u^-1 v^-1 u v
Word concat(const Word& u, const Word& v);

}  // namespace polycf
