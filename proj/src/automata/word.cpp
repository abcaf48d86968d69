#include "polycf/automata/word.hpp"

#include <algorithm>
#include <cctype>

namespace polycf {

Word tokenize(std::string_view text, const std::vector<Symbol>& alphabet) {
  Word out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[pos]))) {
      ++pos;
      continue;
    }
    const Symbol* best = nullptr;
    for (const auto& s : alphabet) {
      if (!s.empty() && text.compare(pos, s.size(), s) == 0 && (!best || s.size() > best->size())) best = &s;
    }
    if (!best) {
      throw UnknownSymbol("no alphabet symbol matches at position " + std::to_string(pos) + " of '" +
                          std::string(text) + "'");
    }
    out.push_back(*best);
    pos += best->size();
  }
  return out;
}

std::string format_word(const Word& w, bool separate) {
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (separate && i) s += ' ';
    s += w[i];
  }
  return s;
}

Symbol invert_letter(const Symbol& s) {
  if (s.empty()) return s;
  Symbol t = s;
  unsigned char c = static_cast<unsigned char>(t[0]);
  t[0] = static_cast<char>(std::islower(c) ? std::toupper(c) : std::tolower(c));
  return t;
}

Word invert_word(const Word& w) {
  Word out(w.rbegin(), w.rend());
  for (auto& s : out) s = invert_letter(s);
  return out;
}

}  // namespace polycf
