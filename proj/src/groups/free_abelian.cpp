#include <algorithm>
#include <cctype>
#include <set>

#include "polycf/groups/families.hpp"

namespace polycf {

namespace {

std::vector<Symbol> with_inverses(const std::vector<Symbol>& gens) {
  std::vector<Symbol> letters = gens;
  for (const auto& g : gens) letters.push_back(invert_letter(g));
  return letters;
}

void check_letters(const Word& w, const std::vector<Symbol>& letters) {
  for (const auto& s : w)
    if (std::find(letters.begin(), letters.end(), s) == letters.end())
      throw UnknownSymbol("unknown generator '" + s + "'");
}

}  // namespace

FreeGroup::FreeGroup(std::vector<Symbol> generators) : gens_(std::move(generators)) {
  if (gens_.empty()) throw PreconditionViolation("free group needs at least one generator");
  std::set<Symbol> seen;
  for (const auto& g : gens_) {
    if (g.empty() || !std::islower(static_cast<unsigned char>(g[0])))
      throw PreconditionViolation("generator names must start with a lowercase letter: '" + g + "'");
    if (!seen.insert(g).second) throw PreconditionViolation("duplicate generator '" + g + "'");
  }
  letters_ = with_inverses(gens_);
}

FreeGroup FreeGroup::of_rank(std::size_t n) {
  std::vector<Symbol> gens;
  for (std::size_t i = 1; i <= n; ++i) gens.push_back("x" + std::to_string(i));
  return FreeGroup(gens);
}

Word FreeGroup::eval(const Word& w) const {
  check_letters(w, letters_);
  Word r;
  for (const auto& s : w) {
    if (!r.empty() && r.back() == invert_letter(s)) {
      r.pop_back();
    } else {
      r.push_back(s);
    }
  }
  return r;
}

std::string FreeGroup::descriptor() const {
  std::string d = "free:";
  for (std::size_t i = 0; i < gens_.size(); ++i) d += (i ? "," : "") + gens_[i];
  return d;
}

std::string FreeGroup::normal_form(const Word& w) const {
  auto r = eval(w);
  return r.empty() ? "1" : format_word(r, true);
}

ZnGroup::ZnGroup(std::size_t k) : k_(k) {
  if (k == 0) throw PreconditionViolation("zn needs k >= 1");
  std::vector<Symbol> gens;
  for (std::size_t i = 1; i <= k; ++i) gens.push_back("x" + std::to_string(i));
  letters_ = with_inverses(gens);
}

std::vector<Int> ZnGroup::eval(const Word& w) const {
  check_letters(w, letters_);
  std::vector<Int> v(k_);
  for (const auto& s : w) {
    auto i = static_cast<std::size_t>(std::stoul(s.substr(1))) - 1;
    v[i] += s[0] == 'x' ? 1 : -1;
  }
  return v;
}

std::string ZnGroup::descriptor() const { return "zn:" + std::to_string(k_); }

bool ZnGroup::is_trivial(const Word& w) const {
  auto v = eval(w);
  return std::all_of(v.begin(), v.end(), [](const Int& x) { return x == 0; });
}

std::string ZnGroup::normal_form(const Word& w) const {
  auto v = eval(w);
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i].get_str();
  return s + ")";
}

std::vector<Word> ZnGroup::relators() const {
  std::vector<Word> r;
  for (std::size_t i = 0; i < k_; ++i)
    for (std::size_t j = i + 1; j < k_; ++j) r.push_back(commutator({letters_[i]}, {letters_[j]}));
  return r;
}

}  // namespace polycf
