#pragma once

#include <cstdint>
#include <map>
#include <mutex>
#include <string>
#include <vector>

#include "polycf/groups/group.hpp"
#include "polycf/linalg.hpp"
#include "polycf/numeric.hpp"

namespace polycf {

// Free group on the given generator names (lowercase first letter).
class FreeGroup : public Group {
 public:
  explicit FreeGroup(std::vector<Symbol> generators);
  static FreeGroup of_rank(std::size_t n);  // x1..xn

  // Freely reduced form.
  Word eval(const Word& w) const;

  std::string descriptor() const override;
  const std::vector<Symbol>& alphabet() const override { return letters_; }
  bool is_trivial(const Word& w) const override { return eval(w).empty(); }
  std::string normal_form(const Word& w) const override;
  std::vector<Word> relators() const override { return {}; }

 private:
  std::vector<Symbol> gens_, letters_;
};

// Z^k on x1..xk.
class ZnGroup : public Group {
 public:
  explicit ZnGroup(std::size_t k);
  std::vector<Int> eval(const Word& w) const;

  std::string descriptor() const override;
  const std::vector<Symbol>& alphabet() const override { return letters_; }
  bool is_trivial(const Word& w) const override;
  std::string normal_form(const Word& w) const override;
  std::vector<Word> relators() const override;

 private:
  std::size_t k_;
  std::vector<Symbol> letters_;
};

// BS(m,n) = <x, t | t^-1 x^m t = x^n>, in Britton normal form
// x^head t^e1 x^f1 ... t^ek x^fk without pinches.
struct BsElt {
  Int head;
  std::vector<std::pair<int, Int>> segments;  // (t exponent +-1, following x exponent)
  friend bool operator==(const BsElt&, const BsElt&) = default;
};

class BsGroup : public Group {
 public:
  BsGroup(long m, long n);
  long m() const { return m_; }
  long n() const { return n_; }

  BsElt eval(const Word& w) const;
  // Unique representative: each segment exponent reduced into [0, |m|) after
  // t^-1 and [0, |n|) after t, the quotient moved to the left.
  BsElt canonical(BsElt e) const;
  static std::string to_string(const BsElt& e);

  std::string descriptor() const override;
  const std::vector<Symbol>& alphabet() const override { return letters_; }
  bool is_trivial(const Word& w) const override;
  std::string normal_form(const Word& w) const override { return to_string(canonical(eval(w))); }
  std::vector<Word> relators() const override;

 private:
  long m_, n_;
  std::vector<Symbol> letters_;
};
BsElt bs_eval(long m, long n, const Word& w);

// C_p wr Z (p >= 2) or Z wr Z (p = 0), generators a (top) and b. Reading b
// with the cursor at shift t adds one at index -t, so b^(a^i) sits at i.
struct WreathElt {
  std::int64_t shift = 0;
  std::map<std::int64_t, Int> support;
  friend bool operator==(const WreathElt&, const WreathElt&) = default;
};

class WreathGroup : public Group {
 public:
  explicit WreathGroup(long p);  // 0 for Z
  long p() const { return p_; }
  WreathElt eval(const Word& w) const;
  static std::string to_string(const WreathElt& e);

  std::string descriptor() const override;
  const std::vector<Symbol>& alphabet() const override { return letters_; }
  bool is_trivial(const Word& w) const override;
  std::string normal_form(const Word& w) const override { return to_string(eval(w)); }
  std::vector<Word> relators() const override;

 private:
  long p_;
  std::vector<Symbol> letters_;
};

// G(c) = <a, b | [b, b^(a^i)], b^c0 (b^a)^c1 ... (b^(a^s))^cs>.
struct GcSpec {
  std::vector<Int> c;
  std::size_t s() const { return c.size() - 1; }
};
// Throws PreconditionViolation unless s >= 1, c0, cs nonzero and gcd 1.
void validate(const GcSpec& spec);
GcSpec parse_gc_spec(const std::string& text);  // "c0,c1,..,cs"
std::string to_string(const GcSpec& spec);
QMatrix gc_matrix(const GcSpec& spec);
GcSpec reverse_spec(const GcSpec& spec);
bool is_polycyclic_case(const GcSpec& spec);
// Image in G(c) of a word over the generators a, b of G(reverse_spec(c)):
// a -> a^-1, b -> b^(a^s).
Word reverse_translate(const Word& w, std::size_t s);

struct GcElt {
  QVec vec;
  std::int64_t shift = 0;
  friend bool operator==(const GcElt&, const GcElt&) = default;
};

// Realized inside Q^s x| Z. Letters: a, y (the Z generator), b, x1 (first
// basis vector), x2..xs (further basis vectors), with inverses.
class GcGroup : public Group {
 public:
  explicit GcGroup(GcSpec spec);
  const GcSpec& spec() const { return spec_; }
  const QMatrix& matrix() const { return a_; }
  // Sign of the exponent in (v1, t1)(v2, t2) = (v1 + A^(sign t1) v2, t1 + t2).
  int action_sign() const { return sign_; }

  GcElt eval(const Word& w) const;
  GcElt multiply(const GcElt& x, const GcElt& y) const;
  static std::string to_string(const GcElt& e);
  // b^c0 (b^a)^c1 ... (b^(a^s))^cs
  Word defining_relator() const;

  std::string descriptor() const override;
  const std::vector<Symbol>& alphabet() const override { return letters_; }
  bool is_trivial(const Word& w) const override;
  std::string normal_form(const Word& w) const override { return to_string(eval(w)); }
  std::vector<Word> relators() const override;

 private:
  const QMatrix& action(std::int64_t t) const;

  GcSpec spec_;
  QMatrix a_, a_inv_;
  int sign_ = 1;
  std::vector<Symbol> letters_;
  mutable std::mutex mu_;
  mutable std::map<std::int64_t, QMatrix> powers_;
};
GcElt gc_eval(const GcSpec& spec, const Word& w);

// The group of the abc construction over a prime p: b_i = b^(a^i), central
// c_j = [b_i, b_(i+j)] of order p. Element h a^shift with h collected as
// b_(i1)^e1 b_(i2)^e2 ... (i1 < i2 < ...) times the central part.
struct AbcElt {
  std::int64_t shift = 0;
  std::map<std::int64_t, long> bpart;
  std::map<std::int64_t, long> cpart;  // keys j > 0
  friend bool operator==(const AbcElt&, const AbcElt&) = default;
};

class AbcGroup : public Group {
 public:
  explicit AbcGroup(long p);
  long p() const { return p_; }
  AbcElt eval(const Word& w) const;
  static std::string to_string(const AbcElt& e);

  std::string descriptor() const override;
  const std::vector<Symbol>& alphabet() const override { return letters_; }
  bool is_trivial(const Word& w) const override;
  std::string normal_form(const Word& w) const override { return to_string(eval(w)); }
  std::vector<Word> relators() const override;

 private:
  long p_;
  std::vector<Symbol> letters_;
};
AbcElt abc_eval(long p, const Word& w);

// b^(a^i) as a word: A^i b a^i.
Word conjugate_b(std::int64_t i, bool inverse = false);

}  // namespace polycf
