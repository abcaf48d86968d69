#include <algorithm>

#include "polycf/groups/families.hpp"

namespace polycf {

namespace {

void check_letters(const Word& w, const std::vector<Symbol>& letters) {
  for (const auto& s : w)
    if (std::find(letters.begin(), letters.end(), s) == letters.end())
      throw UnknownSymbol("unknown generator '" + s + "'");
}

Int& exponent_before(BsElt& e, std::size_t seg) { return seg == 0 ? e.head : e.segments[seg - 1].second; }

}  // namespace

BsGroup::BsGroup(long m, long n) : m_(m), n_(n), letters_{"x", "t", "X", "T"} {
  if (m == 0 || n == 0) throw PreconditionViolation("BS(m,n) needs m, n nonzero");
}

BsElt BsGroup::eval(const Word& w) const {
  check_letters(w, letters_);
  BsElt e;
  for (const auto& s : w) {
    if (s == "x" || s == "X") {
      exponent_before(e, e.segments.size()) += s == "x" ? 1 : -1;
      continue;
    }
    const int eps = s == "t" ? 1 : -1;
    if (!e.segments.empty() && e.segments.back().first == -eps) {
      const Int f = e.segments.back().second;
      // t^-1 x^(mj) t = x^(nj) and t x^(nj) t^-1 = x^(mj)
      const long from = eps == 1 ? m_ : n_;
      const long to = eps == 1 ? n_ : m_;
      if (f % from == 0) {
        e.segments.pop_back();
        exponent_before(e, e.segments.size()) += f / from * to;
        continue;
      }
    }
    e.segments.emplace_back(eps, 0);
  }
  return e;
}

BsElt BsGroup::canonical(BsElt e) const {
  for (std::size_t i = e.segments.size(); i-- > 0;) {
    auto& [eps, f] = e.segments[i];
    Int q, r;
    if (eps == -1) {
      divmod_nonneg(f, Int(m_), q, r);
      exponent_before(e, i) += q * n_;
    } else {
      divmod_nonneg(f, Int(n_), q, r);
      exponent_before(e, i) += q * m_;
    }
    f = r;
  }
  return e;
}

std::string BsGroup::to_string(const BsElt& e) {
  if (e.segments.empty() && e.head == 0) return "1";
  std::string s = "x^" + e.head.get_str();
  for (const auto& [eps, f] : e.segments) s += std::string(eps == 1 ? " t" : " T") + " x^" + f.get_str();
  return s;
}

std::string BsGroup::descriptor() const { return "bs:" + std::to_string(m_) + "," + std::to_string(n_); }

bool BsGroup::is_trivial(const Word& w) const {
  auto e = eval(w);
  return e.segments.empty() && e.head == 0;
}

std::vector<Word> BsGroup::relators() const {
  return {concat(conjugate(power({"x"}, m_), {"t"}), power({"x"}, -n_))};
}

BsElt bs_eval(long m, long n, const Word& w) { return BsGroup(m, n).eval(w); }

WreathGroup::WreathGroup(long p) : p_(p), letters_{"a", "b", "A", "B"} {
  if (p == 1 || p < 0) throw PreconditionViolation("wreath product needs p >= 2 or Z");
}

WreathElt WreathGroup::eval(const Word& w) const {
  check_letters(w, letters_);
  WreathElt e;
  for (const auto& s : w) {
    if (s == "a") {
      ++e.shift;
    } else if (s == "A") {
      --e.shift;
    } else {
      Int& c = e.support[-e.shift];
      c += s == "b" ? 1 : -1;
      if (p_ > 0) c = ((c % p_) + p_) % p_;
      if (c == 0) e.support.erase(-e.shift);
    }
  }
  return e;
}

std::string WreathGroup::to_string(const WreathElt& e) {
  std::string s = "shift=" + std::to_string(e.shift) + " support={";
  bool first = true;
  for (const auto& [i, c] : e.support) {
    s += (first ? "" : ",") + std::to_string(i) + ":" + c.get_str();
    first = false;
  }
  return s + "}";
}

std::string WreathGroup::descriptor() const { return p_ == 0 ? "wreath:Z" : "wreath:p=" + std::to_string(p_); }

bool WreathGroup::is_trivial(const Word& w) const {
  auto e = eval(w);
  return e.shift == 0 && e.support.empty();
}

std::vector<Word> WreathGroup::relators() const {
  std::vector<Word> r;
  for (long i = -5; i <= 5; ++i)
    if (i != 0) r.push_back(commutator({"b"}, conjugate_b(i)));
  if (p_ > 0) r.push_back(power({"b"}, p_));
  return r;
}

}  // namespace polycf
