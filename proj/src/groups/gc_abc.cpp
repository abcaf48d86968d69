#include <algorithm>
#include <cctype>

#include "polycf/groups/families.hpp"

namespace polycf {

namespace {

void check_letters(const Word& w, const std::vector<Symbol>& letters) {
  for (const auto& s : w)
    if (std::find(letters.begin(), letters.end(), s) == letters.end())
      throw UnknownSymbol("unknown generator '" + s + "'");
}

long small(const Int& v) {
  auto r = to_int64(v);
  if (!r) throw PreconditionViolation("coefficient out of range: " + v.get_str());
  return static_cast<long>(*r);
}

long mod(long v, long p) { return ((v % p) + p) % p; }

}  // namespace

void validate(const GcSpec& spec) {
  if (spec.c.size() < 2) throw PreconditionViolation("Gc coefficients need s >= 1");
  if (spec.c.front() == 0 || spec.c.back() == 0) throw PreconditionViolation("Gc coefficients need c0 and cs nonzero");
  Int g = 0;
  for (const auto& x : spec.c) g = gcd_int(g, x);
  if (g != 1) throw PreconditionViolation("Gc coefficients must have gcd 1");
}

GcSpec parse_gc_spec(const std::string& text) {
  GcSpec spec;
  std::size_t start = 0;
  while (true) {
    auto pos = text.find(',', start);
    spec.c.push_back(parse_int(text.substr(start, pos - start)));
    if (pos == std::string::npos) break;
    start = pos + 1;
  }
  validate(spec);
  return spec;
}

std::string to_string(const GcSpec& spec) {
  std::string s;
  for (std::size_t i = 0; i < spec.c.size(); ++i) s += (i ? "," : "") + spec.c[i].get_str();
  return s;
}

QMatrix gc_matrix(const GcSpec& spec) {
  validate(spec);
  const std::size_t s = spec.s();
  QMatrix a(s, s);
  for (std::size_t i = 1; i < s; ++i) a(i, i - 1) = 1;
  for (std::size_t i = 0; i < s; ++i) a(i, s - 1) = make_rat(-spec.c[i], spec.c[s]);
  return a;
}

GcSpec reverse_spec(const GcSpec& spec) {
  validate(spec);
  GcSpec r{std::vector<Int>(spec.c.rbegin(), spec.c.rend())};
  return r;
}

bool is_polycyclic_case(const GcSpec& spec) {
  validate(spec);
  return abs(spec.c.front()) == 1 && abs(spec.c.back()) == 1;
}

Word reverse_translate(const Word& w, std::size_t s) {
  Word r;
  for (const auto& l : w) {
    Word img;
    if (l == "a") {
      img = {"A"};
    } else if (l == "A") {
      img = {"a"};
    } else if (l == "b" || l == "B") {
      img = conjugate_b(static_cast<std::int64_t>(s), l == "B");
    } else {
      throw UnknownSymbol("reverse_translate reads words over a, b only; got '" + l + "'");
    }
    r.insert(r.end(), img.begin(), img.end());
  }
  return r;
}

GcGroup::GcGroup(GcSpec spec) : spec_(std::move(spec)) {
  a_ = gc_matrix(spec_);
  a_inv_ = inverse(a_);
  letters_ = {"a", "y", "b"};
  for (std::size_t i = 1; i <= spec_.s(); ++i) letters_.push_back("x" + std::to_string(i));
  const std::size_t gens = letters_.size();
  for (std::size_t i = 0; i < gens; ++i) letters_.push_back(invert_letter(letters_[i]));
  for (int sign : {-1, 1}) {
    sign_ = sign;
    powers_.clear();
    auto rels = relators();
    if (std::all_of(rels.begin(), rels.end(), [&](const Word& r) { return is_trivial(r); })) return;
  }
  throw PreconditionViolation("no action convention satisfies the relators of G(" + polycf::to_string(spec_) + ")");
}

const QMatrix& GcGroup::action(std::int64_t t) const {
  const std::int64_t e = sign_ * t;
  std::lock_guard<std::mutex> lock(mu_);
  auto it = powers_.find(e);
  if (it != powers_.end()) return it->second;
  QMatrix m = power(e >= 0 ? a_ : a_inv_, static_cast<unsigned long>(e >= 0 ? e : -e));
  return powers_.emplace(e, std::move(m)).first->second;
}

GcElt GcGroup::multiply(const GcElt& x, const GcElt& y) const {
  GcElt r{x.vec, x.shift + y.shift};
  QVec moved = action(x.shift) * y.vec;
  for (std::size_t i = 0; i < r.vec.size(); ++i) r.vec[i] += moved[i];
  return r;
}

GcElt GcGroup::eval(const Word& w) const {
  check_letters(w, letters_);
  const std::size_t s = spec_.s();
  GcElt e{QVec(s), 0};
  for (const auto& l : w) {
    if (l == "a" || l == "y") {
      ++e.shift;
      continue;
    }
    if (l == "A" || l == "Y") {
      --e.shift;
      continue;
    }
    const int sgn = std::islower(static_cast<unsigned char>(l[0])) ? 1 : -1;
    const std::size_t col = (l == "b" || l == "B") ? 0 : std::stoul(l.substr(1)) - 1;
    const QMatrix& m = action(e.shift);
    for (std::size_t i = 0; i < s; ++i) e.vec[i] += sgn * m(i, col);
  }
  return e;
}

std::string GcGroup::to_string(const GcElt& e) {
  std::string s = "(";
  for (std::size_t i = 0; i < e.vec.size(); ++i) s += (i ? "," : "") + e.vec[i].get_str();
  return s + "; " + std::to_string(e.shift) + ")";
}

Word GcGroup::defining_relator() const {
  Word r;
  for (std::size_t i = 0; i < spec_.c.size(); ++i) {
    auto part = power(conjugate_b(static_cast<std::int64_t>(i)), small(spec_.c[i]));
    r.insert(r.end(), part.begin(), part.end());
  }
  return r;
}

std::string GcGroup::descriptor() const { return "gc:" + polycf::to_string(spec_); }

bool GcGroup::is_trivial(const Word& w) const {
  auto e = eval(w);
  return e.shift == 0 && is_zero(e.vec);
}

std::vector<Word> GcGroup::relators() const {
  std::vector<Word> r;
  for (long i = -5; i <= 5; ++i)
    if (i != 0) r.push_back(commutator({"b"}, conjugate_b(i)));
  r.push_back(defining_relator());
  return r;
}

GcElt gc_eval(const GcSpec& spec, const Word& w) { return GcGroup(spec).eval(w); }

AbcGroup::AbcGroup(long p) : p_(p), letters_{"a", "b", "A", "B"} {
  if (p < 2) throw PreconditionViolation("abc group needs a prime p");
  for (long d = 2; d * d <= p; ++d)
    if (p % d == 0) throw PreconditionViolation("abc group needs a prime p, got " + std::to_string(p));
}

AbcElt AbcGroup::eval(const Word& w) const {
  check_letters(w, letters_);
  AbcElt e;
  for (const auto& l : w) {
    if (l == "a") {
      ++e.shift;
      continue;
    }
    if (l == "A") {
      --e.shift;
      continue;
    }
    // h a^t b_0^x = h b_(-t)^x a^t; moving b_j left past b_i (i > j)
    // contributes c_(i-j)^(-e_i x).
    const long x = l == "b" ? 1 : -1;
    const std::int64_t j = -e.shift;
    for (auto it = e.bpart.upper_bound(j); it != e.bpart.end(); ++it) {
      long& c = e.cpart[it->first - j];
      c = mod(c - it->second * x, p_);
      if (c == 0) e.cpart.erase(it->first - j);
    }
    long& b = e.bpart[j];
    b = mod(b + x, p_);
    if (b == 0) e.bpart.erase(j);
  }
  return e;
}

std::string AbcGroup::to_string(const AbcElt& e) {
  auto part = [](const std::map<std::int64_t, long>& m) {
    std::string s = "{";
    bool first = true;
    for (const auto& [i, c] : m) {
      s += (first ? "" : ",") + std::to_string(i) + ":" + std::to_string(c);
      first = false;
    }
    return s + "}";
  };
  return "shift=" + std::to_string(e.shift) + " b=" + part(e.bpart) + " c=" + part(e.cpart);
}

std::string AbcGroup::descriptor() const { return "abc:p=" + std::to_string(p_); }

bool AbcGroup::is_trivial(const Word& w) const {
  auto e = eval(w);
  return e.shift == 0 && e.bpart.empty() && e.cpart.empty();
}

std::vector<Word> AbcGroup::relators() const {
  std::vector<Word> r;
  auto c = [](long j) { return commutator(conjugate_b(0), conjugate_b(j)); };
  for (long i = -4; i <= 4; ++i) {
    r.push_back(concat(conjugate(conjugate_b(i), {"a"}), conjugate_b(i + 1, true)));
    r.push_back(power(conjugate_b(i), p_));
    for (long j = 1; j <= 4; ++j) r.push_back(concat(commutator(conjugate_b(i), conjugate_b(i + j)), invert_word(c(j))));
  }
  for (long j = 1; j <= 4; ++j) {
    r.push_back(power(c(j), p_));
    r.push_back(commutator(c(j), {"a"}));
    r.push_back(commutator(c(j), {"b"}));
  }
  return r;
}

AbcElt abc_eval(long p, const Word& w) { return AbcGroup(p).eval(w); }

}  // namespace polycf
