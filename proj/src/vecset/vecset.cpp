#include "polycf/vecset.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <utility>

#include "polycf/error.hpp"

namespace polycf {

// --- Vec0 -------------------------------------------------------------------

Vec0::Vec0(std::vector<Int> entries) : entries_(std::move(entries)) {
  for (const auto& e : entries_) {
    if (e < 0) throw PreconditionViolation("Vec0 entries must be nonnegative");
  }
}

Vec0::Vec0(std::initializer_list<long> entries) {
  entries_.reserve(entries.size());
  for (long e : entries) {
    if (e < 0) throw PreconditionViolation("Vec0 entries must be nonnegative");
    entries_.emplace_back(e);
  }
}

Vec0 Vec0::zero(std::size_t r) { return Vec0(std::vector<Int>(r, Int(0))); }

Vec0 Vec0::unit(std::size_t r, std::size_t i) {
  std::vector<Int> e(r, Int(0));
  e.at(i) = 1;
  return Vec0(std::move(e));
}

bool Vec0::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const Int& x) { return x == 0; });
}

Int Vec0::sigma() const {
  Int s = 0;
  for (const auto& e : entries_) s += e;
  return s;
}

Int Vec0::max_entry() const {
  Int m = 0;
  for (const auto& e : entries_) m = std::max(m, e);
  return m;
}

bool Vec0::leq(const Vec0& other) const {
  if (other.size() != size()) throw DimensionMismatch(size(), other.size());
  for (std::size_t i = 0; i < size(); ++i)
    if (entries_[i] > other.entries_[i]) return false;
  return true;
}

std::size_t Vec0::support_size() const {
  return static_cast<std::size_t>(
      std::count_if(entries_.begin(), entries_.end(), [](const Int& x) { return x != 0; }));
}

Vec0 Vec0::operator+(const Vec0& other) const {
  if (other.size() != size()) throw DimensionMismatch(size(), other.size());
  std::vector<Int> out(size());
  for (std::size_t i = 0; i < size(); ++i) out[i] = entries_[i] + other.entries_[i];
  return Vec0(std::move(out));
}

Vec0 Vec0::scaled(const Int& k) const {
  std::vector<Int> out(size());
  for (std::size_t i = 0; i < size(); ++i) out[i] = entries_[i] * k;
  return Vec0(std::move(out));
}

Vec0 Vec0::concat(const Vec0& tail) const {
  std::vector<Int> out = entries_;
  out.insert(out.end(), tail.entries_.begin(), tail.entries_.end());
  return Vec0(std::move(out));
}

Vec0 Vec0::slice(std::size_t from, std::size_t count) const {
  if (from + count > size()) throw DimensionMismatch(size(), from + count);
  return Vec0(std::vector<Int>(entries_.begin() + static_cast<std::ptrdiff_t>(from),
                               entries_.begin() + static_cast<std::ptrdiff_t>(from + count)));
}

QVec Vec0::to_q() const {
  QVec q;
  q.reserve(size());
  for (const auto& e : entries_) q.emplace_back(e);
  return q;
}

std::string to_string(const Vec0& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += v[i].get_str();
  }
  return s + ")";
}

// --- LinearSet / SemilinearSet ---------------------------------------------

LinearSet::LinearSet(Vec0 constant, std::vector<Vec0> periods)
    : constant_(std::move(constant)), periods_(std::move(periods)) {
  if (constant_.size() == 0) throw PreconditionViolation("linear set needs dimension >= 1");
  for (const auto& p : periods_) {
    if (p.size() != constant_.size()) throw DimensionMismatch(constant_.size(), p.size());
  }
}

LinearSet LinearSet::normalized() const {
  std::set<Vec0> uniq;
  for (const auto& p : periods_)
    if (!p.is_zero()) uniq.insert(p);
  return LinearSet(constant_, std::vector<Vec0>(uniq.begin(), uniq.end()));
}

SemilinearSet::SemilinearSet(std::size_t r, std::vector<LinearSet> components)
    : r_(r), components_(std::move(components)) {
  for (const auto& l : components_) {
    if (l.dim_ambient() != r_) throw DimensionMismatch(r_, l.dim_ambient());
  }
}

SemilinearSet::SemilinearSet(LinearSet single) : r_(single.dim_ambient()) {
  components_.push_back(std::move(single));
}

// --- Permutation ------------------------------------------------------------

Permutation::Permutation(std::vector<std::size_t> mapping) : mapping_(std::move(mapping)) {
  std::vector<bool> seen(mapping_.size(), false);
  for (auto m : mapping_) {
    if (m >= mapping_.size() || seen[m]) throw PreconditionViolation("not a bijection");
    seen[m] = true;
  }
}

Permutation Permutation::identity(std::size_t r) {
  std::vector<std::size_t> m(r);
  for (std::size_t i = 0; i < r; ++i) m[i] = i;
  return Permutation(std::move(m));
}

Permutation Permutation::transposition(std::size_t r, std::size_t i, std::size_t j) {
  auto p = identity(r).mapping_;
  std::swap(p.at(i), p.at(j));
  return Permutation(std::move(p));
}

Vec0 Permutation::apply(const Vec0& v) const {
  if (v.size() != size()) throw DimensionMismatch(size(), v.size());
  std::vector<Int> out(size());
  for (std::size_t i = 0; i < size(); ++i) out[i] = v[mapping_[i]];
  return Vec0(std::move(out));
}

// --- membership -------------------------------------------------------------

namespace {

class MemberSolver {
 public:
  MemberSolver(const std::vector<Vec0>& periods) {
    for (std::size_t i = 0; i < periods.size(); ++i) {
      if (!periods[i].is_zero()) {
        periods_.push_back(&periods[i]);
        index_.push_back(i);
      }
    }
    alpha_.assign(periods.size(), Int(0));
  }

  bool solve(std::vector<Int>& residual) { return go(0, residual); }
  const std::vector<Int>& alpha() const { return alpha_; }

 private:
  bool go(std::size_t k, std::vector<Int>& residual) {
    if (k == periods_.size()) {
      return std::all_of(residual.begin(), residual.end(), [](const Int& x) { return x == 0; });
    }
    auto key = std::make_pair(k, residual);
    if (failed_.count(key)) return false;
    const Vec0& p = *periods_[k];
    Int cap = -1;
    for (std::size_t j = 0; j < p.size(); ++j) {
      if (p[j] == 0) continue;
      Int q = residual[j] / p[j];
      if (cap < 0 || q < cap) cap = q;
    }
    // Largest multiple first; the residual is restored on the way out.
    for (Int a = cap; a >= 0; --a) {
      std::vector<Int> next = residual;
      for (std::size_t j = 0; j < p.size(); ++j) next[j] -= a * p[j];
      if (go(k + 1, next)) {
        alpha_[index_[k]] = a;
        return true;
      }
    }
    failed_.insert(std::move(key));
    return false;
  }

  std::vector<const Vec0*> periods_;
  std::vector<std::size_t> index_;
  std::vector<Int> alpha_;
  std::set<std::pair<std::size_t, std::vector<Int>>> failed_;
};

}  // namespace

std::optional<std::vector<Int>> solve_member(const Vec0& v, const LinearSet& l) {
  if (v.size() != l.dim_ambient()) throw DimensionMismatch(l.dim_ambient(), v.size());
  std::vector<Int> residual(v.size());
  for (std::size_t j = 0; j < v.size(); ++j) {
    residual[j] = v[j] - l.constant()[j];
    if (residual[j] < 0) return std::nullopt;
  }
  MemberSolver solver(l.periods());
  if (!solver.solve(residual)) return std::nullopt;
  return solver.alpha();
}

std::optional<MembershipCertificate> member_certificate(const Vec0& v, const SemilinearSet& s) {
  if (v.size() != s.dim_ambient()) throw DimensionMismatch(s.dim_ambient(), v.size());
  for (std::size_t i = 0; i < s.components().size(); ++i) {
    if (auto alpha = solve_member(v, s.components()[i])) {
      return MembershipCertificate{i, std::move(*alpha)};
    }
  }
  return std::nullopt;
}

bool member(const Vec0& v, const LinearSet& l) { return solve_member(v, l).has_value(); }

bool member(const Vec0& v, const SemilinearSet& s) {
  return member_certificate(v, s).has_value();
}

bool verify_certificate(const Vec0& v, const SemilinearSet& s, const MembershipCertificate& cert) {
  if (cert.component >= s.components().size()) return false;
  const auto& l = s.components()[cert.component];
  if (cert.alpha.size() != l.periods().size() || v.size() != l.dim_ambient()) return false;
  std::vector<Int> acc = l.constant().entries();
  for (std::size_t i = 0; i < cert.alpha.size(); ++i) {
    if (cert.alpha[i] < 0) return false;
    for (std::size_t j = 0; j < acc.size(); ++j) acc[j] += cert.alpha[i] * l.periods()[i][j];
  }
  return acc == v.entries();
}

// --- linear structure -------------------------------------------------------

std::size_t dimension(const LinearSet& l) {
  std::vector<QVec> rows;
  for (const auto& p : l.periods()) rows.push_back(p.to_q());
  return rank(rows, l.dim_ambient());
}

AffineSpace rational_hull(const LinearSet& l) {
  std::vector<QVec> rows;
  for (const auto& p : l.periods()) rows.push_back(p.to_q());
  AffineSpace out{l.constant().to_q(), {}};
  for (auto i : independent_subset(rows, l.dim_ambient())) out.basis.push_back(rows[i]);
  return out;
}

LinearSet zero_shadow(const LinearSet& l) {
  return LinearSet(Vec0::zero(l.dim_ambient()), l.periods());
}

LinearSet apply_permutation(const Permutation& tau, const LinearSet& l) {
  if (tau.size() != l.dim_ambient()) throw DimensionMismatch(l.dim_ambient(), tau.size());
  std::vector<Vec0> periods;
  for (const auto& p : l.periods()) periods.push_back(tau.apply(p));
  return LinearSet(tau.apply(l.constant()), std::move(periods));
}

SemilinearSet apply_permutation(const Permutation& tau, const SemilinearSet& s) {
  if (tau.size() != s.dim_ambient()) throw DimensionMismatch(s.dim_ambient(), tau.size());
  std::vector<LinearSet> comps;
  for (const auto& l : s.components()) comps.push_back(apply_permutation(tau, l));
  return SemilinearSet(s.dim_ambient(), std::move(comps));
}

SemilinearSet set_union(const SemilinearSet& a, const SemilinearSet& b) {
  if (a.dim_ambient() != b.dim_ambient()) throw DimensionMismatch(a.dim_ambient(), b.dim_ambient());
  std::vector<LinearSet> comps;
  std::set<LinearSet> seen;
  for (const auto* s : {&a, &b}) {
    for (const auto& l : s->components()) {
      auto n = l.normalized();
      if (seen.insert(n).second) comps.push_back(n);
    }
  }
  return SemilinearSet(a.dim_ambient(), std::move(comps));
}

// --- BoxGrid ----------------------------------------------------------------

BoxGrid::BoxGrid(std::size_t r, unsigned bound) : r_(r), bound_(bound), stride_(r) {
  std::size_t cells = 1;
  for (std::size_t i = 0; i < r; ++i) {
    stride_[i] = cells;
    cells *= bound + 1;
  }
  bits_.assign(cells, 0);
}

std::optional<std::size_t> BoxGrid::index_of(const std::vector<std::int64_t>& v) const {
  std::size_t idx = 0;
  for (std::size_t i = 0; i < r_; ++i) {
    if (v[i] < 0 || v[i] > static_cast<std::int64_t>(bound_)) return std::nullopt;
    idx += static_cast<std::size_t>(v[i]) * stride_[i];
  }
  return idx;
}

bool BoxGrid::at(const Vec0& v) const {
  if (v.size() != r_) throw DimensionMismatch(r_, v.size());
  std::vector<std::int64_t> c(r_);
  for (std::size_t i = 0; i < r_; ++i) {
    if (v[i] > bound_) return false;
    c[i] = v[i].get_si();
  }
  return bits_[*index_of(c)] != 0;
}

Vec0 BoxGrid::point(std::size_t idx) const {
  std::vector<Int> e(r_);
  for (std::size_t i = 0; i < r_; ++i) {
    e[i] = static_cast<unsigned long>(idx % (bound_ + 1));
    idx /= bound_ + 1;
  }
  return Vec0(std::move(e));
}

void BoxGrid::add(const LinearSet& l) {
  if (l.dim_ambient() != r_) throw DimensionMismatch(r_, l.dim_ambient());
  std::vector<std::int64_t> c(r_);
  for (std::size_t i = 0; i < r_; ++i) {
    if (l.constant()[i] > bound_) return;
    c[i] = l.constant()[i].get_si();
  }
  std::vector<unsigned char> reach(bits_.size(), 0);
  reach[*index_of(c)] = 1;
  for (const auto& p : l.periods()) {
    if (p.is_zero()) continue;
    bool fits = true;
    std::vector<std::int64_t> pv(r_);
    std::size_t offset = 0;
    for (std::size_t i = 0; i < r_; ++i) {
      if (p[i] > bound_) {
        fits = false;
        break;
      }
      pv[i] = p[i].get_si();
      offset += static_cast<std::size_t>(pv[i]) * stride_[i];
    }
    if (!fits) continue;
    // Increasing index order lets one sweep add any multiple of p.
    std::vector<std::int64_t> coord(r_, 0);
    for (std::size_t idx = 0; idx < reach.size(); ++idx) {
      if (reach[idx]) {
        bool inside = true;
        for (std::size_t i = 0; i < r_; ++i) {
          if (coord[i] + pv[i] > static_cast<std::int64_t>(bound_)) {
            inside = false;
            break;
          }
        }
        if (inside) reach[idx + offset] = 1;
      }
      for (std::size_t i = 0; i < r_; ++i) {
        if (++coord[i] <= static_cast<std::int64_t>(bound_)) break;
        coord[i] = 0;
      }
    }
  }
  for (std::size_t i = 0; i < bits_.size(); ++i) bits_[i] |= reach[i];
}

BoxGrid& BoxGrid::operator&=(const BoxGrid& other) {
  if (other.r_ != r_ || other.bound_ != bound_) throw DimensionMismatch(r_, other.r_);
  for (std::size_t i = 0; i < bits_.size(); ++i) bits_[i] &= other.bits_[i];
  return *this;
}

BoxGrid& BoxGrid::operator|=(const BoxGrid& other) {
  if (other.r_ != r_ || other.bound_ != bound_) throw DimensionMismatch(r_, other.r_);
  for (std::size_t i = 0; i < bits_.size(); ++i) bits_[i] |= other.bits_[i];
  return *this;
}

std::size_t BoxGrid::count() const {
  return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), 1));
}

BoxGrid BoxGrid::of(const SemilinearSet& s, unsigned bound) {
  BoxGrid g(s.dim_ambient(), bound);
  for (const auto& l : s.components()) g.add(l);
  return g;
}

BoxGrid BoxGrid::from_predicate(std::size_t r, unsigned bound,
                                const std::function<bool(const Vec0&)>& pred) {
  BoxGrid g(r, bound);
  for (std::size_t idx = 0; idx < g.cells(); ++idx)
    if (pred(g.point(idx))) g.bits_[idx] = 1;
  return g;
}

// --- text format ------------------------------------------------------------

namespace {

std::vector<std::string> split_ws(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  for (std::string tok; in >> tok;) out.push_back(tok);
  return out;
}

Vec0 parse_ints(const std::vector<std::string>& toks, std::size_t line_no) {
  std::vector<Int> e;
  for (const auto& t : toks) {
    try {
      e.push_back(parse_int(t));
    } catch (const std::invalid_argument&) {
      throw ParseError(line_no, "expected a decimal integer, got '" + t + "'");
    }
    if (e.back() < 0) throw ParseError(line_no, "negative entry '" + t + "'");
  }
  if (e.empty()) throw ParseError(line_no, "empty vector");
  return Vec0(std::move(e));
}

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

}  // namespace

Vec0 parse_vector_line(const std::string& line, std::size_t line_no) {
  auto t = trim(line);
  if (t.rfind("v:", 0) != 0) throw ParseError(line_no, "expected 'v:'");
  return parse_ints(split_ws(t.substr(2)), line_no);
}

LinearSet parse_linear_line(const std::string& line, std::size_t line_no) {
  auto t = trim(line);
  if (t.rfind("lin", 0) != 0) throw ParseError(line_no, "expected 'lin'");
  t = trim(t.substr(3));
  if (t.rfind("c=", 0) != 0) throw ParseError(line_no, "expected 'c='");
  t = t.substr(2);
  auto bar = t.find('|');
  Vec0 c = parse_ints(split_ws(t.substr(0, bar)), line_no);
  std::vector<Vec0> periods;
  if (bar != std::string::npos) {
    std::string rest = t.substr(bar + 1);
    std::size_t pos = 0;
    while (pos <= rest.size()) {
      auto semi = rest.find(';', pos);
      std::string part = trim(rest.substr(pos, semi == std::string::npos ? std::string::npos : semi - pos));
      if (!part.empty()) {
        if (part.rfind("p=", 0) != 0) throw ParseError(line_no, "expected 'p='");
        Vec0 p = parse_ints(split_ws(part.substr(2)), line_no);
        if (p.size() != c.size()) {
          throw ParseError(line_no, "period has " + std::to_string(p.size()) +
                                        " entries, constant has " + std::to_string(c.size()));
        }
        periods.push_back(std::move(p));
      }
      if (semi == std::string::npos) break;
      pos = semi + 1;
    }
  }
  return LinearSet(std::move(c), std::move(periods));
}

SemilinearSet parse_semilinear(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::size_t line_no = 0;
  std::vector<LinearSet> comps;
  bool in_block = false, saw_block = false, closed = false;
  std::size_t r = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    if (closed) throw ParseError(line_no, "content after 'end'");
    if (t == "slset") {
      if (in_block || saw_block) throw ParseError(line_no, "nested 'slset'");
      in_block = saw_block = true;
      continue;
    }
    if (t.rfind("slset", 0) == 0) {
      // Optional explicit dimension: `slset r=4`, needed for empty sets.
      auto rest = trim(t.substr(5));
      if (rest.rfind("r=", 0) != 0) throw ParseError(line_no, "unexpected '" + rest + "'");
      try {
        r = std::stoul(rest.substr(2));
      } catch (const std::exception&) {
        throw ParseError(line_no, "bad dimension");
      }
      in_block = saw_block = true;
      continue;
    }
    if (t == "end") {
      if (!in_block) throw ParseError(line_no, "'end' without 'slset'");
      in_block = false;
      closed = true;
      continue;
    }
    if (!in_block && saw_block) throw ParseError(line_no, "content outside 'slset' block");
    auto l = parse_linear_line(t, line_no);
    if (r == 0) r = l.dim_ambient();
    if (l.dim_ambient() != r) {
      throw ParseError(line_no, "dimension " + std::to_string(l.dim_ambient()) + " differs from " +
                                    std::to_string(r));
    }
    comps.push_back(std::move(l));
    if (!saw_block && comps.size() > 1) throw ParseError(line_no, "multiple 'lin' lines need an 'slset' block");
  }
  if (in_block) throw ParseError(line_no, "missing 'end'");
  if (r == 0) throw ParseError(line_no, "no dimension: empty input");
  return SemilinearSet(r, std::move(comps));
}

std::string format_vector(const Vec0& v) {
  std::string s = "v:";
  for (const auto& e : v.entries()) s += " " + e.get_str();
  return s;
}

std::string format_linear(const LinearSet& l) {
  std::string s = "lin c=";
  for (const auto& e : l.constant().entries()) s += " " + e.get_str();
  if (!l.periods().empty()) {
    s += " |";
    for (std::size_t i = 0; i < l.periods().size(); ++i) {
      s += i ? " ; p=" : " p=";
      for (const auto& e : l.periods()[i].entries()) s += " " + e.get_str();
    }
  }
  return s;
}

std::string format_semilinear(const SemilinearSet& s) {
  std::string out = "slset r=" + std::to_string(s.dim_ambient()) + "\n";
  for (const auto& l : s.components()) out += format_linear(l) + "\n";
  return out + "end\n";
}

}  // namespace polycf
