#include "polycf/stratify.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "polycf/union_find.hpp"

namespace polycf {

namespace {

std::vector<std::size_t> support(const Vec0& v) {
  std::vector<std::size_t> s;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] != 0) s.push_back(i);
  return s;
}

}  // namespace

std::string StratificationCheck::describe(const std::vector<Vec0>& periods) const {
  switch (kind) {
    case Kind::Ok:
      return "stratified";
    case Kind::TooManyNonzero:
      return "period " + to_string(periods.at(first)) + " has " +
             std::to_string(periods.at(first).support_size()) + " nonzero entries";
    case Kind::Crossing:
      return "crossing pair " + to_string(periods.at(first)) + " on (" + std::to_string(coords[0] + 1) +
             "," + std::to_string(coords[2] + 1) + ") and " + to_string(periods.at(second)) + " on (" +
             std::to_string(coords[1] + 1) + "," + std::to_string(coords[3] + 1) + ")";
  }
  return {};
}

StratificationCheck check_stratified(const std::vector<Vec0>& periods) {
  StratificationCheck out;
  std::vector<std::pair<std::size_t, std::size_t>> edges(periods.size());
  std::vector<bool> is_edge(periods.size(), false);
  for (std::size_t i = 0; i < periods.size(); ++i) {
    auto s = support(periods[i]);
    if (s.size() > 2) {
      out.kind = StratificationCheck::Kind::TooManyNonzero;
      out.first = i;
      return out;
    }
    if (s.size() == 2) {
      edges[i] = {s[0], s[1]};
      is_edge[i] = true;
    }
  }
  for (std::size_t a = 0; a < periods.size(); ++a) {
    if (!is_edge[a]) continue;
    for (std::size_t b = 0; b < periods.size(); ++b) {
      if (!is_edge[b] || a == b) continue;
      auto [i, k] = edges[a];
      auto [j, l] = edges[b];
      if (i < j && j < k && k < l) {
        out.kind = StratificationCheck::Kind::Crossing;
        out.first = a;
        out.second = b;
        out.coords = {i, j, k, l};
        return out;
      }
    }
  }
  return out;
}

bool is_stratified_period_set(const std::vector<Vec0>& periods) { return check_stratified(periods).ok(); }

// --- partitions -------------------------------------------------------------

Partition::Partition(std::size_t r, std::vector<std::vector<std::size_t>> classes)
    : classes_(std::move(classes)), class_of_(r, r) {
  for (auto& c : classes_) {
    if (c.empty()) throw PreconditionViolation("empty class in partition");
    std::sort(c.begin(), c.end());
  }
  std::sort(classes_.begin(), classes_.end());
  for (std::size_t ci = 0; ci < classes_.size(); ++ci) {
    for (auto i : classes_[ci]) {
      if (i >= r || class_of_[i] != r) throw PreconditionViolation("classes do not partition the index set");
      class_of_[i] = ci;
    }
  }
  for (auto c : class_of_)
    if (c == r) throw PreconditionViolation("classes do not cover the index set");
}

std::string to_string(const Partition& p) {
  std::string s = "{";
  for (std::size_t c = 0; c < p.classes().size(); ++c) {
    if (c) s += ",";
    s += "{";
    for (std::size_t i = 0; i < p.classes()[c].size(); ++i) {
      if (i) s += ",";
      s += std::to_string(p.classes()[c][i] + 1);
    }
    s += "}";
  }
  return s + "}";
}

Partition partition_PiL(const LinearSet& l) {
  auto check = check_stratified(l.periods());
  if (!check.ok()) throw NotStratified("period set is not stratified: " + check.describe(l.periods()));
  const std::size_t r = l.dim_ambient();
  UnionFind uf(r);
  for (const auto& p : l.periods()) {
    auto s = support(p);
    if (s.size() == 2) uf.unite(s[0], s[1]);
  }
  std::map<std::size_t, std::vector<std::size_t>> groups;
  for (std::size_t i = 0; i < r; ++i) groups[uf.find(i)].push_back(i);
  std::vector<std::vector<std::size_t>> classes;
  for (auto& [root, members] : groups) classes.push_back(std::move(members));
  return Partition(r, std::move(classes));
}

bool check_no_crossing(const Partition& part, std::size_t m1, std::size_t n1, std::size_t m2, std::size_t n2) {
  if (!(m1 < n1 && n1 < m2 && m2 < n2) || n2 >= part.dim())
    throw PreconditionViolation("need m1 < n1 < m2 < n2 inside the index range");
  if (part.same(m1, n1) || part.same(m2, n2))
    throw PreconditionViolation("need m1 !~ n1 and m2 !~ n2");
  return !(part.same(m1, m2) && part.same(n1, n2));
}

std::vector<std::array<std::size_t, 4>> crossing_violations(const Partition& part) {
  std::vector<std::array<std::size_t, 4>> bad;
  const std::size_t r = part.dim();
  for (std::size_t a = 0; a < r; ++a)
    for (std::size_t b = a + 1; b < r; ++b) {
      if (part.same(a, b)) continue;
      for (std::size_t c = b + 1; c < r; ++c)
        for (std::size_t d = c + 1; d < r; ++d) {
          if (part.same(c, d)) continue;
          if (!check_no_crossing(part, a, b, c, d)) bad.push_back({a, b, c, d});
        }
    }
  return bad;
}

std::vector<QVec> perp_block_basis(const LinearSet& l) {
  if (!l.constant().is_zero()) throw PreconditionViolation("perp_block_basis needs a zero constant");
  auto part = partition_PiL(l);
  const std::size_t r = l.dim_ambient();
  std::vector<QVec> out;
  for (const auto& cls : part.classes()) {
    std::vector<QVec> rows;
    for (const auto& p : l.periods()) {
      QVec row;
      for (auto i : cls) row.emplace_back(p[i]);
      rows.push_back(std::move(row));
    }
    for (const auto& v : nullspace(rows, cls.size())) {
      QVec full(r);
      for (std::size_t t = 0; t < cls.size(); ++t) full[cls[t]] = v[t];
      out.push_back(primitive(full));
    }
  }
  const std::size_t expected = r - dimension(l);
  if (out.size() != expected) {
    throw BlockFormViolation("block pieces give " + std::to_string(out.size()) + " vectors, complement has dimension " +
                             std::to_string(expected));
  }
  for (const auto& v : out)
    for (const auto& p : l.periods())
      if (dot(v, p.to_q()) != 0) throw BlockFormViolation("block vector is not orthogonal to a period");
  if (rank(out, r) != expected) throw BlockFormViolation("block vectors are dependent");
  return out;
}

// --- S(n,k) families --------------------------------------------------------

bool SnkFamily::predicate(const Vec0& v) const {
  if (v.size() != dim_ambient()) throw DimensionMismatch(dim_ambient(), v.size());
  const std::size_t nk = n * k;
  for (std::size_t i = 0; i < nk; ++i)
    if (v[i] != v[i + nk]) return false;
  for (std::size_t j = 0; j < k; ++j)
    for (std::size_t l = 1; l < n; ++l)
      if (v[n * j] != v[n * j + l]) return false;
  return true;
}

SnkFamily build_Snk(std::size_t n, std::size_t k) {
  if (n == 0 || k == 0) throw PreconditionViolation("n and k must be at least 1");
  const std::size_t r = 2 * n * k;
  std::vector<Vec0> periods;
  for (std::size_t j = 0; j < k; ++j) {
    std::vector<Int> u(r, Int(0));
    for (std::size_t l = 0; l < n; ++l) {
      u[n * j + l] = 1;
      u[n * (k + j) + l] = 1;
    }
    periods.emplace_back(std::move(u));
  }
  return SnkFamily{n, k, LinearSet(Vec0::zero(r), std::move(periods))};
}

std::vector<LinearSet> build_Sk_cover(std::size_t k) {
  if (k == 0) throw PreconditionViolation("k must be at least 1");
  const std::size_t r = 2 * k;
  std::vector<LinearSet> out;
  for (std::size_t i = 0; i < k; ++i) {
    std::vector<Vec0> periods{Vec0::unit(r, i) + Vec0::unit(r, k + i)};
    for (std::size_t j = 0; j < r; ++j)
      if (j != i && j != k + i) periods.push_back(Vec0::unit(r, j));
    out.emplace_back(Vec0::zero(r), std::move(periods));
  }
  return out;
}

std::vector<std::string> lnk_alphabet(std::size_t n, std::size_t k) {
  std::vector<std::string> out;
  for (std::size_t i = 1; i <= 2 * n * k; ++i) out.push_back("a" + std::to_string(i));
  return out;
}

bool membership_Lnk(const std::vector<std::string>& word, std::size_t n, std::size_t k) {
  const auto alphabet = lnk_alphabet(n, k);
  std::vector<Int> exps(alphabet.size(), Int(0));
  std::size_t last = 0;
  for (const auto& sym : word) {
    auto it = std::find(alphabet.begin(), alphabet.end(), sym);
    if (it == alphabet.end()) return false;
    auto idx = static_cast<std::size_t>(it - alphabet.begin());
    if (idx < last) return false;
    last = idx;
    exps[idx] += 1;
  }
  return build_Snk(n, k).predicate(Vec0(std::move(exps)));
}

// --- bounded stratified presentation search --------------------------------

namespace {

std::vector<Vec0> irreducible(std::vector<Vec0> gens) {
  std::set<Vec0> uniq;
  for (auto& g : gens)
    if (!g.is_zero()) uniq.insert(g);
  gens.assign(uniq.begin(), uniq.end());
  // Larger vectors first so that redundant ones are dropped before their parts.
  std::sort(gens.begin(), gens.end(), [](const Vec0& a, const Vec0& b) {
    if (a.sigma() != b.sigma()) return a.sigma() > b.sigma();
    return a < b;
  });
  for (std::size_t i = 0; i < gens.size();) {
    std::vector<Vec0> rest = gens;
    rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(i));
    if (member(gens[i], LinearSet(Vec0::zero(gens[i].size()), rest))) {
      gens = std::move(rest);
    } else {
      ++i;
    }
  }
  std::sort(gens.begin(), gens.end());
  return gens;
}

}  // namespace

StratifiedSearchResult search_stratified_presentation(const LinearSet& l) {
  StratifiedSearchResult out;
  auto gens = irreducible(l.periods());
  if (is_stratified_period_set(gens)) {
    out.outcome = StratifiedSearchResult::Outcome::Found;
    out.presentation = LinearSet(l.constant(), gens);
    out.note = "irreducible generators are stratified";
    return out;
  }
  // Any period set for L contains the irreducible generators, so no single
  // linear presentation is stratified. Unions are not searched.
  out.note = "no stratified linear presentation (" + check_stratified(gens).describe(gens) +
             "); unions of linear sets not searched";
  return out;
}

}  // namespace polycf
