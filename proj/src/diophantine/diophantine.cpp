#include "polycf/diophantine.hpp"

#include <algorithm>
#include <cstdint>
#include <set>
#include <sstream>

#include "polycf/error.hpp"

namespace polycf {

HomSystem::HomSystem(std::size_t c, std::vector<std::vector<Int>> r) : cols(c), rows(std::move(r)) {
  for (const auto& row : rows)
    if (row.size() != cols) throw DimensionMismatch(cols, row.size());
}

namespace {

using I64 = std::int64_t;
using IVec = std::vector<I64>;

I64 checked(const Int& v) {
  auto x = to_int64(v);
  if (!x) throw SearchLimitExceeded("coefficient " + v.get_str() + " exceeds 64-bit search range");
  return *x;
}

I64 add_ck(I64 a, I64 b) {
  I64 out;
  if (__builtin_add_overflow(a, b, &out)) throw SearchLimitExceeded("64-bit overflow in completion search");
  return out;
}

I64 mul_ck(I64 a, I64 b) {
  I64 out;
  if (__builtin_mul_overflow(a, b, &out)) throw SearchLimitExceeded("64-bit overflow in completion search");
  return out;
}

bool geq(const IVec& a, const IVec& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] < b[i]) return false;
  return true;
}

// Completion search over the homogenized system [A | -rhs] (x, z) = 0 with
// z <= 1. Solutions with z = 0 form the Hilbert basis; those with z = 1 are
// the minimal inhomogeneous solutions.
SolutionBasis completion_search(const HomSystem& sys, const std::vector<Int>& rhs,
                                const SearchConfig& cfg) {
  const std::size_t m = sys.num_rows();
  if (rhs.size() != m) throw DimensionMismatch(m, rhs.size());
  const std::size_t n = sys.cols + 1;
  const std::size_t z = sys.cols;
  std::vector<IVec> col(n, IVec(m));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < sys.cols; ++j) col[j][i] = checked(sys.rows[i][j]);
    col[z][i] = -checked(rhs[i]);
  }

  struct Node {
    IVec x;
    IVec ax;
    bool operator<(const Node& o) const { return x < o.x; }
    bool operator==(const Node& o) const { return x == o.x; }
  };

  std::vector<IVec> found;
  std::vector<Node> level;
  for (std::size_t j = 0; j < n; ++j) {
    IVec x(n, 0);
    x[j] = 1;
    level.push_back(Node{std::move(x), col[j]});
  }

  auto is_zero = [](const IVec& v) { return std::all_of(v.begin(), v.end(), [](I64 e) { return e == 0; }); };

  while (!level.empty()) {
    for (const auto& node : level)
      if (is_zero(node.ax)) found.push_back(node.x);
    std::vector<Node> next;
    for (const auto& node : level) {
      if (is_zero(node.ax)) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (j == z && node.x[z] == 1) continue;
        I64 d = 0;
        for (std::size_t i = 0; i < m; ++i) d = add_ck(d, mul_ck(node.ax[i], col[j][i]));
        if (d >= 0) continue;
        IVec y = node.x;
        y[j] = add_ck(y[j], 1);
        bool dominated = false;
        for (const auto& s : found) {
          if (geq(y, s)) {
            dominated = true;
            break;
          }
        }
        if (dominated) continue;
        IVec ay(m);
        for (std::size_t i = 0; i < m; ++i) ay[i] = add_ck(node.ax[i], col[j][i]);
        next.push_back(Node{std::move(y), std::move(ay)});
      }
    }
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    if (next.size() > cfg.frontier_cap) {
      throw SearchLimitExceeded("Hilbert basis frontier reached " + std::to_string(next.size()) +
                                " nodes (cap " + std::to_string(cfg.frontier_cap) + ")");
    }
    level = std::move(next);
  }

  SolutionBasis out;
  for (const auto& s : found) {
    std::vector<Int> e;
    e.reserve(sys.cols);
    for (std::size_t j = 0; j < sys.cols; ++j) e.emplace_back(static_cast<long>(s[j]));
    (s[z] == 0 ? out.periods : out.constants).push_back(Vec0(std::move(e)));
  }
  std::sort(out.periods.begin(), out.periods.end());
  std::sort(out.constants.begin(), out.constants.end());
  return out;
}

}  // namespace

SolutionBasis solve_system(const HomSystem& sys, const std::vector<Int>& rhs, const SearchConfig& cfg) {
  return completion_search(sys, rhs, cfg);
}

std::vector<Vec0> hilbert_basis(const HomSystem& sys, const SearchConfig& cfg) {
  return completion_search(sys, std::vector<Int>(sys.num_rows(), Int(0)), cfg).periods;
}

std::vector<Vec0> minimal_inhom_solutions(const HomSystem& sys, const std::vector<Int>& rhs,
                                          const SearchConfig& cfg) {
  return completion_search(sys, rhs, cfg).constants;
}

SemilinearSet intersect_linear(const std::vector<LinearSet>& input, const SearchConfig& cfg) {
  if (input.empty()) throw PreconditionViolation("intersection of no sets");
  const std::size_t r = input.front().dim_ambient();
  std::vector<LinearSet> sets;
  for (const auto& l : input) {
    if (l.dim_ambient() != r) throw DimensionMismatch(r, l.dim_ambient());
    sets.push_back(l.normalized());
  }
  if (sets.size() == 1) return SemilinearSet(sets.front());

  // Unknowns: alpha blocks of every set. Equations P_1 a_1 - P_i a_i = c_i - c_1.
  std::vector<std::size_t> offset(sets.size() + 1, 0);
  for (std::size_t i = 0; i < sets.size(); ++i) offset[i + 1] = offset[i] + sets[i].periods().size();
  const std::size_t cols = offset.back();
  std::vector<std::vector<Int>> rows;
  std::vector<Int> rhs;
  const auto& first = sets.front();
  for (std::size_t i = 1; i < sets.size(); ++i) {
    for (std::size_t j = 0; j < r; ++j) {
      std::vector<Int> row(cols, Int(0));
      for (std::size_t q = 0; q < first.periods().size(); ++q) row[offset[0] + q] = first.periods()[q][j];
      for (std::size_t q = 0; q < sets[i].periods().size(); ++q)
        row[offset[i] + q] = -sets[i].periods()[q][j];
      rows.push_back(std::move(row));
      rhs.push_back(sets[i].constant()[j] - first.constant()[j]);
    }
  }
  auto basis = completion_search(HomSystem(cols, std::move(rows)), rhs, cfg);

  auto image = [&](const Vec0& alpha) {
    std::vector<Int> v(r, Int(0));
    for (std::size_t q = 0; q < first.periods().size(); ++q) {
      if (alpha[q] == 0) continue;
      for (std::size_t j = 0; j < r; ++j) v[j] += alpha[q] * first.periods()[q][j];
    }
    return Vec0(std::move(v));
  };

  std::set<Vec0> periods;
  for (const auto& h : basis.periods) {
    Vec0 p = image(h);
    if (!p.is_zero()) periods.insert(std::move(p));
  }
  std::set<Vec0> constants;
  for (const auto& c : basis.constants) constants.insert(first.constant() + image(c));
  std::vector<Vec0> pv(periods.begin(), periods.end());
  std::vector<LinearSet> comps;
  for (const auto& c : constants) comps.emplace_back(c, pv);
  return SemilinearSet(r, std::move(comps));
}

SemilinearSet intersect(const std::vector<SemilinearSet>& sets, const SearchConfig& cfg) {
  if (sets.empty()) throw PreconditionViolation("intersection of no sets");
  const std::size_t r = sets.front().dim_ambient();
  for (const auto& s : sets)
    if (s.dim_ambient() != r) throw DimensionMismatch(r, s.dim_ambient());
  SemilinearSet acc = sets.front();
  for (std::size_t i = 1; i < sets.size(); ++i) {
    SemilinearSet next(r);
    for (const auto& a : acc.components()) {
      for (const auto& b : sets[i].components()) {
        next = set_union(next, intersect_linear({a, b}, cfg));
      }
    }
    acc = std::move(next);
  }
  return acc;
}

namespace {

std::size_t rational_intersection_dim(const std::vector<LinearSet>& sets, std::size_t r) {
  // dim of the intersection of spans = r - rank of the stacked complements.
  std::vector<QVec> perps;
  for (const auto& l : sets) {
    std::vector<QVec> rows;
    for (const auto& p : l.periods()) rows.push_back(p.to_q());
    auto ns = nullspace(rows, r);
    perps.insert(perps.end(), ns.begin(), ns.end());
  }
  return r - rank(perps, r);
}

bool same_zero_constant_set(const LinearSet& big, const LinearSet& small) {
  for (const auto& p : big.periods())
    if (!member(p, small)) return false;
  return true;
}

}  // namespace

RemovableReport find_removable_period(const std::vector<LinearSet>& input, const SearchConfig& cfg) {
  if (input.empty()) throw PreconditionViolation("no sets given");
  const std::size_t r = input.front().dim_ambient();
  std::vector<LinearSet> sets;
  for (const auto& l : input) {
    if (l.dim_ambient() != r) throw DimensionMismatch(r, l.dim_ambient());
    if (!l.constant().is_zero()) throw PreconditionViolation("find_removable_period needs zero constants");
    sets.push_back(l.normalized());
  }
  auto full = intersect_linear(sets, cfg);
  const LinearSet& s = full.components().front();
  RemovableReport rep;
  rep.dim_intersection = dimension(s);
  rep.dim_rational = rational_intersection_dim(sets, r);
  for (std::size_t i = 0; i < sets.size() && !rep.removable; ++i) {
    for (std::size_t j = 0; j < sets[i].periods().size(); ++j) {
      auto trial = sets;
      auto ps = trial[i].periods();
      Vec0 removed = ps[j];
      ps.erase(ps.begin() + static_cast<std::ptrdiff_t>(j));
      trial[i] = LinearSet(trial[i].constant(), std::move(ps));
      auto reduced = intersect_linear(trial, cfg);
      if (!same_zero_constant_set(s, reduced.components().front())) continue;
      const auto& orig = input[i].periods();
      auto at = std::find(orig.begin(), orig.end(), removed);
      rep.removable = RemovablePeriod{i, static_cast<std::size_t>(at - orig.begin()), removed};
      break;
    }
  }
  return rep;
}

// --- text format ------------------------------------------------------------

ParsedSystem parse_system(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::size_t line_no = 0;
  std::optional<std::size_t> nrows, ncols;
  ParsedSystem out;
  std::vector<std::vector<Int>> rows;
  auto ints = [&](std::istringstream& ls) {
    std::vector<Int> v;
    for (std::string tok; ls >> tok;) {
      try {
        v.push_back(parse_int(tok));
      } catch (const std::invalid_argument&) {
        throw ParseError(line_no, "expected an integer, got '" + tok + "'");
      }
    }
    return v;
  };
  while (std::getline(in, line)) {
    ++line_no;
    auto b = line.find_first_not_of(" \t\r");
    if (b == std::string::npos || line[b] == '#') continue;
    std::istringstream ls(line.substr(b));
    if (!nrows) {
      std::string head, a, c;
      ls >> head >> a >> c;
      if (head != "sys" || a.rfind("rows=", 0) != 0 || c.rfind("cols=", 0) != 0)
        throw ParseError(line_no, "expected 'sys rows=R cols=C'");
      try {
        nrows = std::stoul(a.substr(5));
        ncols = std::stoul(c.substr(5));
      } catch (const std::exception&) {
        throw ParseError(line_no, "bad row or column count");
      }
      continue;
    }
    if (line.compare(b, 4, "rhs:") == 0) {
      std::istringstream rs(line.substr(b + 4));
      auto v = ints(rs);
      if (v.size() != *nrows) throw ParseError(line_no, "rhs needs " + std::to_string(*nrows) + " entries");
      out.rhs = std::move(v);
      continue;
    }
    if (rows.size() == *nrows) throw ParseError(line_no, "too many rows");
    auto v = ints(ls);
    if (v.size() != *ncols) throw ParseError(line_no, "row needs " + std::to_string(*ncols) + " entries");
    rows.push_back(std::move(v));
  }
  if (!nrows) throw ParseError(line_no, "missing 'sys' header");
  if (rows.size() != *nrows) throw ParseError(line_no, "expected " + std::to_string(*nrows) + " rows");
  out.sys = HomSystem(*ncols, std::move(rows));
  return out;
}

std::string format_system(const HomSystem& sys) {
  std::string s = "sys rows=" + std::to_string(sys.num_rows()) + " cols=" + std::to_string(sys.cols) + "\n";
  for (const auto& row : sys.rows) {
    for (std::size_t j = 0; j < row.size(); ++j) s += (j ? " " : "") + row[j].get_str();
    s += "\n";
  }
  return s;
}

}  // namespace polycf
