#include "polycf/check/oracles.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <optional>
#include <set>
#include <tuple>

#include "polycf/stratify.hpp"

namespace polycf::check {

std::size_t max_push(const Npda& a) {
  std::size_t m = 0;
  for (const auto& t : a.transitions()) m = std::max(m, t.push.size());
  return m;
}

bool explore_accepts(const Npda& a, const Word& w, std::size_t depth_cap) {
  std::vector<std::size_t> in;
  for (const auto& s : w) in.push_back(a.inputs().id(s));
  // stack stored bottom first
  using Config = std::tuple<std::size_t, std::size_t, std::vector<std::size_t>>;
  std::set<Config> seen;
  std::deque<Config> queue;
  Config init{a.start_state(), 0, {a.start_stack()}};
  seen.insert(init);
  queue.push_back(init);
  while (!queue.empty()) {
    auto [q, pos, st] = queue.front();
    queue.pop_front();
    if (pos == in.size() && st.empty() && a.accepting(q)) return true;
    if (st.empty()) continue;
    for (const auto& t : a.transitions()) {
      if (t.from != q || t.top != st.back()) continue;
      std::size_t npos = pos;
      if (t.input != Npda::kEps) {
        if (pos == in.size() || in[pos] != t.input) continue;
        ++npos;
      }
      auto ns = st;
      ns.pop_back();
      for (auto it = t.push.rbegin(); it != t.push.rend(); ++it) ns.push_back(*it);
      if (ns.size() > depth_cap) continue;
      Config c{t.to, npos, std::move(ns)};
      if (seen.insert(c).second) queue.push_back(std::move(c));
    }
  }
  return false;
}

bool earley_accepts(const Cfg& g, const std::vector<std::size_t>& w) {
  struct Item {
    std::size_t prod, dot, origin;
    auto operator<=>(const Item&) const = default;
  };
  const std::size_t n = w.size();
  std::vector<bool> nullable(g.nonterminals.size(), false);
  for (bool changed = true; changed;) {
    changed = false;
    for (const auto& p : g.productions) {
      if (nullable[p.lhs]) continue;
      bool all = std::all_of(p.rhs.begin(), p.rhs.end(), [&](const GSym& s) { return !s.terminal && nullable[s.id]; });
      if (all) nullable[p.lhs] = changed = true;
    }
  }
  std::vector<std::set<Item>> sets(n + 1);
  std::vector<std::vector<Item>> agenda(n + 1);
  auto add = [&](std::size_t k, Item it) {
    if (sets[k].insert(it).second) agenda[k].push_back(it);
  };
  for (std::size_t p = 0; p < g.productions.size(); ++p)
    if (g.productions[p].lhs == g.start) add(0, {p, 0, 0});
  for (std::size_t k = 0; k <= n; ++k) {
    for (std::size_t idx = 0; idx < agenda[k].size(); ++idx) {
      Item it = agenda[k][idx];
      const auto& prod = g.productions[it.prod];
      if (it.dot == prod.rhs.size()) {
        std::vector<Item> parents(sets[it.origin].begin(), sets[it.origin].end());
        for (const auto& par : parents) {
          const auto& pp = g.productions[par.prod];
          if (par.dot < pp.rhs.size() && !pp.rhs[par.dot].terminal && pp.rhs[par.dot].id == prod.lhs)
            add(k, {par.prod, par.dot + 1, par.origin});
        }
        continue;
      }
      const GSym& next = prod.rhs[it.dot];
      if (next.terminal) {
        if (k < n && w[k] == next.id) add(k + 1, {it.prod, it.dot + 1, it.origin});
        continue;
      }
      for (std::size_t p = 0; p < g.productions.size(); ++p)
        if (g.productions[p].lhs == next.id) add(k, {p, 0, k});
      if (nullable[next.id]) add(k, {it.prod, it.dot + 1, it.origin});
    }
  }
  for (const auto& it : sets[n])
    if (g.productions[it.prod].lhs == g.start && it.dot == g.productions[it.prod].rhs.size() && it.origin == 0)
      return true;
  return false;
}

void for_each_word(const std::vector<Symbol>& alphabet, std::size_t max_len,
                   const std::function<void(const Word&)>& f) {
  std::vector<Word> layer{Word{}};
  for (std::size_t len = 0;; ++len) {
    for (const auto& w : layer) f(w);
    if (len == max_len) return;
    std::vector<Word> next;
    next.reserve(layer.size() * alphabet.size());
    for (const auto& w : layer) {
      for (const auto& a : alphabet) {
        next.push_back(w);
        next.back().push_back(a);
      }
    }
    layer = std::move(next);
  }
}

namespace {

// Index of v in a BoxGrid of the given bound, or nothing when v leaves the box.
std::optional<std::size_t> grid_index(const std::vector<long>& v, unsigned box) {
  std::size_t idx = 0, stride = 1;
  for (long x : v) {
    if (x < 0 || x > static_cast<long>(box)) return std::nullopt;
    idx += static_cast<std::size_t>(x) * stride;
    stride *= box + 1;
  }
  return idx;
}

std::vector<long> to_longs(const Vec0& v) {
  std::vector<long> out;
  for (const auto& x : v.entries()) out.push_back(x.fits_slong_p() ? x.get_si() : std::numeric_limits<long>::max());
  return out;
}

}  // namespace

BoxGrid naive_points(const LinearSet& l, unsigned coeff_bound, unsigned box) {
  const std::size_t r = l.dim_ambient();
  BoxGrid grid(r, box);
  const auto c = to_longs(l.constant());
  std::vector<std::vector<long>> ps;
  for (const auto& p : l.periods()) ps.push_back(to_longs(p));
  std::vector<unsigned> alpha(ps.size(), 0);
  while (true) {
    std::vector<long> v = c;
    for (std::size_t i = 0; i < ps.size(); ++i)
      for (std::size_t j = 0; j < r; ++j) v[j] += static_cast<long>(alpha[i]) * ps[i][j];
    if (auto idx = grid_index(v, box)) grid.set_index(*idx);
    std::size_t i = 0;
    while (i < alpha.size() && alpha[i] == coeff_bound) alpha[i++] = 0;
    if (i == alpha.size()) break;
    ++alpha[i];
  }
  return grid;
}

std::vector<Vec0> brute_hilbert_basis(const HomSystem& sys, unsigned box) {
  std::vector<std::vector<long>> rows;
  for (const auto& row : sys.rows) {
    std::vector<long> r;
    for (const auto& x : row) r.push_back(x.get_si());
    rows.push_back(std::move(r));
  }
  std::vector<std::vector<long>> sols;
  std::vector<long> x(sys.cols, 0);
  // enumerate in order of increasing coordinate sum so minimal ones come first
  std::vector<std::vector<long>> all;
  while (true) {
    std::size_t i = 0;
    while (i < x.size() && x[i] == static_cast<long>(box)) x[i++] = 0;
    if (i == x.size()) break;
    ++x[i];
    bool ok = true;
    for (const auto& row : rows) {
      long acc = 0;
      for (std::size_t j = 0; j < x.size(); ++j) acc += row[j] * x[j];
      if (acc != 0) {
        ok = false;
        break;
      }
    }
    if (ok) all.push_back(x);
  }
  std::sort(all.begin(), all.end(), [](const auto& a, const auto& b) {
    long sa = 0, sb = 0;
    for (long v : a) sa += v;
    for (long v : b) sb += v;
    return sa < sb;
  });
  for (const auto& cand : all) {
    bool dominated = std::any_of(sols.begin(), sols.end(), [&](const auto& m) {
      for (std::size_t j = 0; j < cand.size(); ++j)
        if (m[j] > cand[j]) return false;
      return true;
    });
    if (!dominated) sols.push_back(cand);
  }
  std::vector<Vec0> out;
  for (const auto& s : sols) out.push_back(Vec0(std::vector<Int>(s.begin(), s.end())));
  std::sort(out.begin(), out.end());
  return out;
}

LinearSet random_linear_set(std::size_t r, std::size_t max_periods, long max_entry, std::mt19937_64& rng,
                            bool zero_constant) {
  std::uniform_int_distribution<long> entry(0, max_entry);
  std::uniform_int_distribution<std::size_t> count(0, max_periods);
  auto vec = [&] {
    std::vector<Int> v(r);
    for (auto& x : v) x = entry(rng);
    return Vec0(std::move(v));
  };
  Vec0 c = zero_constant ? Vec0::zero(r) : vec();
  std::vector<Vec0> ps;
  for (std::size_t i = count(rng); i > 0; --i) ps.push_back(vec());
  return LinearSet(std::move(c), std::move(ps));
}

HomSystem random_system(std::size_t rows, std::size_t cols, long bound, std::mt19937_64& rng) {
  std::uniform_int_distribution<long> entry(-bound, bound);
  std::vector<std::vector<Int>> a(rows, std::vector<Int>(cols));
  for (auto& row : a)
    for (auto& x : row) x = entry(rng);
  return HomSystem(cols, std::move(a));
}

LinearSet random_stratified(std::size_t r, std::size_t attempts, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::size_t> idx(0, r - 1);
  std::uniform_int_distribution<long> val(1, 3);
  std::vector<Vec0> ps;
  for (std::size_t t = 0; t < attempts; ++t) {
    std::size_t i = idx(rng), j = idx(rng);
    Vec0 v = Vec0::unit(r, i).scaled(val(rng));
    if (i != j) v = v + Vec0::unit(r, j).scaled(val(rng));
    ps.push_back(v);
    if (!is_stratified_period_set(ps)) ps.pop_back();
  }
  return LinearSet(Vec0::zero(r), std::move(ps));
}

Npda random_pda(std::mt19937_64& rng) {
  Npda a;
  for (const char* q : {"p", "q", "r"}) a.states().add(q);
  a.inputs().add("a");
  a.inputs().add("b");
  a.stack().add("Z");
  a.stack().add("Y");
  a.set_start(0, 0);
  std::uniform_int_distribution<std::size_t> st(0, 2), in(0, 2), sk(0, 1), len(0, 2), coin(0, 1);
  for (std::size_t q = 0; q < 3; ++q)
    if (coin(rng)) a.set_accepting(q);
  const std::size_t n = 4 + std::uniform_int_distribution<std::size_t>(0, 5)(rng);
  for (std::size_t i = 0; i < n; ++i) {
    Npda::Transition t;
    t.from = st(rng);
    auto c = in(rng);
    t.input = c == 2 ? Npda::kEps : c;
    t.top = sk(rng);
    t.to = st(rng);
    for (std::size_t j = len(rng); j > 0; --j) t.push.push_back(sk(rng));
    a.add_transition(t);
  }
  return a;
}

}  // namespace polycf::check
