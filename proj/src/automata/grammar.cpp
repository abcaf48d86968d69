#include "polycf/automata/grammar.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

namespace polycf {

std::size_t Cfg::add_nonterminal(std::string name) {
  nonterminals.push_back(std::move(name));
  return nonterminals.size() - 1;
}

std::string Cfg::to_text() const {
  std::string out;
  for (const auto& p : productions) {
    out += nonterminals[p.lhs] + " ->";
    if (p.rhs.empty()) out += " _";
    for (const auto& s : p.rhs) out += " " + (s.terminal ? "'" + terminals[s.id] + "'" : nonterminals[s.id]);
    out += "\n";
  }
  return out;
}

std::size_t CnfGrammar::num_rules() const {
  std::size_t n = 0;
  for (const auto& v : by_terminal) n += v.size();
  for (const auto& v : by_left) n += v.size();
  return n;
}

// --- PDA to grammar ---------------------------------------------------------

namespace {

struct Move {
  std::size_t from, input, top, to;
  std::vector<std::size_t> push;
};

}  // namespace

Cfg pda_to_cfg(const Npda& a) {
  std::vector<std::string> state_names = a.states().names();
  const std::size_t nstack = a.stack().size();

  // Split long pushes so that every move pushes at most two symbols.
  std::vector<Move> moves;
  for (const auto& t : a.transitions()) {
    if (t.push.size() <= 2) {
      moves.push_back({t.from, t.input, t.top, t.to, t.push});
      continue;
    }
    const auto& y = t.push;
    const std::size_t k = y.size();
    std::size_t prev = t.from;
    std::size_t input = t.input;
    std::size_t top = t.top;
    // Build bottom-up: first replace top by y[k-2] y[k-1], then grow upward.
    for (std::size_t pos = k - 2; pos > 0; --pos) {
      std::size_t fresh = state_names.size();
      state_names.push_back(state_names[t.from] + "~" + std::to_string(moves.size()) + "." + std::to_string(pos));
      moves.push_back({prev, input, top, fresh, {y[pos], y[pos + 1]}});
      prev = fresh;
      input = Npda::kEps;
      top = y[pos];
    }
    moves.push_back({prev, input, top, t.to, {y[0], y[1]}});
  }
  const std::size_t nstates = state_names.size();
  auto key = [&](std::size_t p, std::size_t x, std::size_t q) { return (p * nstack + x) * nstates + q; };

  // Saturate the productive triples.
  std::vector<bool> productive(nstates * nstack * nstates, false);
  std::vector<std::vector<std::size_t>> targets(nstates * nstack);  // (p,X) -> q list
  std::vector<std::vector<std::size_t>> sources(nstates * nstack);  // (q,X) -> p list
  std::map<std::pair<std::size_t, std::size_t>, std::vector<const Move*>> first_push;  // (to, push[0])
  std::map<std::size_t, std::vector<const Move*>> second_push;                        // push[1]
  std::deque<std::array<std::size_t, 3>> work;
  auto mark = [&](std::size_t p, std::size_t x, std::size_t q) {
    auto k = key(p, x, q);
    if (productive[k]) return;
    productive[k] = true;
    targets[p * nstack + x].push_back(q);
    sources[q * nstack + x].push_back(p);
    work.push_back({p, x, q});
  };
  for (const auto& m : moves) {
    if (m.push.empty()) continue;
    first_push[{m.to, m.push[0]}].push_back(&m);
    if (m.push.size() == 2) second_push[m.push[1]].push_back(&m);
  }
  for (const auto& m : moves)
    if (m.push.empty()) mark(m.from, m.top, m.to);
  while (!work.empty()) {
    auto [u, v, w] = work.front();
    work.pop_front();
    if (auto it = first_push.find({u, v}); it != first_push.end()) {
      for (const Move* m : it->second) {
        if (m->push.size() == 1) {
          mark(m->from, m->top, w);
        } else {
          auto copy = targets[w * nstack + m->push[1]];
          for (auto q : copy) mark(m->from, m->top, q);
        }
      }
    }
    if (auto it = second_push.find(v); it != second_push.end()) {
      for (const Move* m : it->second) {
        if (productive[key(m->to, m->push[0], u)]) mark(m->from, m->top, w);
      }
    }
  }

  // Emit productions for triples reachable from the start symbol.
  Cfg g;
  g.terminals = a.inputs().names();
  g.start = g.add_nonterminal("S");
  std::map<std::size_t, std::size_t> nt;
  std::deque<std::array<std::size_t, 3>> todo;
  auto nonterminal = [&](std::size_t p, std::size_t x, std::size_t q) {
    auto k = key(p, x, q);
    auto it = nt.find(k);
    if (it != nt.end()) return it->second;
    auto id = g.add_nonterminal("[" + state_names[p] + " " + a.stack().name(x) + " " + state_names[q] + "]");
    nt.emplace(k, id);
    todo.push_back({p, x, q});
    return id;
  };
  std::vector<std::vector<const Move*>> by_from_top(nstates * nstack);
  for (const auto& m : moves) by_from_top[m.from * nstack + m.top].push_back(&m);

  const std::size_t q0 = a.start_state(), z0 = a.start_stack();
  for (std::size_t f = 0; f < a.states().size(); ++f) {
    if (a.accepting(f) && productive[key(q0, z0, f)])
      g.productions.push_back({g.start, {GSym{false, nonterminal(q0, z0, f)}}});
  }
  while (!todo.empty()) {
    auto [p, x, q] = todo.front();
    todo.pop_front();
    const std::size_t lhs = nt.at(key(p, x, q));
    for (const Move* m : by_from_top[p * nstack + x]) {
      std::vector<GSym> head;
      if (m->input != Npda::kEps) head.push_back(GSym{true, m->input});
      if (m->push.empty()) {
        if (m->to == q) g.productions.push_back({lhs, head});
      } else if (m->push.size() == 1) {
        if (productive[key(m->to, m->push[0], q)]) {
          auto rhs = head;
          rhs.push_back(GSym{false, nonterminal(m->to, m->push[0], q)});
          g.productions.push_back({lhs, std::move(rhs)});
        }
      } else {
        for (auto s : targets[m->to * nstack + m->push[0]]) {
          if (!productive[key(s, m->push[1], q)]) continue;
          auto rhs = head;
          rhs.push_back(GSym{false, nonterminal(m->to, m->push[0], s)});
          rhs.push_back(GSym{false, nonterminal(s, m->push[1], q)});
          g.productions.push_back({lhs, std::move(rhs)});
        }
      }
    }
  }
  std::sort(g.productions.begin(), g.productions.end());
  g.productions.erase(std::unique(g.productions.begin(), g.productions.end()), g.productions.end());
  return g;
}

// --- CNF --------------------------------------------------------------------

CnfGrammar to_cnf(const Cfg& src) {
  std::vector<std::string> names = src.nonterminals;
  auto fresh = [&](std::string name) {
    names.push_back(std::move(name));
    return names.size() - 1;
  };
  // START
  const std::size_t s0 = fresh("S0");
  std::set<Production> prods(src.productions.begin(), src.productions.end());
  prods.insert({s0, {GSym{false, src.start}}});

  // TERM
  std::map<std::size_t, std::size_t> term_nt;
  std::set<Production> step;
  for (auto p : prods) {
    if (p.rhs.size() >= 2) {
      for (auto& s : p.rhs) {
        if (!s.terminal) continue;
        auto it = term_nt.find(s.id);
        if (it == term_nt.end()) {
          it = term_nt.emplace(s.id, fresh("T<" + src.terminals[s.id] + ">")).first;
          step.insert({it->second, {GSym{true, s.id}}});
        }
        s = GSym{false, it->second};
      }
    }
    step.insert(std::move(p));
  }

  // BIN
  prods.clear();
  for (const auto& p : step) {
    if (p.rhs.size() <= 2) {
      prods.insert(p);
      continue;
    }
    std::size_t lhs = p.lhs;
    for (std::size_t i = 0; i + 2 < p.rhs.size(); ++i) {
      auto next = fresh(names[p.lhs] + "#" + std::to_string(i));
      prods.insert({lhs, {p.rhs[i], GSym{false, next}}});
      lhs = next;
    }
    prods.insert({lhs, {p.rhs[p.rhs.size() - 2], p.rhs.back()}});
  }

  // DEL
  const std::size_t n = names.size();
  std::vector<bool> nullable(n, false);
  for (bool changed = true; changed;) {
    changed = false;
    for (const auto& p : prods) {
      if (nullable[p.lhs]) continue;
      bool all = std::all_of(p.rhs.begin(), p.rhs.end(), [&](const GSym& s) { return !s.terminal && nullable[s.id]; });
      if (all) nullable[p.lhs] = changed = true;
    }
  }
  step.clear();
  for (const auto& p : prods) {
    if (p.rhs.empty()) continue;
    step.insert(p);
    if (p.rhs.size() == 2) {
      if (!p.rhs[1].terminal && nullable[p.rhs[1].id]) step.insert({p.lhs, {p.rhs[0]}});
      if (!p.rhs[0].terminal && nullable[p.rhs[0].id]) step.insert({p.lhs, {p.rhs[1]}});
    }
  }

  // UNIT
  std::vector<std::vector<std::size_t>> unit_next(n);
  for (const auto& p : step)
    if (p.rhs.size() == 1 && !p.rhs[0].terminal) unit_next[p.lhs].push_back(p.rhs[0].id);
  std::vector<std::vector<const Production*>> by_lhs(n);
  for (const auto& p : step)
    if (!(p.rhs.size() == 1 && !p.rhs[0].terminal)) by_lhs[p.lhs].push_back(&p);
  prods.clear();
  for (std::size_t x = 0; x < n; ++x) {
    std::vector<bool> seen(n, false);
    std::vector<std::size_t> stack{x};
    seen[x] = true;
    while (!stack.empty()) {
      auto y = stack.back();
      stack.pop_back();
      for (const Production* p : by_lhs[y]) prods.insert({x, p->rhs});
      for (auto z : unit_next[y])
        if (!seen[z]) seen[z] = true, stack.push_back(z);
    }
  }

  // Useless symbols: generating, then reachable.
  std::vector<bool> gen(n, false);
  for (bool changed = true; changed;) {
    changed = false;
    for (const auto& p : prods) {
      if (gen[p.lhs]) continue;
      bool all = std::all_of(p.rhs.begin(), p.rhs.end(), [&](const GSym& s) { return s.terminal || gen[s.id]; });
      if (all) gen[p.lhs] = changed = true;
    }
  }
  std::vector<bool> reach(n, false);
  std::vector<std::vector<const Production*>> uses(n);
  for (const auto& p : prods) {
    bool ok = std::all_of(p.rhs.begin(), p.rhs.end(), [&](const GSym& s) { return s.terminal || gen[s.id]; });
    if (ok && gen[p.lhs]) uses[p.lhs].push_back(&p);
  }
  std::vector<std::size_t> stack;
  if (gen[s0]) {
    reach[s0] = true;
    stack.push_back(s0);
  }
  while (!stack.empty()) {
    auto x = stack.back();
    stack.pop_back();
    for (const Production* p : uses[x])
      for (const auto& s : p->rhs)
        if (!s.terminal && !reach[s.id]) reach[s.id] = true, stack.push_back(s.id);
  }

  CnfGrammar out;
  out.num_terminals = src.terminals.size();
  out.accepts_empty = nullable[src.start];
  out.empty_language = !gen[s0] && !out.accepts_empty;
  std::vector<std::size_t> renum(n, SIZE_MAX);
  for (std::size_t x = 0; x < n; ++x) {
    if (x == s0 || reach[x]) {
      renum[x] = out.names.size();
      out.names.push_back(names[x]);
    }
  }
  out.num_nonterminals = out.names.size();
  out.start = renum[s0];
  out.by_terminal.assign(out.num_terminals, {});
  out.by_left.assign(out.num_nonterminals, {});
  for (std::size_t x = 0; x < n; ++x) {
    if (!reach[x]) continue;
    for (const Production* p : uses[x]) {
      if (p->rhs.size() == 1) {
        out.by_terminal[p->rhs[0].id].push_back(renum[x]);
      } else {
        out.by_left[renum[p->rhs[0].id]].push_back({renum[x], renum[p->rhs[0].id], renum[p->rhs[1].id]});
      }
    }
  }
  const std::size_t words = (out.num_nonterminals + 63) / 64;
  out.left_corner.assign(out.num_nonterminals, std::vector<std::uint64_t>(words, 0));
  for (std::size_t y = 0; y < out.num_nonterminals; ++y) {
    auto& bits = out.left_corner[y];
    std::vector<std::size_t> st{y};
    bits[y >> 6] |= std::uint64_t{1} << (y & 63);
    while (!st.empty()) {
      auto z = st.back();
      st.pop_back();
      for (const auto& r : out.by_left[z]) {
        if (!((bits[r.lhs >> 6] >> (r.lhs & 63)) & 1U)) {
          bits[r.lhs >> 6] |= std::uint64_t{1} << (r.lhs & 63);
          st.push_back(r.lhs);
        }
      }
    }
  }
  return out;
}

// --- chart ------------------------------------------------------------------

Chart::Chart(const CnfGrammar& g) : g_(&g), words_((g.num_nonterminals + 63) / 64) {
  span_.emplace_back();
  prefix_.emplace_back();
}

void Chart::set(Cell& c, std::size_t x) const {
  auto& w = c.bits[x >> 6];
  auto bit = std::uint64_t{1} << (x & 63);
  if (!(w & bit)) {
    w |= bit;
    c.list.push_back(x);
  }
}

void Chart::push(std::size_t a) {
  if (a >= g_->num_terminals) throw UnknownSymbol("terminal id out of range");
  word_.push_back(a);
  const std::size_t n = word_.size();
  span_.emplace_back(n, Cell{Bits(words_, 0), {}});
  prefix_.emplace_back(n, Bits(words_, 0));
  auto& col = span_[n];
  auto& pre = prefix_[n];
  for (std::size_t i = n; i-- > 0;) {
    Cell& cell = col[i];
    std::vector<std::size_t> base;
    if (i == n - 1) {
      for (auto x : g_->by_terminal[a]) {
        set(cell, x);
        base.push_back(x);
      }
    } else {
      for (std::size_t j = i + 1; j < n; ++j) {
        const Cell& left = span_[j][i];
        const Cell& right = col[j];
        const Bits& right_pre = pre[j];
        for (auto y : left.list) {
          for (const auto& r : g_->by_left[y]) {
            if (test(right.bits, r.right)) set(cell, r.lhs);
            if (test(right_pre, r.right)) base.push_back(r.lhs);
          }
        }
      }
    }
    Bits& p = pre[i];
    for (auto x : base) {
      if (test(p, x)) continue;
      const auto& lc = g_->left_corner[x];
      for (std::size_t w = 0; w < words_; ++w) p[w] |= lc[w];
    }
  }
}

void Chart::pop() {
  if (word_.empty()) return;
  word_.pop_back();
  span_.pop_back();
  prefix_.pop_back();
}

void Chart::clear() {
  word_.clear();
  span_.resize(1);
  prefix_.resize(1);
}

bool Chart::accepts() const {
  if (word_.empty()) return g_->accepts_empty;
  return test(span_[word_.size()][0].bits, g_->start);
}

bool Chart::viable() const {
  if (word_.empty()) return !g_->empty_language;
  return test(prefix_[word_.size()][0], g_->start);
}

bool cnf_accepts(const CnfGrammar& g, const std::vector<std::size_t>& terminals) {
  Chart c(g);
  for (auto t : terminals) c.push(t);
  return c.accepts();
}

}  // namespace polycf
