#include "polycf/witness/parikh.hpp"

#include <algorithm>

#include "polycf/groups/families.hpp"
#include "polycf/linalg.hpp"
#include "polycf/stratify.hpp"

namespace polycf {

std::vector<Vec0> bounded_parikh(const WordOracle& accept, const std::vector<Word>& words, unsigned cap) {
  const std::size_t n = words.size();
  std::vector<Vec0> out;
  std::vector<unsigned> e(n, 0);
  while (true) {
    Word w;
    for (std::size_t i = 0; i < n; ++i)
      for (unsigned c = 0; c < e[i]; ++c) w.insert(w.end(), words[i].begin(), words[i].end());
    if (accept(w)) {
      std::vector<Int> v(e.begin(), e.end());
      out.emplace_back(std::move(v));
    }
    std::size_t i = 0;
    while (i < n && e[i] == cap) e[i++] = 0;
    if (i == n) break;
    ++e[i];
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<ParikhBlock> blocks_from_pattern(const std::vector<PatternItem>& items) {
  std::vector<ParikhBlock> blocks;
  for (const auto& it : items) blocks.push_back({{it.letter}, it.star});
  return blocks;
}

std::vector<Vec0> bounded_parikh(const KcfRecognizer& r, const std::vector<ParikhBlock>& blocks, unsigned cap,
                                 const WordOracle& filter) {
  KcfMatcher m(r);
  std::vector<std::vector<std::size_t>> ids;
  for (const auto& b : blocks) {
    std::vector<std::size_t> v;
    for (const auto& s : b.word) v.push_back(m.symbol(s));
    ids.push_back(std::move(v));
  }
  auto cur = m.cursor();
  Word word;
  std::vector<Int> exps;
  std::vector<Vec0> out;
  // Pushes one copy of block i; false when the prefix is dead.
  auto push_block = [&](std::size_t i) {
    for (std::size_t j = 0; j < ids[i].size(); ++j) {
      cur.push(ids[i][j]);
      word.push_back(blocks[i].word[j]);
    }
    return cur.viable();
  };
  auto pop_block = [&](std::size_t i) {
    for (std::size_t j = 0; j < ids[i].size(); ++j) {
      cur.pop();
      word.pop_back();
    }
  };
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == blocks.size()) {
      if (cur.accepts() && (!filter || filter(word))) out.emplace_back(exps);
      return;
    }
    if (!blocks[i].variable) {
      if (push_block(i)) rec(i + 1);
      pop_block(i);
      return;
    }
    if (!cur.viable()) return;
    exps.push_back(0);
    rec(i + 1);
    unsigned copies = 0;
    while (copies < cap) {
      ++copies;
      exps.back() = copies;
      bool alive = push_block(i);
      if (!alive) break;
      rec(i + 1);
    }
    for (unsigned c = 0; c < copies; ++c) pop_block(i);
    exps.pop_back();
  };
  rec(0);
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

void require_structure(const std::vector<Vec0>& members, std::size_t n, std::size_t k, const char* what) {
  auto st = phi_structure(members, n, k);
  if (!st.inside_Snk || !st.increasing)
    throw Error(std::string(what) + ": a member is not of the repeated increasing form");
}

}  // namespace

std::vector<Vec0> wreath_Lk_phi(long p, std::size_t k, unsigned cap) {
  WreathGroup g(p);
  auto members = bounded_parikh(build_Mk_wreath(k), blocks_from_pattern(wreath_pattern(k)), cap,
                                [&](const Word& w) { return g.is_trivial(w); });
  require_structure(members, 2, k, "wreath_Lk_phi");
  return members;
}

std::vector<Vec0> abc_Lk_phi(long p, std::size_t k, unsigned cap) {
  AbcGroup g(p);
  auto members = bounded_parikh(build_Mk_abc(k), blocks_from_pattern(abc_pattern(k)), cap,
                                [&](const Word& w) { return g.is_trivial(w); });
  require_structure(members, 4, k, "abc_Lk_phi");
  return members;
}

PhiStructure phi_structure(const std::vector<Vec0>& members, std::size_t n, std::size_t k) {
  PhiStructure st;
  auto fam = build_Snk(n, k);
  for (const auto& v : members) {
    if (v.size() != fam.dim_ambient() || !fam.predicate(v)) {
      st.inside_Snk = false;
      continue;
    }
    for (std::size_t half = 0; half < 2; ++half)
      for (std::size_t i = 0; i + 1 < k; ++i) {
        const std::size_t at = half * n * k + i * n;
        if (!(v[at] < v[at + n])) st.increasing = false;
      }
  }
  st.difference_rank = difference_rank(members);
  return st;
}

std::size_t difference_rank(const std::vector<Vec0>& members) {
  if (members.size() < 2) return 0;
  std::vector<QVec> rows;
  const QVec base = members[0].to_q();
  for (std::size_t i = 1; i < members.size(); ++i) {
    QVec d = members[i].to_q();
    for (std::size_t j = 0; j < d.size(); ++j) d[j] -= base[j];
    rows.push_back(std::move(d));
  }
  return rank(rows, base.size());
}

}  // namespace polycf
