#include "polycf/automata/builders.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace polycf {

namespace {

const std::vector<Symbol> kWreathLetters{"a", "A", "b", "B"};

std::string set_name(const std::set<std::size_t>& s) {
  std::string n = "q";
  bool first = true;
  for (auto i : s) {
    n += (first ? "" : "_") + std::to_string(i);
    first = false;
  }
  return n;
}

}  // namespace

Dfa pattern_dfa(const std::vector<Symbol>& alphabet, const std::vector<PatternItem>& items) {
  const std::size_t m = items.size();
  auto closure = [&](std::set<std::size_t> s) {
    std::vector<std::size_t> st(s.begin(), s.end());
    while (!st.empty()) {
      auto i = st.back();
      st.pop_back();
      if (i < m && items[i].star && s.insert(i + 1).second) st.push_back(i + 1);
    }
    return s;
  };
  Dfa d;
  for (const auto& a : alphabet) d.inputs().add(a);
  for (const auto& it : items)
    if (!d.inputs().contains(it.letter)) throw UnknownSymbol("pattern letter '" + it.letter + "' not in alphabet");
  std::map<std::set<std::size_t>, std::size_t> ids;
  std::vector<std::set<std::size_t>> todo;
  auto node = [&](const std::set<std::size_t>& s) {
    auto it = ids.find(s);
    if (it != ids.end()) return it->second;
    auto id = d.states().add(set_name(s));
    ids.emplace(s, id);
    todo.push_back(s);
    if (s.count(m)) d.set_accepting(id);
    return id;
  };
  d.set_start(node(closure({0})));
  while (!todo.empty()) {
    auto s = todo.back();
    todo.pop_back();
    const auto from = ids.at(s);
    for (std::size_t a = 0; a < d.inputs().size(); ++a) {
      std::set<std::size_t> next;
      for (auto i : s) {
        if (i == m || items[i].letter != d.inputs().name(a)) continue;
        next.insert(items[i].star ? i : i + 1);
      }
      if (next.empty()) continue;
      d.set(from, a, node(closure(next)));
    }
  }
  d.complete();
  return d;
}

Dfa universal_dfa(const std::vector<Symbol>& alphabet) {
  Dfa d;
  auto q = d.states().add("all");
  for (const auto& a : alphabet) d.set(q, d.inputs().add(a), q);
  d.set_start(q);
  d.set_accepting(q);
  return d;
}

Dfa empty_dfa(const std::vector<Symbol>& alphabet) {
  Dfa d;
  auto q = d.states().add("none");
  for (const auto& a : alphabet) d.set(q, d.inputs().add(a), q);
  d.set_start(q);
  return d;
}

Npda one_counter_pda(const Symbol& x, const Symbol& inv) {
  Npda a;
  a.states().add("q");
  a.inputs().add(x);
  a.inputs().add(inv);
  a.stack().add("Z0");
  a.set_start(0, 0);
  a.set_accepting(0);
  a.add("q", x, "Z0", "q", {"P", "Z0"});
  a.add("q", x, "P", "q", {"P", "P"});
  a.add("q", x, "N", "q", {});
  a.add("q", inv, "Z0", "q", {"N", "Z0"});
  a.add("q", inv, "N", "q", {"N", "N"});
  a.add("q", inv, "P", "q", {});
  a.add("q", "_", "Z0", "q", {});
  return a;
}

KcfRecognizer zk_recognizer(std::size_t k) {
  if (k == 0) throw PreconditionViolation("k must be at least 1");
  auto letter = [](std::size_t i) { return "x" + std::to_string(i); };
  auto inv = [](std::size_t i) { return "X" + std::to_string(i); };
  KcfRecognizer r({one_counter_pda(letter(1), inv(1))});
  for (std::size_t i = 2; i <= k; ++i) r = direct_product(r, KcfRecognizer({one_counter_pda(letter(i), inv(i))}));
  return r;
}

Npda dyck_pda() {
  Npda a;
  a.states().add("q");
  a.inputs().add("(");
  a.inputs().add(")");
  a.stack().add("Z0");
  a.set_start(0, 0);
  a.set_accepting(0);
  a.add("q", "(", "Z0", "q", {"L", "Z0"});
  a.add("q", "(", "L", "q", {"L", "L"});
  a.add("q", ")", "L", "q", {});
  a.add("q", "_", "Z0", "q", {});
  return a;
}

Npda free_group_pda(const std::vector<Symbol>& generators) {
  Npda a;
  a.states().add("q");
  a.stack().add("Z0");
  a.set_start(0, 0);
  a.set_accepting(0);
  std::vector<Symbol> letters;
  for (const auto& g : generators) {
    letters.push_back(g);
    letters.push_back(invert_letter(g));
  }
  for (const auto& x : letters) {
    a.inputs().add(x);
    a.stack().add("s" + x);
  }
  for (const auto& x : letters) {
    a.add("q", x, "Z0", "q", {"s" + x, "Z0"});
    for (const auto& y : letters) {
      if (y == invert_letter(x)) {
        a.add("q", x, "s" + y, "q", {});
      } else {
        a.add("q", x, "s" + y, "q", {"s" + x, "s" + y});
      }
    }
  }
  a.add("q", "_", "Z0", "q", {});
  return a;
}

Npda empty_pda(const std::vector<Symbol>& alphabet) {
  Npda a;
  a.states().add("q");
  a.stack().add("Z0");
  for (const auto& x : alphabet) a.inputs().add(x);
  a.set_start(0, 0);
  return a;
}

Npda all_words_pda(const std::vector<Symbol>& alphabet) {
  Npda a = empty_pda(alphabet);
  a.set_accepting(0);
  for (const auto& x : alphabet) a.add("q", x, "Z0", "q", {"Z0"});
  a.add("q", "_", "Z0", "q", {});
  return a;
}

// --- wreath words -----------------------------------------------------------

std::vector<PatternItem> wreath_pattern(std::size_t k) {
  std::vector<PatternItem> items;
  for (std::size_t i = 1; i <= 2 * k; ++i) {
    items.push_back({"A", true});
    items.push_back({i <= k ? "b" : "B", false});
    items.push_back({"a", true});
  }
  return items;
}

Dfa wreath_shape(std::size_t k) { return pattern_dfa(kWreathLetters, wreath_pattern(k)); }

namespace {

Npda blank(const std::vector<Symbol>& letters) {
  Npda a;
  for (const auto& x : letters) a.inputs().add(x);
  a.stack().add("Z0");
  return a;
}

}  // namespace

Npda wreath_pda_equal(std::size_t k) {
  if (k == 0) throw PreconditionViolation("k must be at least 1");
  Npda a = blank(kWreathLetters);
  a.states().add("qA");
  a.set_start(0, 0);
  for (const char* s : {"Z0", "C"}) {
    a.add("qA", "A", s, "qA", {"C", s});
    a.add("qA", "b", s, "qa", {s});
    a.add("qA", "B", s, "qa", {s});
  }
  a.add("qa", "a", "C", "qa", {});
  a.add("qa", "A", "Z0", "qA", {"C", "Z0"});
  a.add("qa", "b", "Z0", "qa", {"Z0"});
  a.add("qa", "B", "Z0", "qa", {"Z0"});
  a.add("qa", "_", "Z0", "qf", {});
  a.set_accepting(a.states().id("qf"));
  return a;
}

Npda wreath_pda_increase(std::size_t k) {
  if (k == 0) throw PreconditionViolation("k must be at least 1");
  Npda a = blank(kWreathLetters);
  const std::size_t blocks = 2 * k;
  auto compare = [&](std::size_t i) { return i != k && i != blocks; };
  auto free_ = [](std::size_t i) { return "free" + std::to_string(i); };
  auto pop_ = [](std::size_t i) { return "pop" + std::to_string(i); };
  auto sat_ = [](std::size_t i) { return "sat" + std::to_string(i); };
  auto run_ = [](std::size_t i) { return "run" + std::to_string(i); };
  a.states().add(free_(1));
  a.set_start(0, 0);
  for (std::size_t i = 1; i <= blocks; ++i) {
    bool pops = i > 1 && compare(i - 1);
    for (const char* sep : {"b", "B"}) {
      if (pops) {
        a.add(sat_(i), sep, "Z0", run_(i), {"Z0"});
      } else {
        a.add(free_(i), sep, "Z0", run_(i), {"Z0"});
      }
    }
    if (pops) {
      a.add(pop_(i), "A", "C", pop_(i), {});
      a.add(pop_(i), "A", "Z0", sat_(i), {"Z0"});
      a.add(sat_(i), "A", "Z0", sat_(i), {"Z0"});
    } else {
      a.add(free_(i), "A", "Z0", free_(i), {"Z0"});
    }
    if (compare(i)) {
      a.add(run_(i), "a", "Z0", run_(i), {"C", "Z0"});
      a.add(run_(i), "a", "C", run_(i), {"C", "C"});
    } else {
      a.add(run_(i), "a", "Z0", run_(i), {"Z0"});
    }
    if (i == blocks) {
      a.add(run_(i), "_", "Z0", "fin", {});
      continue;
    }
    if (compare(i)) {
      a.add(run_(i), "A", "C", pop_(i + 1), {});
      a.add(run_(i), "A", "Z0", sat_(i + 1), {"Z0"});
    } else {
      a.add(run_(i), "A", "Z0", free_(i + 1), {"Z0"});
      for (const char* sep : {"b", "B"}) a.add(run_(i), sep, "Z0", run_(i + 1), {"Z0"});
    }
  }
  a.set_accepting(a.states().id("fin"));
  return a;
}

KcfRecognizer build_Mk_wreath(std::size_t k) {
  KcfRecognizer r({wreath_pda_equal(k), wreath_pda_increase(k)});
  return intersect_regular(r, wreath_shape(k));
}

// --- abc words --------------------------------------------------------------

std::vector<PatternItem> abc_pattern(std::size_t k) {
  std::vector<PatternItem> items;
  for (std::size_t i = 1; i <= 2 * k; ++i) {
    const bool first = i <= k;
    items.push_back({"B", false});
    items.push_back({"A", true});
    items.push_back({first ? "B" : "b", false});
    items.push_back({"a", true});
    items.push_back({"b", false});
    items.push_back({"A", true});
    items.push_back({first ? "b" : "B", false});
    items.push_back({"a", true});
  }
  return items;
}

Dfa abc_shape(std::size_t k) { return pattern_dfa(kWreathLetters, abc_pattern(k)); }

Npda abc_pda_pairs(std::size_t k) {
  if (k == 0) throw PreconditionViolation("k must be at least 1");
  Npda a = blank(kWreathLetters);
  a.states().add("E");
  a.set_start(0, 0);
  for (const char* sep : {"b", "B"}) {
    a.add("E", sep, "Z0", "PA", {"Z0"});
    a.add("PA", sep, "Z0", "Pa", {"Z0"});
    a.add("PA", sep, "C", "Pa", {"C"});
    a.add("Pa", sep, "Z0", "PA", {"Z0"});
  }
  a.add("PA", "A", "Z0", "PA", {"C", "Z0"});
  a.add("PA", "A", "C", "PA", {"C", "C"});
  a.add("Pa", "a", "C", "Pa", {});
  a.add("Pa", "_", "Z0", "F", {});
  a.set_accepting(a.states().id("F"));
  return a;
}

Npda abc_pda_cross(std::size_t k) {
  if (k == 0) throw PreconditionViolation("k must be at least 1");
  Npda a = blank(kWreathLetters);
  a.states().add("S");
  a.set_start(0, 0);
  for (const char* sep : {"b", "B"}) {
    a.add("S", sep, "Z0", "p1", {"Z0"});
    a.add("p1", sep, "Z0", "p2", {"Z0"});
    a.add("p1", sep, "C", "p2", {"C"});
    a.add("p2", sep, "Z0", "p3", {"Z0"});
    a.add("p2", sep, "C", "p3", {"C"});
    a.add("p3", sep, "Z0", "p4", {"Z0"});
    a.add("p4", sep, "Z0", "p1", {"Z0"});
  }
  a.add("p1", "A", "Z0", "p1", {"C", "Z0"});
  a.add("p1", "A", "C", "p1", {"C", "C"});
  a.add("p2", "a", "Z0", "p2", {"Z0"});
  a.add("p2", "a", "C", "p2", {"C"});
  a.add("p3", "A", "C", "p3", {});
  a.add("p4", "a", "Z0", "p4", {"Z0"});
  a.add("p4", "_", "Z0", "F", {});
  a.set_accepting(a.states().id("F"));
  return a;
}

Npda abc_pda_increase(std::size_t k) {
  if (k == 0) throw PreconditionViolation("k must be at least 1");
  // Compares the last a-run of block i with the first A-run of block i+1;
  // together with the equalities this is m_i < m_{i+1}.
  Npda a = blank(kWreathLetters);
  const std::size_t blocks = 2 * k;
  auto compare = [&](std::size_t i) { return i != k && i != blocks; };
  auto st = [](const char* tag, std::size_t i) { return std::string(tag) + std::to_string(i); };
  a.states().add("S");
  a.set_start(0, 0);
  const std::vector<const char*> seps{"b", "B"};
  for (const char* sep : seps) a.add("S", sep, "Z0", st("free", 1), {"Z0"});
  for (std::size_t i = 1; i <= blocks; ++i) {
    bool pops = i > 1 && compare(i - 1);
    for (const char* sep : seps) {
      a.add(pops ? st("sat", i) : st("free", i), sep, "Z0", st("r2_", i), {"Z0"});
      a.add(st("r2_", i), sep, "Z0", st("r3_", i), {"Z0"});
      a.add(st("r3_", i), sep, "Z0", st("r4_", i), {"Z0"});
    }
    if (pops) {
      a.add(st("pop", i), "A", "C", st("pop", i), {});
      a.add(st("pop", i), "A", "Z0", st("sat", i), {"Z0"});
      a.add(st("sat", i), "A", "Z0", st("sat", i), {"Z0"});
    } else {
      a.add(st("free", i), "A", "Z0", st("free", i), {"Z0"});
    }
    a.add(st("r2_", i), "a", "Z0", st("r2_", i), {"Z0"});
    a.add(st("r3_", i), "A", "Z0", st("r3_", i), {"Z0"});
    if (compare(i)) {
      a.add(st("r4_", i), "a", "Z0", st("r4_", i), {"C", "Z0"});
      a.add(st("r4_", i), "a", "C", st("r4_", i), {"C", "C"});
      for (const char* sep : seps) {
        a.add(st("r4_", i), sep, "Z0", st("pop", i + 1), {"Z0"});
        a.add(st("r4_", i), sep, "C", st("pop", i + 1), {"C"});
      }
    } else {
      a.add(st("r4_", i), "a", "Z0", st("r4_", i), {"Z0"});
      if (i < blocks)
        for (const char* sep : seps) a.add(st("r4_", i), sep, "Z0", st("free", i + 1), {"Z0"});
    }
  }
  a.add(st("r4_", blocks), "_", "Z0", "F", {});
  a.set_accepting(a.states().id("F"));
  return a;
}

KcfRecognizer build_Mk_abc(std::size_t k) {
  KcfRecognizer r({abc_pda_pairs(k), abc_pda_cross(k), abc_pda_increase(k)});
  return intersect_regular(r, abc_shape(k));
}

}  // namespace polycf
