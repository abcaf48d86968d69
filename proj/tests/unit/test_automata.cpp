#include <functional>
#include <map>
#include <random>

#include "doctest.h"
#include "polycf/check/oracles.hpp"
#include "polycf/automata/builders.hpp"

using namespace polycf;

namespace {

const std::vector<Symbol> kZ1{"x", "X"};
const std::vector<Symbol> kZ2{"x1", "x2", "X1", "X2"};

void all_words(const std::vector<Symbol>& alphabet, std::size_t max_len, const std::function<void(const Word&)>& f) {
  Word w;
  std::function<void()> rec = [&] {
    f(w);
    if (w.size() == max_len) return;
    for (const auto& a : alphabet) {
      w.push_back(a);
      rec();
      w.pop_back();
    }
  };
  rec();
}

long count(const Word& w, const Symbol& s) { return std::count(w.begin(), w.end(), s); }

bool z_trivial(const Word& w, const Symbol& x, const Symbol& inv) { return count(w, x) == count(w, inv); }

bool expand_word(const std::string& letters, const Word& w) {
  return format_word(w) == letters;
}

Word word(const std::string& text, const std::vector<Symbol>& alphabet) { return tokenize(text, alphabet); }

KcfRecognizer single(Npda a) { return KcfRecognizer({std::move(a)}); }

Word pattern_word(const std::vector<PatternItem>& items, const std::vector<std::size_t>& exps) {
  Word w;
  std::size_t v = 0;
  for (const auto& it : items) {
    std::size_t n = it.star ? exps.at(v++) : 1;
    for (std::size_t i = 0; i < n; ++i) w.push_back(it.letter);
  }
  return w;
}

void all_exponents(std::size_t vars, std::size_t cap, const std::function<void(const std::vector<std::size_t>&)>& f) {
  std::vector<std::size_t> e(vars, 0);
  while (true) {
    f(e);
    std::size_t i = 0;
    while (i < vars && e[i] == cap) e[i++] = 0;
    if (i == vars) return;
    ++e[i];
  }
}

}  // namespace

TEST_CASE("one-counter and Dyck membership") {
  auto oc = one_counter_pda("x", "X");
  CHECK(pda_accepts(oc, word("xX", kZ1)));
  CHECK_FALSE(pda_accepts(oc, word("xx", kZ1)));
  CHECK(pda_accepts(oc, {}));
  CHECK(pda_accepts(oc, word("XxxXXx", kZ1)));
  all_words(kZ1, 8, [&](const Word& w) { CHECK(pda_accepts(oc, w) == z_trivial(w, "x", "X")); });

  auto d = dyck_pda();
  CHECK(pda_accepts(d, word("(()())", {"(", ")"})));
  CHECK_FALSE(pda_accepts(d, word("(()", {"(", ")"})));
  CHECK_FALSE(pda_accepts(d, word(")(", {"(", ")"})));
  CHECK_THROWS_AS(pda_accepts(d, {"x"}), UnknownSymbol);
}

TEST_CASE("free group words") {
  auto f = free_group_pda({"x", "y"});
  const std::vector<Symbol> al{"x", "X", "y", "Y"};
  CHECK(pda_accepts(f, word("xyYX", al)));
  CHECK(pda_accepts(f, word("xYyXyY", al)));
  CHECK_FALSE(pda_accepts(f, word("xyXY", al)));
}

TEST_CASE("kcf recognizer for Z^2") {
  auto r = zk_recognizer(2);
  CHECK(r.size() == 2);
  CHECK(kcf_accepts(r, word("x1x2X1X2", kZ2)));
  CHECK_FALSE(kcf_accepts(r, word("x1x2X2", kZ2)));
  CHECK_FALSE(kcf_accepts(r, word("x1X2", kZ2)));
  all_words(kZ2, 5, [&](const Word& w) {
    CHECK(kcf_accepts(r, w) == (z_trivial(w, "x1", "X1") && z_trivial(w, "x2", "X2")));
  });
  auto one = single(one_counter_pda("x", "X"));
  all_words(kZ1, 6, [&](const Word& w) { CHECK(kcf_accepts(one, w) == pda_accepts(one.pdas()[0], w)); });
  CHECK_THROWS_AS(KcfRecognizer({one_counter_pda("x", "X"), one_counter_pda("y", "Y")}), PreconditionViolation);
}

TEST_CASE("direct product") {
  auto trivial = single(all_words_pda({"e"}));
  auto p = direct_product(single(one_counter_pda("x", "X")), trivial);
  const std::vector<Symbol> al{"x", "X", "e"};
  all_words(al, 6, [&](const Word& w) { CHECK(kcf_accepts(p, w) == z_trivial(w, "x", "X")); });
  CHECK_THROWS_AS(direct_product(single(one_counter_pda("x", "X")), single(one_counter_pda("x", "X"))),
                  PreconditionViolation);
}

TEST_CASE("inverse homomorphism") {
  auto r = zk_recognizer(2);
  std::map<Symbol, Word> h{{"z", {"x1", "x2"}}, {"x1", {"x1"}}, {"x2", {"x2"}},
                           {"X1", {"X1"}},      {"X2", {"X2"}}};
  auto g = inverse_homomorphism(r, h);
  const std::vector<Symbol> al{"z", "x1", "x2", "X1", "X2"};
  CHECK(kcf_accepts(g, word("zX1X2", al)));
  CHECK_FALSE(kcf_accepts(g, word("zX1", al)));
  all_words(al, 4, [&](const Word& w) {
    long z = count(w, "z");
    CHECK(kcf_accepts(g, w) == (count(w, "x1") + z == count(w, "X1") && count(w, "x2") + z == count(w, "X2")));
  });

  std::map<Symbol, Word> id{{"x", {"x"}}, {"X", {"X"}}};
  auto same = inverse_homomorphism(single(one_counter_pda("x", "X")), id);
  all_words(kZ1, 6, [&](const Word& w) { CHECK(kcf_accepts(same, w) == z_trivial(w, "x", "X")); });

  std::map<Symbol, Word> erase{{"u", {}}, {"v", {}}};
  auto all = inverse_homomorphism(single(one_counter_pda("x", "X")), erase);
  all_words({"u", "v"}, 4, [&](const Word& w) { CHECK(kcf_accepts(all, w)); });
  auto none = inverse_homomorphism(single(empty_pda({"x"})), std::map<Symbol, Word>{{"u", {}}});
  all_words({"u"}, 3, [&](const Word& w) { CHECK_FALSE(kcf_accepts(none, w)); });
}

TEST_CASE("intersection with regular languages") {
  auto r = single(one_counter_pda("x", "X"));
  auto d = pattern_dfa(kZ1, {{"x", true}, {"X", true}});
  auto s = intersect_regular(r, d);
  CHECK(s.size() == 1);
  all_words(kZ1, 8, [&](const Word& w) {
    bool expected = expand_word(std::string(count(w, "x"), 'x') + std::string(count(w, "X"), 'X'), w) &&
                    count(w, "x") == count(w, "X");
    CHECK(kcf_accepts(s, w) == expected);
  });
  auto u = intersect_regular(r, universal_dfa(kZ1));
  auto e = intersect_regular(r, empty_dfa(kZ1));
  all_words(kZ1, 6, [&](const Word& w) {
    CHECK(kcf_accepts(u, w) == kcf_accepts(r, w));
    CHECK_FALSE(kcf_accepts(e, w));
  });
  CHECK_THROWS_AS(intersect_regular(r, universal_dfa({"x", "y"})), PreconditionViolation);
}

TEST_CASE("union of recognizers") {
  auto xn = intersect_regular(single(one_counter_pda("x", "X")), pattern_dfa(kZ1, {{"x", true}, {"X", true}}));
  Npda star;
  star.states().add("q");
  star.inputs().add("x");
  star.inputs().add("X");
  star.stack().add("Z0");
  star.set_start(0, 0);
  star.set_accepting(0);
  star.add("q", "x", "Z0", "q", {"Z0"});
  star.add("q", "_", "Z0", "q", {});
  auto u = kcf_union(xn, single(star));
  CHECK(kcf_accepts(u, word("xxx", kZ1)));
  CHECK(kcf_accepts(u, word("xxXX", kZ1)));
  CHECK_FALSE(kcf_accepts(u, word("xxX", kZ1)));

  auto r = single(one_counter_pda("x", "X"));
  auto rr = kcf_union(r, r);
  auto re = kcf_union(r, single(empty_pda(kZ1)));
  all_words(kZ1, 6, [&](const Word& w) {
    CHECK(kcf_accepts(rr, w) == kcf_accepts(r, w));
    CHECK(kcf_accepts(re, w) == kcf_accepts(r, w));
  });
  auto two = KcfRecognizer({one_counter_pda("x", "X"), star});
  CHECK(kcf_union(two, two).size() == 4);
}

TEST_CASE("set-level agreement of the constructions on two letters") {
  const std::vector<Symbol> ab{"a", "b"};
  auto l1 = single(one_counter_pda("a", "b"));
  auto l2 = single(pda_times_dfa(all_words_pda(ab), pattern_dfa(ab, {{"a", true}, {"b", true}})));
  auto both = KcfRecognizer({l1.pdas()[0], l2.pdas()[0]});
  auto un = kcf_union(l1, l2);
  auto reg = intersect_regular(l1, pattern_dfa(ab, {{"b", true}, {"a", true}}));
  std::map<Symbol, Word> h{{"a", {"a", "a"}}, {"b", {"b"}}};
  auto inv = inverse_homomorphism(l1, h);
  all_words(ab, 8, [&](const Word& w) {
    bool in1 = count(w, "a") == count(w, "b");
    bool in2 = std::is_sorted(w.begin(), w.end());
    CHECK(kcf_accepts(l2, w) == in2);
    CHECK(kcf_accepts(both, w) == (in1 && in2));
    CHECK(kcf_accepts(un, w) == (in1 || in2));
    CHECK(kcf_accepts(reg, w) == (in1 && std::is_sorted(w.rbegin(), w.rend())));
    CHECK(kcf_accepts(inv, w) == (2 * count(w, "a") == count(w, "b")));
  });
  auto prod = direct_product(single(one_counter_pda("a", "b")), single(one_counter_pda("c", "d")));
  all_words({"a", "b", "c", "d"}, 5, [&](const Word& w) {
    CHECK(kcf_accepts(prod, w) == (z_trivial(w, "a", "b") && z_trivial(w, "c", "d")));
  });
}

TEST_CASE("grammar backend against independent oracles") {
  std::mt19937_64 rng(20261018);
  const std::vector<Symbol> ab{"a", "b"};
  for (int trial = 0; trial < 40; ++trial) {
    auto a = check::random_pda(rng);
    auto cfg = pda_to_cfg(a);
    auto cnf = to_cnf(cfg);
    CompiledPda compiled(a);
    all_words(ab, 7, [&](const Word& w) {
      auto ids = compiled.encode(w);
      bool cyk = cnf_accepts(cnf, ids);
      CHECK(cyk == check::earley_accepts(cfg, ids));
      CHECK(cyk == compiled.accepts(w));
      if (check::explore_accepts(a, w, w.size() * check::max_push(a) + 8)) CHECK(cyk);
    });
  }
}

TEST_CASE("incremental chart matches batch parsing") {
  auto r = zk_recognizer(2);
  KcfMatcher m(r);
  auto cur = m.cursor();
  std::function<void(Word&)> rec = [&](Word& w) {
    CHECK(cur.accepts() == kcf_accepts(r, w));
    CHECK(cur.viable());
    if (w.size() == 4) return;
    for (const auto& s : m.alphabet()) {
      w.push_back(s);
      cur.push(m.symbol(s));
      rec(w);
      cur.pop();
      w.pop_back();
    }
  };
  Word w;
  rec(w);

  auto shape = single(pda_times_dfa(all_words_pda(kZ1), pattern_dfa(kZ1, {{"x", false}, {"X", true}})));
  KcfMatcher ms(shape);
  auto c = ms.cursor();
  c.push(ms.symbol("X"));
  CHECK_FALSE(c.viable());
  c.pop();
  c.push(ms.symbol("x"));
  CHECK(c.viable());
  CHECK(c.accepts());
}

TEST_CASE("wreath recognizer") {
  const std::vector<Symbol> al{"a", "A", "b", "B"};
  auto m1 = build_Mk_wreath(1);
  CHECK(m1.size() == 2);
  CHECK(kcf_accepts(m1, word("AbaABa", al)));
  CHECK_FALSE(kcf_accepts(m1, word("bA", al)));
  CHECK_FALSE(kcf_accepts(m1, word("AbaABB", al)));

  auto m2 = build_Mk_wreath(2);
  CHECK(kcf_accepts(m2, word("bAbaBABa", al)));
  CHECK_FALSE(kcf_accepts(m2, word("AbaAbaABaABa", al)));

  for (std::size_t k : {1, 2}) {
    auto r = build_Mk_wreath(k);
    auto items = wreath_pattern(k);
    all_exponents(4 * k, k == 1 ? 3 : 1, [&](const std::vector<std::size_t>& e) {
      bool ok = true;
      for (std::size_t i = 0; i < 2 * k; ++i) ok = ok && e[2 * i] == e[2 * i + 1];
      for (std::size_t i = 1; i < 2 * k; ++i)
        if (i != k) ok = ok && e[2 * i - 1] < e[2 * i];
      CHECK(kcf_accepts(r, pattern_word(items, e)) == ok);
    });
  }
}

TEST_CASE("abc recognizer") {
  const std::vector<Symbol> al{"a", "A", "b", "B"};
  auto m1 = build_Mk_abc(1);
  CHECK(m1.size() == 3);
  CHECK(kcf_accepts(m1, word("BABa bAba BAba bABa", al)));
  CHECK_FALSE(kcf_accepts(m1, word("BABa bAAbaa BAba bABa", al)));
  CHECK_FALSE(kcf_accepts(m1, word("BABa bAba BAba bAB", al)));

  auto items = abc_pattern(2);
  auto blocks = [&](std::vector<std::size_t> m) {
    std::vector<std::size_t> e;
    for (auto x : m)
      for (int j = 0; j < 4; ++j) e.push_back(x);
    return pattern_word(items, e);
  };
  auto m2 = build_Mk_abc(2);
  CHECK(kcf_accepts(m2, blocks({0, 1, 1, 2})));
  CHECK_FALSE(kcf_accepts(m2, blocks({1, 0, 0, 1})));
  CHECK_FALSE(kcf_accepts(m2, blocks({1, 1, 0, 1})));

  auto items1 = abc_pattern(1);
  all_exponents(8, 1, [&](const std::vector<std::size_t>& e) {
    bool ok = e[0] == e[1] && e[1] == e[2] && e[2] == e[3] && e[4] == e[5] && e[5] == e[6] && e[6] == e[7];
    CHECK(kcf_accepts(m1, pattern_word(items1, e)) == ok);
  });
}

TEST_CASE("text formats round trip") {
  auto oc = one_counter_pda("x", "X");
  auto text = format_pda(oc);
  auto back = parse_pda(text);
  CHECK(format_pda(back) == text);
  all_words(kZ1, 5, [&](const Word& w) { CHECK(pda_accepts(back, w) == pda_accepts(oc, w)); });

  auto d = pattern_dfa(kZ1, {{"x", true}, {"X", false}});
  auto dt = format_dfa(d);
  auto db = parse_dfa(dt);
  CHECK(format_dfa(db) == dt);
  all_words(kZ1, 5, [&](const Word& w) { CHECK(db.accepts(w) == d.accepts(w)); });
  CHECK_THROWS_AS(parse_pda("pda states=q input=x stack=Z\nt q y Z -> q _\nend\n"), ParseError);
}
