#include <random>

#include "doctest.h"
#include "polycf/groups/families.hpp"

using namespace polycf;

namespace {

Word w(const std::string& text, const Group& g) { return tokenize(text, g.alphabet()); }

GcSpec spec(std::vector<long> c) {
  GcSpec s;
  for (long x : c) s.c.push_back(x);
  return s;
}

// Word with a conjugated relator spliced in at a random position.
Word splice(const Word& base, const Word& rel, std::mt19937_64& rng, const Group& g) {
  std::uniform_int_distribution<std::size_t> pos(0, base.size());
  auto at = pos(rng);
  auto by = random_word(g.alphabet(), 3, rng);
  Word r(base.begin(), base.begin() + static_cast<long>(at));
  r = concat(r, conjugate(rel, by));
  return concat(r, Word(base.begin() + static_cast<long>(at), base.end()));
}

std::vector<std::string> all_descriptors() {
  return {"free:2", "free:x,y", "zn:3", "bs:1,2", "bs:2,3", "bs:2,-2", "wreath:p=2", "wreath:p=3", "wreath:Z",
          "gc:-2,1", "gc:1,-2", "gc:-1,0,2", "gc:2,1,-3", "gc:1,1,0,-2", "abc:p=2", "abc:p=3"};
}

}  // namespace

TEST_CASE("free and free abelian groups") {
  FreeGroup f({"x", "y"});
  CHECK(f.is_trivial(w("xyYX", f)));
  CHECK_FALSE(f.is_trivial(w("xyXY", f)));
  CHECK(f.normal_form(w("xyYy", f)) == "x y");
  CHECK_THROWS_AS(f.eval({"z"}), UnknownSymbol);
  ZnGroup z3(3);
  CHECK(in_word_problem(z3, w("x1x2x3X1X2X3", z3)));
  CHECK(z3.normal_form(w("x1x1X3", z3)) == "(2,0,-1)");
}

TEST_CASE("wreath products") {
  WreathGroup c2(2);
  CHECK(c2.is_trivial(w("bb", c2)));
  CHECK_FALSE(c2.is_trivial(w("AbaB", c2)));
  CHECK(c2.normal_form(w("AbaB", c2)) == "shift=0 support={0:1,1:1}");
  CHECK(c2.is_trivial(w("AbaABa", c2)));
  CHECK(c2.is_trivial(w("bAAbaa AAbaa BAABaa", c2)) == false);
  CHECK(c2.is_trivial(w("bAbaBABa", c2)));
  WreathGroup zz(0);
  CHECK_FALSE(zz.is_trivial(w("bB a", zz)));
  CHECK_FALSE(zz.is_trivial(w("bb", zz)));
  CHECK(zz.is_trivial(w("AbaBbABa", zz)));
}

TEST_CASE("Baumslag-Solitar normal forms") {
  BsGroup b12(1, 2);
  CHECK(b12.is_trivial(w("TxtXX", b12)));
  BsGroup b22(2, 2);
  CHECK(b22.is_trivial(w("TxxtXX", b22)));
  BsGroup b23(2, 3);
  CHECK_FALSE(b23.is_trivial(w("TxT", b23)));
  CHECK_FALSE(b23.is_trivial(w("TxtX", b23)));
  CHECK(b23.is_trivial(w("TxxtXXX", b23)));
  // t^-1 x^5 t = t^-1 x^4 t t^-1 x t = x^6 t^-1 x t
  CHECK(BsGroup::to_string(b23.canonical(b23.eval(w("Txxxxxt", b23)))) == "x^6 T x^1 t x^0");
  CHECK(b23.equal(w("Txxxxxt", b23), w("xxxxxxTxt", b23)));
}

TEST_CASE("Gc matrices and specs") {
  CHECK(gc_matrix(spec({-2, 1})) == QMatrix({{Rat(2)}}));
  CHECK(gc_matrix(spec({1, -2})) == QMatrix({{Rat(1, 2)}}));
  CHECK(gc_matrix(spec({-1, 0, 2})) == QMatrix({{Rat(0), Rat(1, 2)}, {Rat(1), Rat(0)}}));
  CHECK(reverse_spec(spec({-2, 1})).c == spec({1, -2}).c);
  CHECK(reverse_spec(reverse_spec(spec({2, 1, -3}))).c == spec({2, 1, -3}).c);
  CHECK(reverse_spec(spec({1, 0, 1})).c == spec({1, 0, 1}).c);
  CHECK(is_polycyclic_case(spec({-1, 3, 1})));
  CHECK_FALSE(is_polycyclic_case(spec({-2, 1})));
  CHECK_FALSE(is_polycyclic_case(spec({1, -2})));
  CHECK_THROWS_AS(validate(spec({2, 4})), PreconditionViolation);
  CHECK_THROWS_AS(validate(spec({0, 1})), PreconditionViolation);
  CHECK_THROWS_AS(validate(spec({3})), PreconditionViolation);
}

TEST_CASE("Gc evaluation") {
  GcGroup g(spec({-2, 1}));
  CHECK(g.is_trivial(w("BBAba", g)));
  auto y = g.eval(w("y", g));
  CHECK(y.shift == 1);
  CHECK(is_zero(y.vec));
  CHECK_FALSE(g.is_trivial(w("y", g)));
  GcGroup h(spec({1, -2}));
  auto e = h.eval(w("Yx1y", h));
  CHECK(e.shift == 0);
  CHECK(e.vec == QVec{Rat(1, 2)});
  GcGroup t(spec({-1, 0, 2}));
  CHECK(t.eval(w("Yx2y", t)).vec == QVec{Rat(1, 2), Rat(0)});
  CHECK(t.eval(w("Ax1a", t)).vec == QVec{Rat(0), Rat(1)});
}

TEST_CASE("abc group") {
  AbcGroup g(2);
  auto bb = g.eval(w("bb", g));
  CHECK(bb.bpart.empty());
  CHECK(bb.cpart.empty());
  auto c = g.eval(w("BABabAba", g));
  CHECK(c.shift == 0);
  CHECK(c.bpart.empty());
  CHECK(c.cpart == std::map<std::int64_t, long>{{1, 1}});
  CHECK(g.is_trivial(power(w("BABabAba", g), 2)));
  AbcGroup g3(3);
  CHECK_FALSE(g3.is_trivial(power(w("BABabAba", g3), 2)));
  CHECK(g3.is_trivial(power(w("BABabAba", g3), 3)));
  CHECK_THROWS_AS(AbcGroup(4), PreconditionViolation);
}

TEST_CASE("relators evaluate to the identity") {
  for (const auto& d : all_descriptors()) {
    auto g = make_group(d);
    CHECK(make_group(g->descriptor())->descriptor() == g->descriptor());
    for (const auto& r : g->relators()) CHECK_MESSAGE(g->is_trivial(r), d << " relator " << format_word(r));
  }
}

TEST_CASE("inverses and relator insertion") {
  std::mt19937_64 rng(7);
  for (const auto& d : all_descriptors()) {
    auto g = make_group(d);
    auto rels = g->relators();
    for (int i = 0; i < 60; ++i) {
      auto u = random_word(g->alphabet(), 1 + i % 12, rng);
      CHECK(g->is_trivial(concat(u, invert_word(u))));
      if (!rels.empty()) {
        auto v = splice(u, rels[static_cast<std::size_t>(i) % rels.size()], rng, *g);
        CHECK_MESSAGE(g->normal_form(v) == g->normal_form(u), d << " " << format_word(u));
      }
    }
  }
}

TEST_CASE("Gc evaluation is a homomorphism") {
  std::mt19937_64 rng(11);
  for (auto c : {spec({-2, 1}), spec({-1, 0, 2}), spec({2, 1, -3})}) {
    GcGroup g(c);
    for (int i = 0; i < 100; ++i) {
      auto u = random_word(g.alphabet(), 8, rng);
      auto v = random_word(g.alphabet(), 8, rng);
      CHECK(g.eval(concat(u, v)) == g.multiply(g.eval(u), g.eval(v)));
    }
  }
}

TEST_CASE("G(-m,1) agrees with BS(1,m)") {
  std::mt19937_64 rng(3);
  for (long m : {2, 3}) {
    BsGroup bs(1, m);
    GcGroup gc(spec({-m, 1}));
    auto translate = [](const Word& u) {
      Word r;
      for (const auto& s : u) r.push_back(s == "x" ? "b" : s == "X" ? "B" : s == "t" ? "a" : "A");
      return r;
    };
    std::vector<Word> words;
    for (int i = 0; i < 150; ++i) words.push_back(random_word(bs.alphabet(), i % 9, rng));
    for (const auto& u : words) CHECK(bs.is_trivial(u) == gc.is_trivial(translate(u)));
    for (std::size_t i = 0; i < words.size(); ++i)
      for (std::size_t j = i + 1; j < words.size(); j += 7)
        CHECK(bs.equal(words[i], words[j]) == gc.equal(translate(words[i]), translate(words[j])));
  }
}

TEST_CASE("reversed coefficients give an isomorphic group") {
  std::mt19937_64 rng(5);
  for (auto c : {spec({-2, 1}), spec({-1, 0, 2}), spec({2, 1, -3})}) {
    GcGroup g(c);
    GcGroup r(reverse_spec(c));
    const std::vector<Symbol> ab{"a", "b", "A", "B"};
    for (int i = 0; i < 100; ++i) {
      auto u = random_word(ab, 6, rng);
      Word v = i % 2 ? concat(u, conjugate(r.defining_relator(), random_word(ab, 3, rng))) : u;
      auto v2 = random_word(ab, 6, rng);
      CHECK(r.is_trivial(v) == g.is_trivial(reverse_translate(v, c.s())));
      CHECK(r.equal(u, v2) == g.equal(reverse_translate(u, c.s()), reverse_translate(v2, c.s())));
      CHECK(g.is_trivial(reverse_translate(r.defining_relator(), c.s())));
    }
  }
}

TEST_CASE("group descriptors") {
  CHECK(make_group("free:3")->alphabet().size() == 6);
  CHECK(make_group("gc:-1,0,2")->alphabet().size() == 10);
  CHECK_THROWS_AS(make_group("bs:1"), PreconditionViolation);
  CHECK_THROWS_AS(make_group("wreath:p=1"), PreconditionViolation);
  CHECK_THROWS_AS(make_group("gc:2,4"), PreconditionViolation);
  CHECK_THROWS_AS(make_group("lie:3"), PreconditionViolation);
  CHECK_THROWS_AS(make_group("zn:x"), PreconditionViolation);
}
