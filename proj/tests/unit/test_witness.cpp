#include <random>

#include "doctest.h"
#include "polycf/stratify.hpp"
#include "polycf/witness/gc_pipeline.hpp"
#include "polycf/witness/parikh.hpp"

using namespace polycf;

namespace {

GcSpec spec(std::vector<long> c) {
  GcSpec s;
  for (long x : c) s.c.push_back(x);
  return s;
}

// L = {(n, 2^n) : 1 <= n <= limit}.
WitnessFamily exp_family(std::size_t limit = 1024) {
  WitnessFamily w;
  w.r = 1;
  w.s = 1;
  w.a_of = [](std::size_t k) {
    long n = 1;
    while (pow_int(2, static_cast<unsigned long>(n)) < Int(static_cast<long>(k)) * n) ++n;
    return Vec0{n};
  };
  w.f = [](std::size_t k) { return Int(static_cast<long>(k)); };
  w.member = [limit](const Vec0& v) {
    return v[0] >= 1 && v[0] <= static_cast<long>(limit) && v[1] == pow_int(2, v[0].get_ui());
  };
  w.enumerate_b = [member = w.member](const Vec0& a, const Int& cap) {
    std::vector<Vec0> out;
    Vec0 b(std::vector<Int>{pow_int(2, a[0].get_ui())});
    if (b[0] <= cap && member(a.concat(b))) out.push_back(b);
    return out;
  };
  return w;
}

WitnessFamily predicate_family(std::function<bool(const Vec0&)> member) {
  WitnessFamily w;
  w.a_of = [](std::size_t k) { return Vec0{static_cast<long>(k)}; };
  w.f = [](std::size_t k) { return Int(static_cast<long>(k)); };
  w.member = member;
  w.enumerate_b = box_enumerator(member, 1);
  return w;
}

SemilinearSet one(LinearSet l) { return SemilinearSet(std::move(l)); }

}  // namespace

TEST_CASE("complex period constant") {
  auto c = complex_period_constant(one(LinearSet(Vec0{1, 2}, {Vec0{1, 3}})), 1, 1);
  CHECK(c.t == 4);
  CHECK(c.q == 2);
  CHECK(c.C == 8);
  auto simple = complex_period_constant(one(LinearSet(Vec0{0, 3}, {Vec0{0, 1}})), 1, 1);
  CHECK(simple.t == 1);
  CHECK(simple.C == 6);
  auto bare = complex_period_constant(one(LinearSet(Vec0{0, 0}, {})), 1, 1);
  CHECK(bare.C == 2);
  CHECK(complex_period_constant(SemilinearSet(2, {}), 1, 1).C == 2);
  CHECK_THROWS_AS(complex_period_constant(SemilinearSet(3, {}), 1, 1), DimensionMismatch);
}

TEST_CASE("complex period bound holds on enumerated elements") {
  std::mt19937 rng(99);
  std::uniform_int_distribution<long> entry(0, 3);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t r = 1 + trial % 2, s = 1 + (trial / 2) % 2;
    std::vector<LinearSet> comps;
    for (int c = 0; c < 2; ++c) {
      std::vector<Int> base;
      for (std::size_t i = 0; i < r + s; ++i) base.push_back(entry(rng));
      std::vector<Vec0> periods;
      for (int p = 0; p < 3; ++p) {
        std::vector<Int> v;
        for (std::size_t i = 0; i < r + s; ++i) v.push_back(entry(rng));
        periods.emplace_back(v);
      }
      comps.emplace_back(Vec0(base), periods);
    }
    SemilinearSet S(r + s, comps);
    const Int C = complex_period_constant(S, r, s).C;
    for (const auto& l : S.components()) {
      std::vector<Vec0> complex;
      for (const auto& p : l.periods())
        if (!p.slice(0, r).is_zero()) complex.push_back(p);
      std::vector<long> alpha(complex.size(), 0);
      while (true) {
        Vec0 v = l.constant();
        for (std::size_t i = 0; i < complex.size(); ++i) v = v + complex[i].scaled(alpha[i]);
        const Int sig = v.slice(0, r).sigma();
        if (sig > 0)
          for (std::size_t j = r; j < r + s; ++j) CHECK(v[j] < C * sig);
        std::size_t i = 0;
        while (i < alpha.size() && alpha[i] == 6) alpha[i++] = 0;
        if (i == alpha.size()) break;
        ++alpha[i];
      }
    }
  }
}

TEST_CASE("witness family conditions") {
  auto good = check_witness_family(exp_family(), {1, 2, 3, 4, 5, 6, 7, 8}, 1024);
  CHECK(good.passed());
  CHECK(good.levels.size() == 8);

  auto diag = check_witness_family(predicate_family([](const Vec0& v) { return v[0] == v[1]; }), {1, 2, 3}, 20);
  CHECK(diag.levels[0].large);
  CHECK_FALSE(diag.levels[1].large);
  CHECK_FALSE(diag.levels[2].large);
  CHECK_FALSE(diag.passed());

  auto all = check_witness_family(predicate_family([](const Vec0&) { return true; }), {1, 2, 3}, 30);
  CHECK_FALSE(all.levels[1].separated);
  CHECK_FALSE(all.passed());

  auto small = check_witness_family(exp_family(), {8}, 10);
  CHECK_FALSE(small.levels[0].exists.has_value());
  CHECK(small.to_text().find("indeterminate") != std::string::npos);
}

TEST_CASE("refuting explicit presentations") {
  auto w = exp_family();
  auto diag = one(LinearSet(Vec0{0, 0}, {Vec0{1, 1}}));
  auto c1 = refute_presentation(diag, w, Int(1) << 20);
  CHECK(c1.kind == RefutationCertificate::Kind::InLNotInS);
  CHECK(verify_refutation(diag, w, c1));

  auto plane = one(LinearSet(Vec0{0, 0}, {Vec0{1, 0}, Vec0{0, 1}}));
  auto c2 = refute_presentation(plane, w, Int(1) << 20);
  CHECK(c2.kind == RefutationCertificate::Kind::InSNotInL);
  CHECK(verify_refutation(plane, w, c2));
  CHECK(member(c2.point, plane));
  CHECK_FALSE(w.member(c2.point));

  auto mixed = SemilinearSet(2, {LinearSet(Vec0{0, 0}, {Vec0{1, 2}}), LinearSet(Vec0{0, 0}, {Vec0{0, 1}})});
  auto c3 = refute_presentation(mixed, w, Int(1) << 20);
  CHECK(c3.kind != RefutationCertificate::Kind::Indeterminate);
  CHECK(verify_refutation(mixed, w, c3));

  auto none = SemilinearSet(2, {});
  auto c4 = refute_presentation(none, w, Int(1) << 20);
  CHECK(c4.kind == RefutationCertificate::Kind::InLNotInS);
  CHECK(verify_refutation(none, w, c4));

  // A forged certificate does not replay.
  auto forged = c1;
  forged.point = Vec0{3, 3};
  CHECK_FALSE(verify_refutation(diag, w, forged));
}

TEST_CASE("bounded Parikh images") {
  ZnGroup z1(1);
  auto zx = bounded_parikh([&](const Word& w) { return z1.is_trivial(w); }, {{"x1"}, {"X1"}}, 3);
  CHECK(zx == std::vector<Vec0>{Vec0{0, 0}, Vec0{1, 1}, Vec0{2, 2}, Vec0{3, 3}});

  ZnGroup z2(2);
  auto diag = bounded_parikh([&](const Word& w) { return z2.is_trivial(w); }, {{"x1"}, {"x2"}, {"X1"}, {"X2"}}, 2);
  CHECK(diag.size() == 9);
  for (const auto& v : diag) {
    CHECK(v[0] == v[2]);
    CHECK(v[1] == v[3]);
  }
  auto via_pda = bounded_parikh(zk_recognizer(2), {{{"x1"}}, {{"x2"}}, {{"X1"}}, {{"X2"}}}, 2);
  CHECK(via_pda == diag);

  auto l2 = bounded_parikh([](const Word& w) { return membership_Lnk(w, 1, 2); }, {{"a1"}, {"a2"}, {"a3"}, {"a4"}}, 2);
  auto fam = build_Snk(1, 2);
  std::size_t expected = 0;
  BoxGrid box(4, 2);
  for (std::size_t i = 0; i < box.cells(); ++i) expected += fam.predicate(box.point(i));
  CHECK(l2.size() == expected);
  for (const auto& v : l2) CHECK(fam.predicate(v));
}

TEST_CASE("Gc pipeline") {
  auto st = gc_pipeline(spec({1, -2}), 12);
  CHECK(st.M == QMatrix({{Rat(1, 2)}}));
  CHECK(st.p == 2);
  CHECK(st.N == 1);
  CHECK(st.types == std::vector<int>{1});
  for (std::size_t k = 1; k <= 12; ++k) {
    CHECK(st.iota[k - 1] == k);
    CHECK(st.ell.at(k) == pow_int(2, k));
    CHECK(st.lambda[k - 1] == pow_int(2, k));
  }
  auto rev = gc_pipeline(spec({-2, 1}), 4);
  CHECK(rev.reversed);
  CHECK(rev.spec.c == spec({1, -2}).c);

  for (auto c : {spec({-1, 0, 2}), spec({2, 1, -3}), spec({1, 1, 0, -2})}) {
    auto g = gc_pipeline(c, 10);
    PadicCtx ctx(g.p);
    for (std::size_t k = 1; k <= 10; ++k) {
      CHECK(g.iota[k - 1] <= k * g.s());
      CHECK(ctx.vbar_at_least(g.power_of(g.iota[k - 1])(g.N - 1, g.s() - 1), static_cast<long>(k)));
      CHECK(g.lambda[k - 1] >= pow_int(g.p, k));
    }
    CHECK_FALSE(g.n_seq.empty());
    CHECK(g.to_text().find("iota_k") != std::string::npos);
  }
  auto t = gc_pipeline(spec({-1, 0, 2}), 6);
  CHECK(t.iota == std::vector<std::size_t>{1, 3, 5, 7, 9, 11});
  CHECK_THROWS_AS(gc_pipeline(spec({-1, 3, 1}), 4), NotProper);
}

TEST_CASE("Gc witness language") {
  auto st = gc_pipeline(spec({1, -2}), 10);
  auto l3 = gc_witness_language(st, 3, 64);
  CHECK(std::find(l3.phi.begin(), l3.phi.end(), Vec0{3, 8, 3, 1}) != l3.phi.end());
  CHECK(std::find(l3.tau_phi.begin(), l3.tau_phi.end(), Vec0{3, 3, 8, 1}) != l3.tau_phi.end());
  for (const auto& v : l3.phi) CHECK(v[1] % 8 == 0);
  GcGroup g(st.spec);
  for (const auto& v : l3.phi) CHECK(g.is_trivial(gc_lprime_word(st, v)));
  CHECK_FALSE(g.is_trivial(gc_lprime_word(st, Vec0{3, 4, 3, 1})));
  auto l1 = gc_witness_language(st, 1, 16);
  CHECK(std::find(l1.phi.begin(), l1.phi.end(), Vec0{1, 2, 1, 1}) != l1.phi.end());

  auto rep = check_witness_family(l3.family, {1, 2, 3, 4, 5, 6}, 1024);
  CHECK(rep.passed());
}

TEST_CASE("wreath Phi sets") {
  auto k1 = wreath_Lk_phi(2, 1, 3);
  CHECK(k1 == std::vector<Vec0>{Vec0{0, 0, 0, 0}, Vec0{1, 1, 1, 1}, Vec0{2, 2, 2, 2}, Vec0{3, 3, 3, 3}});
  auto k2 = wreath_Lk_phi(2, 2, 3);
  CHECK(std::find(k2.begin(), k2.end(), Vec0{0, 0, 1, 1, 0, 0, 1, 1}) != k2.end());
  CHECK(std::find(k2.begin(), k2.end(), Vec0{0, 0, 1, 1, 1, 1, 0, 0}) == k2.end());
  CHECK(k2.size() == 6);
  auto st = phi_structure(k2, 2, 2);
  CHECK(st.inside_Snk);
  CHECK(st.increasing);
  CHECK(st.difference_rank == 2);
  CHECK(wreath_Lk_phi(0, 2, 2).size() == 3);
}

TEST_CASE("abc Phi sets") {
  auto k1 = abc_Lk_phi(2, 1, 2);
  CHECK(k1.size() == 3);
  for (const auto& v : k1)
    for (std::size_t i = 1; i < 8; ++i) CHECK(v[i] == v[0]);
  auto k2 = abc_Lk_phi(3, 2, 2);
  CHECK(k2.size() == 3);
  auto st = phi_structure(k2, 4, 2);
  CHECK(st.inside_Snk);
  CHECK(st.increasing);
  CHECK(st.difference_rank == 2);
}
