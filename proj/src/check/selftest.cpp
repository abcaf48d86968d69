#include "polycf/check/selftest.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <random>
#include <sstream>

#include "polycf/automata/builders.hpp"
#include "polycf/automata/recognizer.hpp"
#include "polycf/check/oracles.hpp"
#include "polycf/diophantine.hpp"
#include "polycf/groups/families.hpp"
#include "polycf/stratify.hpp"
#include "polycf/witness/gc_pipeline.hpp"
#include "polycf/witness/padic.hpp"
#include "polycf/witness/parikh.hpp"

namespace polycf::check {

void SuiteResult::expect(bool ok, const std::string& what) {
  ++checks;
  if (ok || !passed) return;
  passed = false;
  detail = what;
}

WitnessFamily power_of_two_family(std::size_t limit) {
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
    if (a[0] > 4096) return out;
    Vec0 b(std::vector<Int>{pow_int(2, a[0].get_ui())});
    if (b[0] <= cap && member(a.concat(b))) out.push_back(b);
    return out;
  };
  w.description = "{(n, 2^n) : 1 <= n <= " + std::to_string(limit) + "}";
  return w;
}

namespace {

GcSpec gc(std::vector<long> c) {
  GcSpec s;
  for (long x : c) s.c.push_back(x);
  return s;
}

std::string show(const LinearSet& l) { return format_linear(l); }

std::size_t count(const Word& w, const Symbol& s) {
  return static_cast<std::size_t>(std::count(w.begin(), w.end(), s));
}

// vecset

void member_vs_naive(const SuiteConfig& cfg, SuiteResult& res) {
  std::mt19937_64 rng(cfg.seed);
  const unsigned box = 4 * cfg.box;
  for (unsigned t = 0; t < 10 * cfg.box; ++t) {
    auto l = random_linear_set(1 + t % 3, 3, 3, rng);
    auto grid = BoxGrid::of(SemilinearSet(l), box);
    res.expect(grid == naive_points(l, box, box), "box grid differs from enumeration for " + show(l));
    std::uniform_int_distribution<std::size_t> cell(0, grid.cells() - 1);
    for (int i = 0; i < 20; ++i) {
      auto idx = cell(rng);
      res.expect(member(grid.point(idx), l) == grid.at_index(idx),
                 "member disagrees at " + to_string(grid.point(idx)) + " for " + show(l));
    }
  }
}

void certificates(const SuiteConfig& cfg, SuiteResult& res) {
  std::mt19937_64 rng(cfg.seed + 1);
  for (unsigned t = 0; t < 2 * cfg.box; ++t) {
    SemilinearSet s(2, {random_linear_set(2, 2, 3, rng), random_linear_set(2, 2, 3, rng)});
    BoxGrid g(2, 2 * cfg.box);
    for (std::size_t idx = 0; idx < g.cells(); ++idx) {
      auto v = g.point(idx);
      auto cert = member_certificate(v, s);
      res.expect(cert.has_value() == member(v, s), "certificate presence at " + to_string(v));
      if (cert) res.expect(verify_certificate(v, s, *cert), "certificate does not replay at " + to_string(v));
    }
  }
}

void permutation_and_dimension(const SuiteConfig& cfg, SuiteResult& res) {
  std::mt19937_64 rng(cfg.seed + 2);
  for (unsigned t = 0; t < 4 * cfg.box; ++t) {
    const std::size_t r = 2 + t % 3;
    auto l = random_linear_set(r, 3, 3, rng);
    std::vector<std::size_t> map(r);
    std::iota(map.begin(), map.end(), 0);
    std::shuffle(map.begin(), map.end(), rng);
    Permutation tau(map);
    auto tl = apply_permutation(tau, l);
    res.expect(dimension(tl) == dimension(l), "dimension changed under permutation: " + show(l));
    res.expect(dimension(zero_shadow(l)) == dimension(l), "dimension of L^0 differs: " + show(l));
    BoxGrid g(r, std::min(cfg.box, 4u));
    for (std::size_t idx = 0; idx < g.cells(); ++idx) {
      auto v = g.point(idx);
      res.expect(member(v, l) == member(tau.apply(v), tl), "permuted membership at " + to_string(v));
    }
  }
}

// diophantine

void hilbert_vs_brute(const SuiteConfig& cfg, SuiteResult& res) {
  std::mt19937_64 rng(cfg.seed + 3);
  const unsigned box = std::min(12u, 2 * cfg.box + 2);
  for (unsigned t = 0; t < 3 * cfg.box; ++t) {
    const std::size_t cols = 2 + t % 3, rows = 1 + t % 2;
    auto sys = random_system(rows, cols, 3, rng);
    auto hb = hilbert_basis(sys);
    std::vector<Vec0> inside;
    for (const auto& v : hb)
      if (v.max_entry() <= box) inside.push_back(v);
    res.expect(inside == brute_hilbert_basis(sys, box), "Hilbert basis differs from brute force for\n" +
                                                            format_system(sys));
    for (const auto& v : hb) {
      for (const auto& row : sys.rows) {
        Int acc = 0;
        for (std::size_t j = 0; j < cols; ++j) acc += row[j] * v[j];
        res.expect(acc == 0, "basis element " + to_string(v) + " is not a solution");
      }
    }
  }
}

void intersection_pointwise(const SuiteConfig& cfg, SuiteResult& res) {
  std::mt19937_64 rng(cfg.seed + 4);
  const unsigned box = 3 * cfg.box;
  for (unsigned t = 0; t < 4 * cfg.box; ++t) {
    const std::size_t r = 1 + t % 3;
    const bool zero = t % 5 == 0;
    auto a = random_linear_set(r, 3, 3, rng, zero);
    auto b = random_linear_set(r, 3, 3, rng, zero);
    auto ab = intersect_linear({a, b});
    auto expected = BoxGrid::of(SemilinearSet(a), box);
    expected &= BoxGrid::of(SemilinearSet(b), box);
    res.expect(BoxGrid::of(ab, box) == expected, "intersection differs pointwise: " + show(a) + " / " + show(b));
    res.expect(BoxGrid::of(intersect_linear({b, a}), box) == expected, "intersection not commutative");
    if (zero) {
      res.expect(ab.components().size() == 1 && ab.components()[0].constant().is_zero(),
                 "zero-constant intersection is not a single linear set");
    }
    if (t % 4 == 0) {
      auto c = random_linear_set(r, 2, 3, rng);
      auto left = intersect({ab, SemilinearSet(c)});
      auto right = intersect({SemilinearSet(a), intersect_linear({b, c})});
      res.expect(BoxGrid::of(left, box) == BoxGrid::of(right, box), "intersection not associative");
      res.expect(BoxGrid::of(intersect_linear({a, b, c}), box) == BoxGrid::of(left, box),
                 "triple intersection differs");
    }
  }
}

// stratify

void sk_cover(const SuiteConfig& cfg, SuiteResult& res) {
  for (std::size_t k = 1; k <= 4; ++k) {
    const unsigned box = k <= 3 ? std::min(cfg.box + 1, 6u) : std::min(cfg.box, 4u);
    auto cover = build_Sk_cover(k);
    for (const auto& s : cover) res.expect(is_stratified_period_set(s.periods()), "cover component not stratified");
    auto inter = intersect_linear(cover);
    auto f = build_Snk(1, k);
    auto pred = BoxGrid::from_predicate(2 * k, box, [&](const Vec0& v) { return f.predicate(v); });
    res.expect(BoxGrid::of(inter, box) == pred, "cover intersection differs from S(" + std::to_string(k) + ")");
    res.expect(inter.components().size() == 1 && dimension(inter.components()[0]) == k,
               "cover intersection has the wrong dimension");
  }
}

void snk_presentation(const SuiteConfig& cfg, SuiteResult& res) {
  std::mt19937_64 rng(cfg.seed + 5);
  for (std::size_t n = 1; n <= 3; ++n) {
    for (std::size_t k = 1; k <= 3; ++k) {
      auto f = build_Snk(n, k);
      res.expect(dimension(f.presentation) == k, "S(n,k) dimension");
      const unsigned box = 2 * n * k <= 6 ? std::min(cfg.box, 3u) : 1;
      auto grid = BoxGrid::of(SemilinearSet(f.presentation), box);
      auto pred = BoxGrid::from_predicate(f.dim_ambient(), box, [&](const Vec0& v) { return f.predicate(v); });
      res.expect(grid == pred, "S(" + std::to_string(n) + "," + std::to_string(k) + ") differs on a box");
      // points built from the presentation, then moved by one coordinate
      std::uniform_int_distribution<long> coeff(0, cfg.box);
      std::uniform_int_distribution<std::size_t> coord(0, f.dim_ambient() - 1);
      for (unsigned i = 0; i < 5 * cfg.box; ++i) {
        Vec0 v = f.presentation.constant();
        for (const auto& p : f.presentation.periods()) v = v + p.scaled(coeff(rng));
        res.expect(f.predicate(v) && member(v, f.presentation), "generated point rejected");
        Vec0 w = v + Vec0::unit(f.dim_ambient(), coord(rng));
        res.expect(f.predicate(w) == member(w, f.presentation), "perturbed point " + to_string(w));
      }
    }
  }
}

void crossing_and_blocks(const SuiteConfig& cfg, SuiteResult& res) {
  for (std::size_t k = 2; k <= 5; ++k) {
    const auto f = build_Snk(1, k);
    const auto& ps = f.presentation.periods();
    auto c = check_stratified(ps);
    bool ok = c.kind == StratificationCheck::Kind::Crossing;
    const auto& x = c.coords;
    ok = ok && x[0] < x[1] && x[1] < x[2] && x[2] < x[3];
    ok = ok && ps[c.first][x[0]] != 0 && ps[c.first][x[2]] != 0;
    ok = ok && ps[c.second][x[1]] != 0 && ps[c.second][x[3]] != 0;
    res.expect(ok, "no valid crossing certificate for S(" + std::to_string(k) + ")");
  }
  std::mt19937_64 rng(cfg.seed + 6);
  for (unsigned t = 0; t < 20 * cfg.box; ++t) {
    const std::size_t r = 2 + t % 5;
    auto l = random_stratified(r, 6, rng);
    auto part = partition_PiL(l);
    res.expect(crossing_violations(part).empty(), "crossing found in " + show(l));
    auto basis = perp_block_basis(l);
    res.expect(basis.size() == r - dimension(l), "perp basis size for " + show(l));
    for (const auto& q : basis) {
      for (const auto& p : l.periods()) res.expect(dot(q, p.to_q()) == 0, "perp vector not orthogonal");
      std::vector<std::size_t> classes;
      for (std::size_t i = 0; i < r; ++i)
        if (q[i] != 0) classes.push_back(part.class_of(i));
      bool one = !classes.empty() && std::all_of(classes.begin(), classes.end(),
                                                 [&](std::size_t c) { return c == classes[0]; });
      res.expect(one, "perp vector spans classes for " + show(l));
    }
  }
}

// automata

void grammar_backend(const SuiteConfig& cfg, SuiteResult& res) {
  std::mt19937_64 rng(cfg.seed + 7);
  const std::vector<Symbol> ab{"a", "b"};
  for (unsigned t = 0; t < 4 * cfg.box; ++t) {
    auto a = random_pda(rng);
    auto grammar = pda_to_cfg(a);
    auto cnf = to_cnf(grammar);
    CompiledPda compiled(a);
    for_each_word(ab, cfg.box + 2, [&](const Word& w) {
      auto ids = compiled.encode(w);
      bool cyk = cnf_accepts(cnf, ids);
      res.expect(cyk == earley_accepts(grammar, ids), "CNF and Earley differ on " + format_word(w));
      if (explore_accepts(a, w, w.size() * max_push(a) + 8))
        res.expect(cyk, "explorer accepts but grammar rejects " + format_word(w));
    });
  }
}

void constructions(const SuiteConfig& cfg, SuiteResult& res) {
  const std::vector<Symbol> ab{"a", "b"};
  auto l1 = KcfRecognizer({one_counter_pda("a", "b")});
  auto l2 = KcfRecognizer({pda_times_dfa(all_words_pda(ab), pattern_dfa(ab, {{"a", true}, {"b", true}}))});
  auto both = KcfRecognizer({l1.pdas()[0], l2.pdas()[0]});
  auto un = kcf_union(l1, l2);
  auto reg = intersect_regular(l1, pattern_dfa(ab, {{"b", true}, {"a", true}}));
  auto inv = inverse_homomorphism(l1, {{"a", {"a", "a"}}, {"b", {"b"}}});
  for_each_word(ab, cfg.box + 3, [&](const Word& w) {
    bool in1 = count(w, "a") == count(w, "b");
    bool in2 = std::is_sorted(w.begin(), w.end());
    res.expect(kcf_accepts(both, w) == (in1 && in2), "intersection on " + format_word(w));
    res.expect(kcf_accepts(un, w) == (in1 || in2), "union on " + format_word(w));
    res.expect(kcf_accepts(reg, w) == (in1 && std::is_sorted(w.rbegin(), w.rend())), "regular on " + format_word(w));
    res.expect(kcf_accepts(inv, w) == (2 * count(w, "a") == count(w, "b")), "inverse image on " + format_word(w));
  });
  auto prod = direct_product(KcfRecognizer({one_counter_pda("a", "b")}), KcfRecognizer({one_counter_pda("c", "d")}));
  for_each_word({"a", "b", "c", "d"}, std::min(cfg.box, 6u), [&](const Word& w) {
    bool expected = count(w, "a") == count(w, "b") && count(w, "c") == count(w, "d");
    res.expect(kcf_accepts(prod, w) == expected, "direct product on " + format_word(w));
  });
}

void group_recognizers(const SuiteConfig& cfg, SuiteResult& res) {
  ZnGroup z2(2);
  auto zk = zk_recognizer(2);
  for_each_word(z2.alphabet(), std::min(cfg.box + 1, 7u), [&](const Word& w) {
    res.expect(kcf_accepts(zk, w) == z2.is_trivial(w), "W(Z^2) recognizer on " + format_word(w));
  });
  FreeGroup f2 = FreeGroup::of_rank(2);
  auto free = free_group_pda({"x1", "x2"});
  for_each_word(f2.alphabet(), std::min(cfg.box + 1, 7u), [&](const Word& w) {
    res.expect(pda_accepts(free, w) == f2.is_trivial(w), "free group PDA on " + format_word(w));
  });
}

// groups

const std::vector<std::string>& descriptors() {
  static const std::vector<std::string> d{"free:2",     "free:x,y",   "zn:3",     "bs:1,2",
                                          "bs:2,3",     "wreath:p=2", "wreath:p=3", "wreath:Z",
                                          "gc:-2,1",    "gc:1,-2",    "gc:-1,0,2", "gc:2,1,-3",
                                          "abc:p=2",    "abc:p=3"};
  return d;
}

void relators(const SuiteConfig& cfg, SuiteResult& res) {
  std::mt19937_64 rng(cfg.seed + 8);
  for (const auto& d : descriptors()) {
    auto g = make_group(d);
    auto rels = g->relators();
    for (const auto& r : rels) res.expect(g->is_trivial(r), d + ": relator " + format_word(r) + " is not trivial");
    for (unsigned i = 0; i < 8 * cfg.box; ++i) {
      auto u = random_word(g->alphabet(), 1 + i % 12, rng);
      res.expect(g->is_trivial(concat(u, invert_word(u))), d + ": w w^-1 not trivial for " + format_word(u));
      if (rels.empty()) continue;
      std::uniform_int_distribution<std::size_t> pos(0, u.size());
      auto at = static_cast<long>(pos(rng));
      auto by = random_word(g->alphabet(), 3, rng);
      Word v(u.begin(), u.begin() + at);
      v = concat(v, conjugate(rels[i % rels.size()], by));
      v = concat(v, Word(u.begin() + at, u.end()));
      res.expect(g->normal_form(v) == g->normal_form(u), d + ": relator insertion changed " + format_word(u));
    }
  }
}

void gc_consistency(const SuiteConfig& cfg, SuiteResult& res) {
  std::mt19937_64 rng(cfg.seed + 9);
  const std::vector<Symbol> ab{"a", "b", "A", "B"};
  for (auto c : {gc({-2, 1}), gc({-1, 0, 2}), gc({2, 1, -3})}) {
    GcGroup g(c);
    GcGroup r(reverse_spec(c));
    for (unsigned i = 0; i < 10 * cfg.box; ++i) {
      auto u = random_word(g.alphabet(), 8, rng);
      auto v = random_word(g.alphabet(), 8, rng);
      res.expect(g.eval(concat(u, v)) == g.multiply(g.eval(u), g.eval(v)), "Gc evaluation is not multiplicative");
      auto x = random_word(ab, 6, rng);
      if (i % 2) x = concat(x, conjugate(r.defining_relator(), random_word(ab, 3, rng)));
      res.expect(r.is_trivial(x) == g.is_trivial(reverse_translate(x, c.s())), "reversed coefficients disagree");
    }
  }
  for (long m : {2L, 3L}) {
    BsGroup bs(1, m);
    GcGroup g(gc({-m, 1}));
    for (unsigned i = 0; i < 10 * cfg.box; ++i) {
      auto u = random_word(bs.alphabet(), i % 13, rng);
      Word t;
      for (const auto& s : u) t.push_back(s == "x" ? "b" : s == "X" ? "B" : s == "t" ? "a" : "A");
      res.expect(bs.is_trivial(u) == g.is_trivial(t), "BS(1," + std::to_string(m) + ") and G differ on " +
                                                          format_word(u));
    }
  }
}

// witness

void complex_constant(const SuiteConfig& cfg, SuiteResult& res) {
  std::mt19937_64 rng(cfg.seed + 10);
  for (unsigned t = 0; t < 4 * cfg.box; ++t) {
    const std::size_t r = 1 + t % 2, s = 1 + (t / 2) % 2;
    SemilinearSet S(r + s, {random_linear_set(r + s, 3, 3, rng), random_linear_set(r + s, 3, 3, rng)});
    const Int C = complex_period_constant(S, r, s).C;
    for (const auto& l : S.components()) {
      std::vector<Vec0> complex;
      for (const auto& p : l.periods())
        if (!p.slice(0, r).is_zero()) complex.push_back(p);
      std::vector<unsigned> alpha(complex.size(), 0);
      while (true) {
        Vec0 v = l.constant();
        for (std::size_t i = 0; i < complex.size(); ++i) v = v + complex[i].scaled(alpha[i]);
        const Int sig = v.slice(0, r).sigma();
        if (sig > 0)
          for (std::size_t j = r; j < r + s; ++j) res.expect(v[j] < C * sig, "complex bound fails at " + to_string(v));
        std::size_t i = 0;
        while (i < alpha.size() && alpha[i] == cfg.box) alpha[i++] = 0;
        if (i == alpha.size()) break;
        ++alpha[i];
      }
    }
  }
}

void gc_growth(const SuiteConfig& cfg, SuiteResult& res) {
  const std::size_t depth = 2 * cfg.box;
  for (auto c : {gc({1, -2}), gc({-1, 0, 2}), gc({2, 1, -3})}) {
    auto st = gc_pipeline(c, depth);
    PadicCtx ctx(st.p);
    for (std::size_t k = 1; k <= depth; ++k) {
      res.expect(st.iota[k - 1] <= k * st.s(), "iota_k exceeds k s");
      res.expect(ctx.vbar_at_least(st.power_of(st.iota[k - 1])(st.N - 1, st.s() - 1), static_cast<long>(k)),
                 "valuation below k at iota_k");
      res.expect(st.lambda[k - 1] >= pow_int(st.p, k), "lambda_k below p^k");
    }
  }
  const std::size_t top = std::min<std::size_t>(cfg.box, 6);
  auto st = gc_pipeline(gc({1, -2}), top + 8);
  auto lang = gc_witness_language(st, top, Int(1) << (2 * top + 2));
  GcGroup g(st.spec);
  for (const auto& v : lang.phi) res.expect(g.is_trivial(gc_lprime_word(st, v)), "Phi member not in W(G)");
  std::vector<std::size_t> levels(top);
  std::iota(levels.begin(), levels.end(), 1);
  res.expect(check_witness_family(lang.family, levels, Int(1) << 10).passed(), "Gc witness family fails");
}

void phi_sets(const SuiteConfig& cfg, SuiteResult& res) {
  const unsigned cap = std::min(cfg.box, 3u);
  for (std::size_t k = 1; k <= 2; ++k) {
    auto st = phi_structure(wreath_Lk_phi(2, k, cap), 2, k);
    res.expect(st.inside_Snk && st.increasing && st.difference_rank == k, "wreath Phi structure, k=" + std::to_string(k));
  }
  auto st = phi_structure(abc_Lk_phi(2, 1, std::min(cap, 2u)), 4, 1);
  res.expect(st.inside_Snk && st.increasing && st.difference_rank == 1, "abc Phi structure, k=1");
}

void refutation(const SuiteConfig& cfg, SuiteResult& res) {
  std::mt19937_64 rng(cfg.seed + 11);
  auto w = power_of_two_family(1024);
  for (unsigned t = 0; t < 2 * cfg.box; ++t) {
    std::uniform_int_distribution<std::size_t> comps(1, 3);
    std::vector<LinearSet> ls;
    for (std::size_t i = comps(rng); i > 0; --i) ls.push_back(random_linear_set(2, 3, 3, rng));
    SemilinearSet S(2, ls);
    auto cert = refute_presentation(S, w, Int(1) << 10);
    res.expect(cert.kind != RefutationCertificate::Kind::Indeterminate, "no refutation for " + format_semilinear(S));
    res.expect(verify_refutation(S, w, cert), "refutation does not replay for " + format_semilinear(S));
  }
}

}  // namespace

const std::vector<Suite>& suites() {
  static const std::vector<Suite> all{
      {"vecset.member_vs_enumeration", member_vs_naive},
      {"vecset.certificates", certificates},
      {"vecset.permutation_dimension", permutation_and_dimension},
      {"diophantine.hilbert_vs_brute_force", hilbert_vs_brute},
      {"diophantine.intersection_pointwise", intersection_pointwise},
      {"stratify.sk_cover", sk_cover},
      {"stratify.snk_presentation", snk_presentation},
      {"stratify.crossing_and_blocks", crossing_and_blocks},
      {"automata.grammar_backend", grammar_backend},
      {"automata.constructions", constructions},
      {"automata.group_recognizers", group_recognizers},
      {"groups.relators", relators},
      {"groups.gc_consistency", gc_consistency},
      {"witness.complex_constant", complex_constant},
      {"witness.gc_growth", gc_growth},
      {"witness.phi_sets", phi_sets},
      {"witness.refutation", refutation},
  };
  return all;
}

SuiteResult run_suite(const Suite& s, const SuiteConfig& cfg) {
  SuiteResult res;
  res.name = s.name;
  auto start = std::chrono::steady_clock::now();
  try {
    s.body(cfg, res);
  } catch (const std::exception& e) {
    res.passed = false;
    res.detail = std::string("exception: ") + e.what();
  }
  res.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return res;
}

std::vector<SuiteResult> run_selftest(const SuiteConfig& cfg, const std::string& prefix) {
  std::vector<SuiteResult> out;
  for (const auto& s : suites())
    if (s.name.rfind(prefix, 0) == 0) out.push_back(run_suite(s, cfg));
  return out;
}

}  // namespace polycf::check
