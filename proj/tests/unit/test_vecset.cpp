#include <random>

#include "doctest.h"
#include "polycf/error.hpp"
#include "polycf/vecset.hpp"

using namespace polycf;

namespace {

Vec0 e(std::size_t r, std::size_t i) { return Vec0::unit(r, i - 1); }

}  // namespace

TEST_CASE("member on paired coordinates") {
  LinearSet s(Vec0::zero(4), {e(4, 1) + e(4, 3), e(4, 2) + e(4, 4)});
  CHECK(member(Vec0{2, 3, 2, 3}, s));
  CHECK_FALSE(member(Vec0{1, 0, 0, 1}, s));
  auto alpha = solve_member(Vec0{2, 3, 2, 3}, s);
  REQUIRE(alpha);
  CHECK((*alpha)[0] == 2);
  CHECK((*alpha)[1] == 3);
}

TEST_CASE("member with nonzero constant") {
  LinearSet l(Vec0{1, 2}, {Vec0{1, 3}});
  CHECK(member(Vec0{4, 11}, l));
  CHECK_FALSE(member(Vec0{4, 10}, l));
  CHECK_FALSE(member(Vec0{0, 0}, l));
}

TEST_CASE("member rejects wrong dimension") {
  LinearSet l(Vec0{0, 0}, {});
  CHECK_THROWS_AS(member(Vec0{1}, l), DimensionMismatch);
}

TEST_CASE("zero periods are ignored") {
  LinearSet l(Vec0{1}, {Vec0{0}, Vec0{2}});
  CHECK(member(Vec0{5}, l));
  CHECK_FALSE(member(Vec0{4}, l));
}

TEST_CASE("dimension") {
  CHECK(dimension(LinearSet(Vec0::zero(4), {e(4, 1) + e(4, 3), e(4, 2) + e(4, 4)})) == 2);
  CHECK(dimension(LinearSet(Vec0{3, 1}, {})) == 0);
  CHECK(dimension(LinearSet(Vec0::zero(2), {Vec0{1, 2}, Vec0{2, 4}, Vec0{0, 1}})) == 2);
}

TEST_CASE("rational hull") {
  auto h = rational_hull(LinearSet(Vec0::zero(1), {Vec0{1}}));
  CHECK(h.basis.size() == 1);
  auto h2 = rational_hull(LinearSet(Vec0{1, 1}, {Vec0{1, 1}}));
  CHECK(h2.point == QVec{1, 1});
  CHECK(h2.basis == std::vector<QVec>{QVec{1, 1}});
  auto h3 = rational_hull(LinearSet(Vec0::zero(2), {Vec0{2, 1}, Vec0{4, 2}}));
  CHECK(h3.basis == std::vector<QVec>{QVec{2, 1}});
}

TEST_CASE("zero shadow") {
  auto z = zero_shadow(LinearSet(Vec0{1, 2}, {Vec0{1, 3}}));
  CHECK(z == LinearSet(Vec0{0, 0}, {Vec0{1, 3}}));
  CHECK(zero_shadow(z) == z);
  CHECK(zero_shadow(LinearSet(Vec0{5}, {})) == LinearSet(Vec0{0}, {}));
}

TEST_CASE("permutation action") {
  auto tau = Permutation::transposition(4, 1, 2);
  auto l = apply_permutation(tau, LinearSet(Vec0::zero(4), {Vec0{0, 1, 2, 0}}));
  CHECK(l.periods().front() == Vec0{0, 2, 1, 0});
  SemilinearSet s(LinearSet(Vec0{1, 0, 3}, {Vec0{1, 2, 0}}));
  CHECK(apply_permutation(Permutation::identity(3), s) == s);
  auto t = Permutation::transposition(3, 0, 1);
  CHECK(apply_permutation(t, apply_permutation(t, s)) == s);
  CHECK_THROWS_AS(apply_permutation(Permutation::identity(2), s), DimensionMismatch);
  CHECK_THROWS_AS(Permutation({0, 0}), PreconditionViolation);
}

TEST_CASE("union") {
  SemilinearSet s(LinearSet(Vec0::zero(2), {Vec0{1, 0}}));
  CHECK(set_union(s, SemilinearSet(2)) == s);
  auto two = set_union(s, SemilinearSet(LinearSet(Vec0{0, 1}, {})));
  CHECK(two.components().size() == 2);
  CHECK(set_union(s, s) == s);
  CHECK_THROWS_AS(set_union(s, SemilinearSet(3)), DimensionMismatch);
}

TEST_CASE("text round trip") {
  auto s = parse_semilinear("slset\nlin c= 0 0 0 0 | p= 1 0 1 0 ; p= 0 1 0 1\nlin c= 1 1 1 1\nend\n");
  CHECK(s.dim_ambient() == 4);
  CHECK(s.components().size() == 2);
  CHECK(parse_semilinear(format_semilinear(s)) == s);
  CHECK(parse_vector_line("v: 2 3 2 3") == Vec0{2, 3, 2, 3});
  auto empty = parse_semilinear("slset r=3\nend\n");
  CHECK(empty.empty());
  CHECK(empty.dim_ambient() == 3);
}

TEST_CASE("parse errors carry line numbers") {
  try {
    parse_semilinear("slset\nlin c= 0 0 | p= 1\nend\n");
    FAIL("expected ParseError");
  } catch (const ParseError& err) {
    CHECK(err.line() == 2);
  }
  CHECK_THROWS_AS(parse_vector_line("v: 1 -2"), ParseError);
  CHECK_THROWS_AS(parse_vector_line("v: 1 x"), ParseError);
  CHECK_THROWS_AS(parse_semilinear("slset\nlin c= 1\n"), ParseError);
}

TEST_CASE("certificates replay") {
  SemilinearSet s(2, {LinearSet(Vec0{0, 1}, {Vec0{2, 0}}), LinearSet(Vec0{1, 0}, {Vec0{1, 1}, Vec0{0, 3}})});
  for (long a = 0; a <= 8; ++a) {
    for (long b = 0; b <= 8; ++b) {
      Vec0 v{a, b};
      auto cert = member_certificate(v, s);
      if (cert) CHECK(verify_certificate(v, s, *cert));
    }
  }
}

TEST_CASE("box grid matches pointwise membership") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> entry(0, 3), count(0, 3);
  for (int trial = 0; trial < 40; ++trial) {
    std::size_t r = 1 + trial % 3;
    auto rand_vec = [&] {
      std::vector<Int> v(r);
      for (auto& x : v) x = entry(rng);
      return Vec0(v);
    };
    std::vector<Vec0> ps;
    for (int i = count(rng); i > 0; --i) ps.push_back(rand_vec());
    LinearSet l(rand_vec(), ps);
    auto grid = BoxGrid::of(SemilinearSet(l), 9);
    for (std::size_t idx = 0; idx < grid.cells(); ++idx) {
      CHECK(grid.at_index(idx) == member(grid.point(idx), l));
    }
  }
}

TEST_CASE("permutation preserves membership on a box") {
  LinearSet l(Vec0{1, 0, 2}, {Vec0{1, 1, 0}, Vec0{0, 2, 1}});
  auto tau = Permutation({2, 0, 1});
  auto tl = apply_permutation(tau, l);
  CHECK(dimension(tl) == dimension(l));
  CHECK(dimension(zero_shadow(l)) == dimension(l));
  BoxGrid g(3, 6);
  for (std::size_t idx = 0; idx < g.cells(); ++idx) {
    auto v = g.point(idx);
    CHECK(member(v, l) == member(tau.apply(v), tl));
  }
}
