#include <random>

#include "doctest.h"
#include "polycf/diophantine.hpp"
#include "polycf/stratify.hpp"

using namespace polycf;

namespace {

Vec0 e(std::size_t r, std::size_t i) { return Vec0::unit(r, i - 1); }

}  // namespace

TEST_CASE("syntactic stratification") {
  CHECK(is_stratified_period_set({e(2, 1) + e(2, 2)}));
  auto cross = check_stratified({e(4, 1) + e(4, 3), e(4, 2) + e(4, 4)});
  CHECK(cross.kind == StratificationCheck::Kind::Crossing);
  CHECK(cross.coords == std::array<std::size_t, 4>{0, 1, 2, 3});
  auto three = check_stratified({Vec0{1, 1, 1, 0}});
  CHECK(three.kind == StratificationCheck::Kind::TooManyNonzero);
  CHECK(three.first == 0);
  // Nested and disjoint pairs are fine.
  CHECK(is_stratified_period_set({e(4, 1) + e(4, 4), e(4, 2) + e(4, 3)}));
  CHECK(is_stratified_period_set({e(4, 1) + e(4, 2), e(4, 3) + e(4, 4)}));
}

TEST_CASE("partition of coordinates") {
  CHECK(to_string(partition_PiL(LinearSet(Vec0::zero(3), {e(3, 1) + e(3, 2)}))) == "{{1,2},{3}}");
  CHECK(to_string(partition_PiL(LinearSet(Vec0::zero(3), {Vec0{2, 1, 0}, Vec0{0, 1, 3}}))) == "{{1,2,3}}");
  CHECK(to_string(partition_PiL(LinearSet(Vec0::zero(2), {}))) == "{{1},{2}}");
  CHECK_THROWS_AS(partition_PiL(LinearSet(Vec0::zero(4), {e(4, 1) + e(4, 3), e(4, 2) + e(4, 4)})), NotStratified);
}

TEST_CASE("crossing property on concrete partitions") {
  Partition p(4, {{0, 2}, {1}, {3}});
  CHECK(check_no_crossing(p, 0, 1, 2, 3));
  Partition singletons(4, {{0}, {1}, {2}, {3}});
  CHECK(check_no_crossing(singletons, 0, 1, 2, 3));
  Partition bad(4, {{0, 2}, {1, 3}});
  CHECK_FALSE(check_no_crossing(bad, 0, 1, 2, 3));
  CHECK_THROWS_AS(check_no_crossing(p, 0, 2, 1, 3), PreconditionViolation);
  CHECK_THROWS_AS(check_no_crossing(Partition(4, {{0, 1}, {2}, {3}}), 0, 1, 2, 3), PreconditionViolation);
}

TEST_CASE("crossing property on random stratified sets") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t r = 4 + trial % 3;
    std::uniform_int_distribution<std::size_t> idx(0, r - 1);
    std::uniform_int_distribution<long> val(1, 3);
    std::vector<Vec0> ps;
    for (int t = 0; t < 6; ++t) {
      std::size_t i = idx(rng), j = idx(rng);
      Vec0 v = Vec0::unit(r, i).scaled(val(rng));
      if (i != j) v = v + Vec0::unit(r, j).scaled(val(rng));
      ps.push_back(v);
      if (!is_stratified_period_set(ps)) ps.pop_back();
    }
    auto part = partition_PiL(LinearSet(Vec0::zero(r), ps));
    CHECK(crossing_violations(part).empty());
  }
}

TEST_CASE("perp block basis") {
  CHECK(perp_block_basis(LinearSet(Vec0::zero(2), {e(2, 1) + e(2, 2)})) == std::vector<QVec>{QVec{1, -1}});
  CHECK(perp_block_basis(LinearSet(Vec0::zero(2), {e(2, 1), e(2, 2)})).empty());
  CHECK(perp_block_basis(LinearSet(Vec0::zero(2), {Vec0{2, 1}})) == std::vector<QVec>{QVec{1, -2}});
  CHECK_THROWS_AS(perp_block_basis(LinearSet(Vec0{1, 0}, {})), PreconditionViolation);
}

TEST_CASE("S(n,k) presentation") {
  auto s2 = build_Snk(1, 2);
  CHECK(s2.presentation == LinearSet(Vec0::zero(4), {e(4, 1) + e(4, 3), e(4, 2) + e(4, 4)}));
  CHECK(dimension(s2.presentation) == 2);
  auto s22 = build_Snk(2, 2);
  CHECK(s22.predicate(Vec0{1, 1, 5, 5, 1, 1, 5, 5}));
  CHECK(member(Vec0{1, 1, 5, 5, 1, 1, 5, 5}, s22.presentation));
  CHECK_FALSE(build_Snk(1, 3).predicate(Vec0{1, 2, 3, 1, 2, 4}));
}

TEST_CASE("S(n,k) presentation agrees with predicate") {
  for (std::size_t n = 1; n <= 3; ++n) {
    for (std::size_t k = 1; k <= 3; ++k) {
      auto f = build_Snk(n, k);
      CHECK(dimension(f.presentation) == k);
      unsigned box = 2 * n * k <= 6 ? 3 : 1;
      auto grid = BoxGrid::of(SemilinearSet(f.presentation), box);
      auto pred = BoxGrid::from_predicate(f.dim_ambient(), box, [&](const Vec0& v) { return f.predicate(v); });
      CHECK(grid == pred);
    }
  }
}

TEST_CASE("S(k) covers") {
  auto c1 = build_Sk_cover(1);
  REQUIRE(c1.size() == 1);
  CHECK(c1[0] == LinearSet(Vec0::zero(2), {e(2, 1) + e(2, 2)}));
  auto c2 = build_Sk_cover(2);
  CHECK(c2[0] == LinearSet(Vec0::zero(4), {e(4, 1) + e(4, 3), e(4, 2), e(4, 4)}));
  CHECK(c2[1] == LinearSet(Vec0::zero(4), {e(4, 2) + e(4, 4), e(4, 1), e(4, 3)}));
  for (std::size_t k = 1; k <= 4; ++k) {
    for (const auto& s : build_Sk_cover(k)) CHECK(is_stratified_period_set(s.periods()));
  }
  auto s3 = intersect_linear(build_Sk_cover(3));
  auto f = build_Snk(1, 3);
  CHECK(BoxGrid::of(s3, 4) == BoxGrid::from_predicate(6, 4, [&](const Vec0& v) { return f.predicate(v); }));
}

TEST_CASE("canonical S(k) periods cross") {
  for (std::size_t k = 2; k <= 5; ++k) {
    auto c = check_stratified(build_Snk(1, k).presentation.periods());
    CHECK(c.kind == StratificationCheck::Kind::Crossing);
  }
}

TEST_CASE("L(n,k) membership") {
  std::vector<std::string> w;
  auto push = [&](const std::string& s, int times) {
    for (int i = 0; i < times; ++i) w.push_back(s);
  };
  push("a1", 1), push("a2", 1), push("a3", 5), push("a4", 5);
  push("a5", 1), push("a6", 1), push("a7", 5), push("a8", 5);
  CHECK(membership_Lnk(w, 2, 2));
  CHECK(membership_Lnk({}, 2, 2));
  CHECK_FALSE(membership_Lnk({"a1", "a2", "a2"}, 1, 1));
  CHECK_FALSE(membership_Lnk({"a2", "a1"}, 1, 1));
  CHECK(membership_Lnk({"a1", "a2"}, 1, 1));
  CHECK_FALSE(membership_Lnk({"b"}, 1, 1));
}

TEST_CASE("stratified presentation search") {
  auto found = search_stratified_presentation(LinearSet(Vec0::zero(3), {Vec0{1, 1, 0}, Vec0{2, 2, 0}, Vec0{0, 0, 1}}));
  CHECK(found.outcome == StratifiedSearchResult::Outcome::Found);
  REQUIRE(found.presentation);
  CHECK(found.presentation->periods() == std::vector<Vec0>{Vec0{0, 0, 1}, Vec0{1, 1, 0}});
  auto unknown = search_stratified_presentation(build_Snk(1, 2).presentation);
  CHECK(unknown.outcome == StratifiedSearchResult::Outcome::Unknown);
}
