#include <random>

#include "doctest.h"
#include "polycf/diophantine.hpp"
#include "polycf/error.hpp"

using namespace polycf;

namespace {

HomSystem row(std::initializer_list<long> r) {
  std::vector<Int> v;
  for (long x : r) v.emplace_back(x);
  return HomSystem(v.size(), {v});
}

Vec0 e(std::size_t r, std::size_t i) { return Vec0::unit(r, i - 1); }

}  // namespace

TEST_CASE("hilbert basis small systems") {
  CHECK(hilbert_basis(row({1, -1})) == std::vector<Vec0>{Vec0{1, 1}});
  CHECK(hilbert_basis(row({1, -2})) == std::vector<Vec0>{Vec0{2, 1}});
  CHECK(hilbert_basis(row({1, 1, -1})) == std::vector<Vec0>{Vec0{0, 1, 1}, Vec0{1, 0, 1}});
  CHECK(hilbert_basis(row({2, -3})) == std::vector<Vec0>{Vec0{3, 2}});
  CHECK(hilbert_basis(row({1, 1})).empty());
}

TEST_CASE("minimal inhomogeneous solutions") {
  CHECK(minimal_inhom_solutions(row({1, -1}), {Int(1)}) == std::vector<Vec0>{Vec0{1, 0}});
  CHECK(minimal_inhom_solutions(row({1}), {Int(3)}) == std::vector<Vec0>{Vec0{3}});
  CHECK(minimal_inhom_solutions(row({2, 3}), {Int(12)}) ==
        std::vector<Vec0>{Vec0{0, 4}, Vec0{3, 2}, Vec0{6, 0}});
  CHECK(minimal_inhom_solutions(row({2}), {Int(3)}).empty());
  CHECK(minimal_inhom_solutions(row({1, 1}), {Int(-1)}).empty());
}

TEST_CASE("frontier cap is enforced") {
  SearchConfig tiny;
  tiny.frontier_cap = 2;
  CHECK_THROWS_AS(hilbert_basis(row({7, 5, -11, -13}), tiny), SearchLimitExceeded);
}

TEST_CASE("intersection rebuilds S(2)") {
  LinearSet s1(Vec0::zero(4), {e(4, 1) + e(4, 3), e(4, 2), e(4, 4)});
  LinearSet s2(Vec0::zero(4), {e(4, 2) + e(4, 4), e(4, 1), e(4, 3)});
  auto s = intersect_linear({s1, s2});
  REQUIRE(s.components().size() == 1);
  auto& l = s.components().front();
  CHECK(l.constant().is_zero());
  CHECK(l.periods() == std::vector<Vec0>{Vec0{0, 1, 0, 1}, Vec0{1, 0, 1, 0}});
}

TEST_CASE("intersection small cases") {
  auto a = intersect_linear({LinearSet(Vec0{0, 0}, {Vec0{1, 0}, Vec0{0, 1}}), LinearSet(Vec0{0, 0}, {Vec0{1, 1}})});
  REQUIRE(a.components().size() == 1);
  CHECK(a.components().front() == LinearSet(Vec0{0, 0}, {Vec0{1, 1}}));
  auto b = intersect_linear({LinearSet(Vec0{1, 0}, {Vec0{0, 1}}), LinearSet(Vec0{0, 0}, {Vec0{1, 0}, Vec0{0, 1}})});
  REQUIRE(b.components().size() == 1);
  CHECK(b.components().front() == LinearSet(Vec0{1, 0}, {Vec0{0, 1}}));
  auto empty = intersect_linear({LinearSet(Vec0{1}, {Vec0{2}}), LinearSet(Vec0{0}, {Vec0{2}})});
  CHECK(empty.empty());
  CHECK_THROWS_AS(intersect_linear({LinearSet(Vec0{1}, {}), LinearSet(Vec0{1, 1}, {})}), DimensionMismatch);
}

TEST_CASE("removable periods") {
  auto r1 = find_removable_period({LinearSet(Vec0{0, 0}, {Vec0{1, 0}, Vec0{1, 1}}), LinearSet(Vec0{0, 0}, {Vec0{1, 1}})});
  REQUIRE(r1.removable);
  CHECK(r1.removable->set == 0);
  CHECK(r1.removable->period == 0);
  CHECK(r1.removable->vector == Vec0{1, 0});

  auto r2 = find_removable_period({LinearSet(Vec0{0, 0}, {Vec0{1, 0}}), LinearSet(Vec0{0, 0}, {Vec0{1, 0}})});
  CHECK_FALSE(r2.removable);
  CHECK(r2.dim_intersection == r2.dim_rational);

  LinearSet s1(Vec0::zero(4), {e(4, 1) + e(4, 3), e(4, 2), e(4, 4)});
  LinearSet s2(Vec0::zero(4), {e(4, 2) + e(4, 4), e(4, 1), e(4, 3)});
  auto r3 = find_removable_period({s1, s2});
  CHECK_FALSE(r3.removable);
  CHECK(r3.dim_intersection == 2);
  CHECK(r3.dim_rational == 2);

  CHECK_THROWS_AS(find_removable_period({LinearSet(Vec0{1}, {})}), PreconditionViolation);
}

TEST_CASE("dimension drop forces a removable period") {
  // The spans meet in a line, the monoids only in 0.
  LinearSet a(Vec0{0, 0}, {Vec0{1, 0}});
  LinearSet b(Vec0{0, 0}, {Vec0{1, 1}, Vec0{0, 1}});
  auto rep = find_removable_period({a, b});
  CHECK(rep.dim_intersection == 0);
  CHECK(rep.dim_rational == 1);
  REQUIRE(rep.removable);
  CHECK(rep.removable->set == 0);
}

TEST_CASE("system text format") {
  auto p = parse_system("sys rows=1 cols=2\n2 3\nrhs: 12\n");
  CHECK(p.sys.cols == 2);
  REQUIRE(p.rhs);
  CHECK((*p.rhs)[0] == 12);
  CHECK(parse_system(format_system(p.sys)).sys.rows == p.sys.rows);
  CHECK_THROWS_AS(parse_system("sys rows=2 cols=2\n1 2\n"), ParseError);
  CHECK_THROWS_AS(parse_system("1 2\n"), ParseError);
}
