#include "doctest.h"
#include "polycf/check/oracles.hpp"
#include "polycf/check/selftest.hpp"
#include "polycf/stratify.hpp"

using namespace polycf;

TEST_CASE("brute-force Hilbert basis on known systems") {
  // x = y
  CHECK(check::brute_hilbert_basis(HomSystem(2, {{1, -1}}), 6) == std::vector<Vec0>{Vec0{1, 1}});
  // 2x = 3y + z
  auto hb = check::brute_hilbert_basis(HomSystem(3, {{2, -3, -1}}), 6);
  CHECK(hb == std::vector<Vec0>{Vec0{1, 0, 2}, Vec0{2, 1, 1}, Vec0{3, 2, 0}});
  CHECK(hb == hilbert_basis(HomSystem(3, {{2, -3, -1}})));
  CHECK(check::brute_hilbert_basis(HomSystem(2, {{1, 1}}), 6).empty());
}

TEST_CASE("enumerated points of a linear set") {
  auto g = check::naive_points(LinearSet(Vec0{1, 0}, {Vec0{1, 1}}), 10, 3);
  CHECK(g.count() == 3);
  CHECK(g.at(Vec0{3, 2}));
  CHECK_FALSE(g.at(Vec0{0, 0}));
  // a small coefficient bound cuts the set short
  CHECK(check::naive_points(LinearSet(Vec0{0}, {Vec0{1}}), 2, 5).count() == 3);
}

TEST_CASE("words are listed shortest first") {
  std::vector<Word> seen;
  check::for_each_word({"a", "b"}, 2, [&](const Word& w) { seen.push_back(w); });
  REQUIRE(seen.size() == 7);
  CHECK(seen[0].empty());
  CHECK(seen[1] == Word{"a"});
  CHECK(seen[6] == Word{"b", "b"});
}

TEST_CASE("random stratified sets are stratified") {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 50; ++i) CHECK(is_stratified_period_set(check::random_stratified(5, 8, rng).periods()));
}

TEST_CASE("every self-test suite passes at a small box") {
  check::SuiteConfig cfg;
  cfg.box = 2;
  cfg.seed = 17;
  for (const auto& r : check::run_selftest(cfg)) CHECK_MESSAGE(r.passed, r.name << ": " << r.detail);
}

TEST_CASE("suite failures are reported, not thrown") {
  check::Suite bad{"bad", [](const check::SuiteConfig&, check::SuiteResult& r) {
                     r.expect(true, "fine");
                     r.expect(false, "first");
                     r.expect(false, "second");
                   }};
  auto r = check::run_suite(bad, {});
  CHECK_FALSE(r.passed);
  CHECK(r.checks == 3);
  CHECK(r.detail == "first");
  check::Suite throws{"throws", [](const check::SuiteConfig&, check::SuiteResult&) { throw Error("boom"); }};
  CHECK(check::run_suite(throws, {}).detail.find("boom") != std::string::npos);
}
