#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "polycf/witness/witness.hpp"

namespace polycf::check {

// box scales every suite: search boxes, word lengths, trial counts.
struct SuiteConfig {
  unsigned box = 5;
  std::uint64_t seed = 1;
};

struct SuiteResult {
  std::string name;
  bool passed = true;
  std::size_t checks = 0;
  std::string detail;  // first failure, or the exception text
  double seconds = 0;

  // Counts a check; records the first failure.
  void expect(bool ok, const std::string& what);
};

struct Suite {
  std::string name;
  std::function<void(const SuiteConfig&, SuiteResult&)> body;
};

const std::vector<Suite>& suites();
SuiteResult run_suite(const Suite& s, const SuiteConfig& cfg);
// Suites whose name starts with prefix (all when empty), in registration order.
std::vector<SuiteResult> run_selftest(const SuiteConfig& cfg, const std::string& prefix = "");

// L = {(n, 2^n) : 1 <= n <= limit} with a_k the least n where 2^n >= k n and f(k) = k.
WitnessFamily power_of_two_family(std::size_t limit);

}  // namespace polycf::check
