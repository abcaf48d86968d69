#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "polycf/numeric.hpp"
#include "polycf/vecset.hpp"

namespace polycf {

// Integer matrix A; the system is A x = 0 (or A x = rhs) over N_0.
struct HomSystem {
  std::size_t cols = 0;
  std::vector<std::vector<Int>> rows;

  HomSystem() = default;
  HomSystem(std::size_t cols, std::vector<std::vector<Int>> rows);
  std::size_t num_rows() const { return rows.size(); }
};

struct SearchConfig {
  // Largest number of nodes allowed on one breadth-first level.
  std::size_t frontier_cap = 10000;
};

// All <=-minimal nonzero solutions of A x = 0, sorted lexicographically.
std::vector<Vec0> hilbert_basis(const HomSystem& sys, const SearchConfig& cfg = {});

// All <=-minimal solutions of A x = rhs, sorted. Empty when infeasible.
std::vector<Vec0> minimal_inhom_solutions(const HomSystem& sys, const std::vector<Int>& rhs,
                                          const SearchConfig& cfg = {});

struct SolutionBasis {
  std::vector<Vec0> constants;  // minimal inhomogeneous solutions
  std::vector<Vec0> periods;    // Hilbert basis of the homogeneous part
};
// Both at once, from a single search over the homogenized system.
SolutionBasis solve_system(const HomSystem& sys, const std::vector<Int>& rhs,
                           const SearchConfig& cfg = {});

SemilinearSet intersect_linear(const std::vector<LinearSet>& sets, const SearchConfig& cfg = {});
// Distributes over components.
SemilinearSet intersect(const std::vector<SemilinearSet>& sets, const SearchConfig& cfg = {});

struct RemovablePeriod {
  std::size_t set = 0;     // 0-based index into the input list
  std::size_t period = 0;  // 0-based index into that set's period list
  Vec0 vector;
};

struct RemovableReport {
  std::size_t dim_intersection = 0;
  std::size_t dim_rational = 0;  // dimension of the intersection of the rational spans
  std::optional<RemovablePeriod> removable;
};

// Inputs must have zero constants. Searches every period in order and reports
// the first one whose removal leaves the intersection unchanged.
RemovableReport find_removable_period(const std::vector<LinearSet>& sets,
                                      const SearchConfig& cfg = {});

// `sys rows=R cols=C`, then R rows of C integers, then optionally `rhs: ...`.
struct ParsedSystem {
  HomSystem sys;
  std::optional<std::vector<Int>> rhs;
};
ParsedSystem parse_system(const std::string& text);
std::string format_system(const HomSystem& sys);

}  // namespace polycf
