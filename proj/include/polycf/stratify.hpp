#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "polycf/error.hpp"
#include "polycf/vecset.hpp"

namespace polycf {

class NotStratified : public PreconditionViolation {
 public:
  using PreconditionViolation::PreconditionViolation;
};

class BlockFormViolation : public Error {
 public:
  using Error::Error;
};

// Outcome of the syntactic check. Indices are 0-based.
struct StratificationCheck {
  enum class Kind { Ok, TooManyNonzero, Crossing };
  Kind kind = Kind::Ok;
  std::size_t first = 0;   // offending period, or the first of the crossing pair
  std::size_t second = 0;  // second period of a crossing pair
  // Crossing coordinates i < j < k < l: first period lives on {i,k}, second on {j,l}.
  std::array<std::size_t, 4> coords{};

  bool ok() const { return kind == Kind::Ok; }
  std::string describe(const std::vector<Vec0>& periods) const;
};

StratificationCheck check_stratified(const std::vector<Vec0>& periods);
bool is_stratified_period_set(const std::vector<Vec0>& periods);

// Partition of {0..r-1}; classes sorted internally and by smallest element.
class Partition {
 public:
  Partition(std::size_t r, std::vector<std::vector<std::size_t>> classes);

  std::size_t dim() const { return class_of_.size(); }
  const std::vector<std::vector<std::size_t>>& classes() const { return classes_; }
  std::size_t class_of(std::size_t i) const { return class_of_.at(i); }
  bool same(std::size_t i, std::size_t j) const { return class_of(i) == class_of(j); }

  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::vector<std::vector<std::size_t>> classes_;
  std::vector<std::size_t> class_of_;
};

std::string to_string(const Partition& p);  // 1-based, e.g. {{1,2},{3}}

// Throws NotStratified when the periods fail the syntactic check.
Partition partition_PiL(const LinearSet& l);

// Takes 0-based m1 < n1 < m2 < n2 with m1, n1 and m2, n2 in different
// classes (else PreconditionViolation). Returns false only when m1 ~ m2 and
// n1 ~ n2 both hold.
bool check_no_crossing(const Partition& part, std::size_t m1, std::size_t n1, std::size_t m2,
                       std::size_t n2);

// All admissible 4-tuples for which check_no_crossing fails.
std::vector<std::array<std::size_t, 4>> crossing_violations(const Partition& part);

// Basis of the orthogonal complement of span(P), each vector a primitive
// integer vector (first nonzero entry positive) supported in one class.
std::vector<QVec> perp_block_basis(const LinearSet& l);

struct SnkFamily {
  std::size_t n = 1;
  std::size_t k = 1;
  LinearSet presentation;

  std::size_t dim_ambient() const { return 2 * n * k; }
  // Direct evaluation of the defining equalities.
  bool predicate(const Vec0& v) const;
};

SnkFamily build_Snk(std::size_t n, std::size_t k);

// S_1..S_k over N_0^{2k}; S_i pairs coordinates i and k+i, all others free.
std::vector<LinearSet> build_Sk_cover(std::size_t k);

// Symbols a1..a{2nk}. Words must list the blocks in index order.
bool membership_Lnk(const std::vector<std::string>& word, std::size_t n, std::size_t k);
std::vector<std::string> lnk_alphabet(std::size_t n, std::size_t k);

struct StratifiedSearchResult {
  enum class Outcome { Found, Unknown };
  Outcome outcome = Outcome::Unknown;
  std::optional<LinearSet> presentation;
  std::string note;
};

// Tries the irreducible generators of L^0. A negative outcome is definitive
// for single linear presentations but says nothing about unions, hence Unknown.
StratifiedSearchResult search_stratified_presentation(const LinearSet& l);

}  // namespace polycf
