#pragma once

#include <cstddef>
#include <functional>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "polycf/linalg.hpp"
#include "polycf/numeric.hpp"

namespace polycf {

// A vector in N_0^r. Immutable after construction.
class Vec0 {
 public:
  Vec0() = default;
  explicit Vec0(std::vector<Int> entries);
  Vec0(std::initializer_list<long> entries);

  static Vec0 zero(std::size_t r);
  // Unit vector e_i; i is 0-based.
  static Vec0 unit(std::size_t r, std::size_t i);

  std::size_t size() const { return entries_.size(); }
  const Int& operator[](std::size_t i) const { return entries_[i]; }
  const std::vector<Int>& entries() const { return entries_; }

  bool is_zero() const;
  Int sigma() const;
  Int max_entry() const;
  // Componentwise <=.
  bool leq(const Vec0& other) const;
  std::size_t support_size() const;

  Vec0 operator+(const Vec0& other) const;
  Vec0 scaled(const Int& k) const;
  // (a;b), the concatenation.
  Vec0 concat(const Vec0& tail) const;
  Vec0 slice(std::size_t from, std::size_t count) const;
  QVec to_q() const;

  friend bool operator==(const Vec0& a, const Vec0& b) { return a.entries_ == b.entries_; }
  friend bool operator<(const Vec0& a, const Vec0& b) { return a.entries_ < b.entries_; }

 private:
  std::vector<Int> entries_;
};

std::string to_string(const Vec0& v);

// L(c; P).
class LinearSet {
 public:
  LinearSet() = default;
  LinearSet(Vec0 constant, std::vector<Vec0> periods);

  std::size_t dim_ambient() const { return constant_.size(); }
  const Vec0& constant() const { return constant_; }
  const std::vector<Vec0>& periods() const { return periods_; }

  // Drops zero and duplicate periods and sorts the rest.
  LinearSet normalized() const;

  friend bool operator==(const LinearSet&, const LinearSet&) = default;
  friend bool operator<(const LinearSet& a, const LinearSet& b) {
    if (a.constant_ == b.constant_) return a.periods_ < b.periods_;
    return a.constant_ < b.constant_;
  }

 private:
  Vec0 constant_;
  std::vector<Vec0> periods_;
};

// Finite union of linear sets of a common ambient dimension. An empty
// component list is the empty set.
class SemilinearSet {
 public:
  explicit SemilinearSet(std::size_t r) : r_(r) {}
  SemilinearSet(std::size_t r, std::vector<LinearSet> components);
  explicit SemilinearSet(LinearSet single);

  std::size_t dim_ambient() const { return r_; }
  const std::vector<LinearSet>& components() const { return components_; }
  bool empty() const { return components_.empty(); }

  friend bool operator==(const SemilinearSet&, const SemilinearSet&) = default;

 private:
  std::size_t r_ = 0;
  std::vector<LinearSet> components_;
};

// Coordinate permutation acting by tau(v)(i) = v(tau(i)). Stored 0-based.
class Permutation {
 public:
  explicit Permutation(std::vector<std::size_t> mapping);
  static Permutation identity(std::size_t r);
  // Transposition of two 0-based coordinates.
  static Permutation transposition(std::size_t r, std::size_t i, std::size_t j);

  std::size_t size() const { return mapping_.size(); }
  std::size_t operator()(std::size_t i) const { return mapping_[i]; }
  Vec0 apply(const Vec0& v) const;

 private:
  std::vector<std::size_t> mapping_;
};

// Coefficients witnessing v = c + sum alpha_i p_i in one component.
struct MembershipCertificate {
  std::size_t component = 0;
  std::vector<Int> alpha;
};

std::optional<std::vector<Int>> solve_member(const Vec0& v, const LinearSet& l);
std::optional<MembershipCertificate> member_certificate(const Vec0& v, const SemilinearSet& s);
bool member(const Vec0& v, const LinearSet& l);
bool member(const Vec0& v, const SemilinearSet& s);
// Replays a certificate; true iff it reproduces v exactly.
bool verify_certificate(const Vec0& v, const SemilinearSet& s, const MembershipCertificate& cert);

std::size_t dimension(const LinearSet& l);

struct AffineSpace {
  QVec point;
  std::vector<QVec> basis;
};
AffineSpace rational_hull(const LinearSet& l);

LinearSet zero_shadow(const LinearSet& l);
LinearSet apply_permutation(const Permutation& tau, const LinearSet& l);
SemilinearSet apply_permutation(const Permutation& tau, const SemilinearSet& s);
SemilinearSet set_union(const SemilinearSet& a, const SemilinearSet& b);

// Exact membership table for every point of the box [0, bound]^r, computed by
// forward closure over the periods. Much faster than pointwise member() when a
// whole box is needed.
class BoxGrid {
 public:
  BoxGrid(std::size_t r, unsigned bound);

  std::size_t dim() const { return r_; }
  unsigned bound() const { return bound_; }
  std::size_t cells() const { return bits_.size(); }

  bool at(const Vec0& v) const;
  bool at_index(std::size_t idx) const { return bits_[idx] != 0; }
  Vec0 point(std::size_t idx) const;

  void set_index(std::size_t idx) { bits_[idx] = 1; }
  void add(const LinearSet& l);
  BoxGrid& operator&=(const BoxGrid& other);
  BoxGrid& operator|=(const BoxGrid& other);
  friend bool operator==(const BoxGrid&, const BoxGrid&) = default;
  std::size_t count() const;

  static BoxGrid of(const SemilinearSet& s, unsigned bound);
  static BoxGrid from_predicate(std::size_t r, unsigned bound,
                                const std::function<bool(const Vec0&)>& pred);

 private:
  std::optional<std::size_t> index_of(const std::vector<std::int64_t>& v) const;

  std::size_t r_;
  unsigned bound_;
  std::vector<std::size_t> stride_;
  std::vector<unsigned char> bits_;
};

// Text format:
//   v: 2 3 2 3
//   lin c= 0 0 0 0 | p= 1 0 1 0 ; p= 0 1 0 1
//   slset / lin ... / end
Vec0 parse_vector_line(const std::string& line, std::size_t line_no = 1);
LinearSet parse_linear_line(const std::string& line, std::size_t line_no = 1);
// Accepts a single `lin` line or an `slset ... end` block; blank and `#` lines skipped.
SemilinearSet parse_semilinear(const std::string& text);
std::string format_vector(const Vec0& v);
std::string format_linear(const LinearSet& l);
std::string format_semilinear(const SemilinearSet& s);

}  // namespace polycf
