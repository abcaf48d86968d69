#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "polycf/vecset.hpp"

namespace polycf {

// Constants bounding the elements (a;b) of S in N_0^(r+s) that use complex
// periods only: b(j) < C sigma(a) whenever a is nonzero.
struct ComplexPeriodConstant {
  Int t;  // max over components
  Int q;  // max over components
  Int C;
};
ComplexPeriodConstant complex_period_constant(const SemilinearSet& S, std::size_t r, std::size_t s);

// A family of points a_k for a set L in N_0^(r+s), with an unbounded f.
struct WitnessFamily {
  std::size_t r = 1;
  std::size_t s = 1;
  std::function<Vec0(std::size_t k)> a_of;
  std::function<Int(std::size_t k)> f;
  // Membership of (a;b) in L.
  std::function<bool(const Vec0&)> member;
  // Every b with (a;b) in L and all b(j) <= cap, in any order.
  std::function<std::vector<Vec0>(const Vec0& a, const Int& cap)> enumerate_b;
  std::string description;
};

// Enumerates the box [0,cap]^s through the membership oracle.
std::function<std::vector<Vec0>(const Vec0&, const Int&)> box_enumerator(std::function<bool(const Vec0&)> member,
                                                                         std::size_t s);

struct LevelReport {
  std::size_t k = 0;
  Vec0 a;
  Int f;
  std::size_t found = 0;
  std::optional<bool> exists;  // nullopt: nothing below the cap, indeterminate
  bool large = true;           // condition (ii)
  bool separated = true;       // condition (iii)
  std::string note;
};

struct WitnessReport {
  Int cap;
  std::vector<LevelReport> levels;
  // f sets a new maximum at the last sampled level (horizon check only).
  bool f_grows_on_horizon = false;

  bool passed() const;
  std::string to_text() const;
};

WitnessReport check_witness_family(const WitnessFamily& w, const std::vector<std::size_t>& levels, const Int& cap);

// Evidence that S differs from the set L of a witness family.
struct RefutationCertificate {
  enum class Kind { InLNotInS, InSNotInL, Indeterminate };
  Kind kind = Kind::Indeterminate;
  Vec0 point;
  std::size_t level = 0;
  Int C;
  std::optional<MembershipCertificate> s_membership;  // for InSNotInL
  std::string note;
};
std::string to_string(RefutationCertificate::Kind k);

RefutationCertificate refute_presentation(const SemilinearSet& S, const WitnessFamily& w, const Int& cap,
                                          std::size_t max_level = 256);
// Replays the membership claims of a certificate.
bool verify_refutation(const SemilinearSet& S, const WitnessFamily& w, const RefutationCertificate& cert);

}  // namespace polycf
