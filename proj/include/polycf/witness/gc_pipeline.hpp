#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "polycf/groups/families.hpp"
#include "polycf/witness/padic.hpp"
#include "polycf/witness/witness.hpp"

namespace polycf {

// Both end coefficients are +-1: the group is polycyclic.
class NotProper : public PreconditionViolation {
 public:
  using PreconditionViolation::PreconditionViolation;
};

struct GcPipelineState {
  GcSpec input;
  GcSpec spec;            // reversed when |c_s| = 1
  bool reversed = false;
  QMatrix M;
  Int p;
  long n = 0;             // max vbar_p over the last column
  std::size_t N = 0;      // 1-based row
  std::size_t depth = 0;  // K
  std::vector<std::size_t> iota;   // iota[k-1] = iota_k
  std::map<std::size_t, Int> ell;  // ell_j for every computed power j
  std::vector<Int> lambda;         // lambda[k-1] = lambda_k
  std::vector<int> types;          // per row 1..s: 1 or 2
  std::vector<std::size_t> n_seq;  // levels with the chosen sign pattern

  std::size_t s() const { return spec.s(); }
  // M^j, computed on demand.
  QMatrix power_of(std::size_t j) const;
  // Last column of M^j.
  QVec last_column(std::size_t j) const;
  std::string to_text() const;
};

GcPipelineState gc_pipeline(const GcSpec& spec, std::size_t depth);

// Phi of W(G, X) n L' with L' = Y^k x_s^+ y^k (x_1^e1)^* .. (x_s^es)^*, as
// tuples (k, lambda, k, v_1..v_s); tau = (2,3) swaps the first two blocks
// after the leading one, giving (k, k; lambda, v).
struct GcWitnessLanguage {
  std::size_t level = 0;
  std::size_t power = 0;        // iota_level
  std::vector<Vec0> phi;        // members with leading exponents = power
  std::vector<Vec0> tau_phi;
  WitnessFamily family;         // r = 2, s = state.s() + 1, f(t) = p^t
};

// The word Y^k1 x_s^lambda y^k2 (x_1^e1)^v1 .. for a tuple in Phi order.
Word gc_lprime_word(const GcPipelineState& state, const Vec0& phi_tuple);
GcWitnessLanguage gc_witness_language(const GcPipelineState& state, std::size_t level, const Int& cap);

}  // namespace polycf
