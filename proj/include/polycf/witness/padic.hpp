#pragma once

#include <optional>

#include "polycf/numeric.hpp"

namespace polycf {

bool is_prime(const Int& n);
// Smallest prime factor of |n| (n not 0, +-1).
Int smallest_prime_factor(const Int& n);

class PadicCtx {
 public:
  explicit PadicCtx(const Int& p);  // throws PreconditionViolation unless prime
  const Int& p() const { return p_; }

  // Exponent of p in a nonzero integer.
  long d(const Int& n) const;
  // v_p; nullopt stands for +infinity (q = 0).
  std::optional<long> v(const Rat& q) const;
  // -v_p; nullopt stands for -infinity.
  std::optional<long> vbar(const Rat& q) const;
  // vbar(q) >= k, with -infinity below everything.
  bool vbar_at_least(const Rat& q, long k) const;

 private:
  Int p_;
};

}  // namespace polycf
