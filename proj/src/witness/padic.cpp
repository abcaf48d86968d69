#include "polycf/witness/padic.hpp"

#include "polycf/error.hpp"

namespace polycf {

bool is_prime(const Int& n) { return n > 1 && mpz_probab_prime_p(n.get_mpz_t(), 30) > 0; }

Int smallest_prime_factor(const Int& n) {
  Int m = abs(n);
  if (m < 2) throw PreconditionViolation("no prime factor of " + n.get_str());
  for (Int d = 2; d * d <= m; ++d)
    if (m % d == 0) return d;
  return m;
}

PadicCtx::PadicCtx(const Int& p) : p_(p) {
  if (!is_prime(p)) throw PreconditionViolation("not a prime: " + p.get_str());
}

long PadicCtx::d(const Int& n) const {
  if (n == 0) throw PreconditionViolation("valuation of 0 is infinite");
  Int m = abs(n);
  long e = 0;
  while (m % p_ == 0) {
    m /= p_;
    ++e;
  }
  return e;
}

std::optional<long> PadicCtx::v(const Rat& q) const {
  if (q == 0) return std::nullopt;
  return d(q.get_num()) - d(q.get_den());
}

std::optional<long> PadicCtx::vbar(const Rat& q) const {
  auto r = v(q);
  if (!r) return std::nullopt;
  return -*r;
}

bool PadicCtx::vbar_at_least(const Rat& q, long k) const {
  auto r = vbar(q);
  return r && *r >= k;
}

}  // namespace polycf
