#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace polycf {

using Int = mpz_class;
using Rat = mpq_class;

inline Int parse_int(std::string_view text) {
  Int v;
  if (text.empty() || v.set_str(std::string(text), 10) != 0) {
    throw std::invalid_argument("not an integer: '" + std::string(text) + "'");
  }
  return v;
}

inline std::string to_string(const Int& v) { return v.get_str(); }
inline std::string to_string(const Rat& v) { return v.get_str(); }

inline Rat make_rat(const Int& num, const Int& den = 1) {
  Rat q(num, den);
  q.canonicalize();
  return q;
}

inline bool is_integer(const Rat& q) { return q.get_den() == 1; }

inline std::optional<std::int64_t> to_int64(const Int& v) {
  if (!v.fits_slong_p()) return std::nullopt;
  return static_cast<std::int64_t>(v.get_si());
}

inline Int abs_int(const Int& v) { return abs(v); }

inline Int lcm_int(const Int& a, const Int& b) {
  Int r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

inline Int gcd_int(const Int& a, const Int& b) {
  Int r;
  mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

inline Int pow_int(const Int& base, unsigned long e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

// Floor-style division with a nonnegative remainder in [0, |d|).
inline void divmod_nonneg(const Int& n, const Int& d, Int& q, Int& r) {
  Int ad = abs(d);
  mpz_fdiv_r(r.get_mpz_t(), n.get_mpz_t(), ad.get_mpz_t());
  q = (n - r) / d;
}

}  // namespace polycf
