#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace nilsep {

using Int = mpz_class;

inline Int floor_div(const Int& a, const Int& b) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

// Non-negative remainder for b > 0.
inline Int floor_mod(const Int& a, const Int& b) {
  Int r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

inline bool divides(const Int& d, const Int& a) {
  if (d == 0) return a == 0;
  return mpz_divisible_p(a.get_mpz_t(), d.get_mpz_t()) != 0;
}

inline Int ipow(const Int& base, unsigned long e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

// p-adic valuation of a nonzero integer.
inline unsigned long valuation(const Int& a, const Int& p) {
  Int t = abs(a);
  unsigned long v = 0;
  while (t != 0 && divides(p, t)) {
    t /= p;
    ++v;
  }
  return v;
}

inline std::string to_string(const Int& a) { return a.get_str(); }

}  // namespace nilsep
