#pragma once

#include <gmpxx.h>

namespace bosonorder {

using Int = mpz_class;
using Rat = mpq_class;

/// n! as an exact integer.
inline Int factorial(unsigned long n) {
  Int r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

/// C(n, k); zero when k > n.
inline Int binomial(unsigned long n, unsigned long k) {
  Int r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

inline Int pow_int(const Int& base, unsigned long e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

/// num/den in lowest terms; den must be nonzero.
inline Rat make_rat(const Int& num, const Int& den) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

}  // namespace bosonorder
