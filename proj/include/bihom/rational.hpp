#pragma once

#include <gmpxx.h>

#include <string>

namespace bihom {

/// Exact rational number: canonical (coprime, positive denominator) is
/// maintained by gmp for all arithmetic results.
using Rational = mpq_class;

/// Builds a canonical rational from a (possibly uncanonical) num/den pair.
inline Rational make_rational(long num, long den = 1) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline Rational rational_pow(const Rational& base, unsigned long e) {
  Rational r;
  mpz_pow_ui(r.get_num_mpz_t(), base.get_num_mpz_t(), e);
  mpz_pow_ui(r.get_den_mpz_t(), base.get_den_mpz_t(), e);
  return r;
}

inline std::string rational_to_string(const Rational& q) { return q.get_str(); }

}  // namespace bihom
