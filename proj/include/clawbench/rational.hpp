#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

namespace clawbench {

// Exact rational arithmetic. mpq_class keeps values canonical (reduced,
// positive denominator), which is exactly the invariant we need; this
// header owns the "a/b" text round-trip used by every file format.
using Rational = mpq_class;

// mpq_class(num, den) does not reduce; this does. Use it whenever num/den
// are not known to be coprime.
inline Rational rational_frac(long num, long den) {
  if (den == 0) throw std::invalid_argument("rational_frac: zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline Rational parse_rational(const std::string& text) {
  mpq_class q;
  if (q.set_str(text, 10) != 0)
    throw std::invalid_argument("cannot parse rational '" + text + "'");
  if (q.get_den() == 0)
    throw std::invalid_argument("zero denominator in '" + text + "'");
  q.canonicalize();
  return q;
}

inline std::string format_rational(const Rational& q) {
  return q.get_str();  // "a" or "a/b", lowest terms
}

inline Rational rational_ceil(const Rational& q) {
  mpz_class c;
  mpz_cdiv_q(c.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
  return Rational(c);
}

inline long rational_ceil_long(const Rational& q) {
  Rational c = rational_ceil(q);
  if (!c.get_num().fits_slong_p())
    throw std::overflow_error("ceil does not fit in long");
  return c.get_num().get_si();
}

inline double rational_to_double(const Rational& q) { return q.get_d(); }

}  // namespace clawbench
