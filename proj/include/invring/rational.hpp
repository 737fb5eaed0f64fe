#ifndef INVRING_RATIONAL_HPP
#define INVRING_RATIONAL_HPP

/// Exact arithmetic used throughout the library.
///
/// All computations are performed over arbitrary-precision integers and
/// rationals (GMP).  Rationals are kept in canonical form — reduced to lowest
/// terms with a positive denominator — by the underlying representation, so
/// equality is plain value equality and no epsilon appears anywhere.

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace invring {

using Int = mpz_class;
using Rat = mpq_class;

/// True iff q has denominator 1.
inline bool is_integer(const Rat& q) { return q.get_den() == 1; }

/// Numerator of an integral rational; throws if q is not an integer.
inline Int to_integer(const Rat& q) {
  if (!is_integer(q)) throw std::domain_error("expected integral value, got " + q.get_str());
  return q.get_num();
}

/// Exact conversion to a machine integer; throws on overflow or fraction.
inline long to_long(const Rat& q) {
  Int n = to_integer(q);
  if (!n.fits_slong_p()) throw std::domain_error("value does not fit in a machine integer");
  return n.get_si();
}

inline Int factorial(unsigned n) {
  Int r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

/// Binomial coefficient C(n, k) for arbitrary-precision n >= 0.
inline Int binomial(const Int& n, unsigned long k) {
  if (n < 0) throw std::domain_error("binomial: negative upper index");
  Int r;
  mpz_bin_ui(r.get_mpz_t(), n.get_mpz_t(), k);
  return r;
}

/// Parses "a" or "a/b" into an exact rational.
inline Rat parse_rational(const std::string& text) {
  Rat q;
  if (q.set_str(text, 10) != 0) throw std::invalid_argument("malformed rational: " + text);
  if (q.get_den() == 0) throw std::invalid_argument("zero denominator: " + text);
  q.canonicalize();
  return q;
}

}  // namespace invring

#endif
