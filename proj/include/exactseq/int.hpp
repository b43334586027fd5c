#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace exactseq {

using Int = mpz_class;
using Rat = mpq_class;

inline Rat make_rat(const Int& num, const Int& den) {
  if (den == 0) throw std::domain_error("make_rat: zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

// number of bits of |n|; 0 for n = 0
inline long bit_length(const Int& n) {
  if (n == 0) return 0;
  return static_cast<long>(mpz_sizeinbase(n.get_mpz_t(), 2));
}

inline long to_long(const Int& n) {
  if (!n.fits_slong_p()) throw std::domain_error("to_long: value out of range");
  return n.get_si();
}

inline Int pow_int(const Int& base, unsigned long e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

inline Rat pow_rat(const Rat& base, unsigned long e) {
  Rat r = 1;
  Rat b = base;
  while (e > 0) {
    if (e & 1) r *= b;
    b *= b;
    e >>= 1;
  }
  return r;
}

// exact quotient; throws if d does not divide n
inline Int divexact_checked(const Int& n, const Int& d, const char* what) {
  if (d == 0) throw std::domain_error("divexact: zero divisor");
  Int q, r;
  mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
  if (r != 0) throw std::logic_error(std::string(what) + ": division is not exact");
  return q;
}

}  // namespace exactseq
