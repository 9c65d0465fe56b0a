#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace plancut {

// Exact rational scalar. Every geometric predicate and every accepted/rejected
// decision in the library runs on this type; doubles only ever appear as
// heuristics whose output is re-verified exactly.
using Rat = mpq_class;
using Int = mpz_class;

inline Rat rat(long num, long den = 1) {
  if (den == 0) throw std::invalid_argument("rat: zero denominator");
  Rat q(num, den);
  q.canonicalize();
  return q;
}

inline Rat rat(const Int& num, const Int& den) {
  if (den == 0) throw std::invalid_argument("rat: zero denominator");
  Rat q(num, den);
  q.canonicalize();
  return q;
}

inline int sign(const Rat& q) { return sgn(q); }

inline Rat rat_abs(const Rat& q) { return q < 0 ? Rat(-q) : q; }

// Largest integer <= q.
inline Int rat_floor(const Rat& q) {
  Int out;
  mpz_fdiv_q(out.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return out;
}

// Smallest integer >= q.
inline Int rat_ceil(const Rat& q) {
  Int out;
  mpz_cdiv_q(out.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return out;
}

inline long to_long(const Int& z) {
  if (!z.fits_slong_p()) throw std::overflow_error("to_long: out of range");
  return z.get_si();
}

inline long ceil_long(const Rat& q) { return to_long(rat_ceil(q)); }
inline long floor_long(const Rat& q) { return to_long(rat_floor(q)); }

// Canonical "n/d" or plain "n" when d == 1.
inline std::string rat_str(const Rat& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

inline double to_double(const Rat& q) { return q.get_d(); }

}  // namespace plancut
