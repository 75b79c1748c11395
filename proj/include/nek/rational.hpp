#ifndef NEK_RATIONAL_HPP
#define NEK_RATIONAL_HPP

#include <gmpxx.h>
#include <stdexcept>
#include <string>

namespace nek::alg {

using Rat = mpq_class;
using Int = mpz_class;

inline int sign(const Rat& x) { return sgn(x); }

inline Rat rat_from_string(const std::string& s) {
  Rat x;
  if (x.set_str(s, 10) != 0)
    throw std::invalid_argument("bad rational literal: " + s);
  x.canonicalize();
  return x;
}

inline std::string to_string(const Rat& x) { return x.get_str(); }

// gcd of |a|, |b| over Q: gcd of numerators / lcm of denominators.
inline Rat rat_content_gcd(const Rat& a, const Rat& b) {
  if (a == 0) return abs(b);
  if (b == 0) return abs(a);
  Int gn, ld;
  mpz_gcd(gn.get_mpz_t(), a.get_num().get_mpz_t(), b.get_num().get_mpz_t());
  mpz_lcm(ld.get_mpz_t(), a.get_den().get_mpz_t(), b.get_den().get_mpz_t());
  Rat r(gn, ld);
  r.canonicalize();
  return r;
}

}  // namespace nek::alg

#endif
