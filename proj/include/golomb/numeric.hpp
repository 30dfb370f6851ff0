#ifndef GOLOMB_NUMERIC_HPP
#define GOLOMB_NUMERIC_HPP

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace golomb {

using integer = mpz_class;
using rational = mpq_class;

integer pow_int(const integer& base, unsigned long exp);

// num/den in lowest terms, den > 0
rational make_rational(integer num, integer den);

inline bool is_odd(const integer& x) { return mpz_odd_p(x.get_mpz_t()) != 0; }

// "num/den" (den omitted when 1)
std::string rational_string(const rational& x);

// Fixed-point decimal rendering, truncated toward zero.
std::string decimal_string(const rational& x, int digits);

}  // namespace golomb

#endif
