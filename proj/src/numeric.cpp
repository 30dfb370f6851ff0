#include "golomb/numeric.hpp"

#include <stdexcept>

namespace golomb {

integer pow_int(const integer& base, unsigned long exp) {
  integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
  return r;
}

rational make_rational(integer num, integer den) {
  if (den == 0) throw std::domain_error("make_rational: zero denominator");
  rational r(std::move(num), std::move(den));
  r.canonicalize();
  return r;
}

std::string rational_string(const rational& x) {
  if (x.get_den() == 1) return x.get_num().get_str();
  return x.get_num().get_str() + "/" + x.get_den().get_str();
}

std::string decimal_string(const rational& x, int digits) {
  if (digits < 0) throw std::domain_error("decimal_string: negative digit count");
  const bool neg = x < 0;
  integer num = abs(x.get_num());
  const integer& den = x.get_den();
  integer scaled = num * pow_int(10, static_cast<unsigned long>(digits)) / den;
  std::string s = scaled.get_str();
  if (digits == 0) return (neg && scaled != 0 ? "-" : "") + s;
  if (s.size() <= static_cast<std::size_t>(digits))
    s.insert(0, static_cast<std::size_t>(digits) + 1 - s.size(), '0');
  s.insert(s.size() - static_cast<std::size_t>(digits), ".");
  return (neg && scaled != 0 ? "-" : "") + s;
}

}  // namespace golomb
