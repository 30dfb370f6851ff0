#ifndef GOLOMB_INT_POLYNOMIAL_HPP
#define GOLOMB_INT_POLYNOMIAL_HPP

#include <cstdint>
#include <initializer_list>
#include <vector>

#include "golomb/numeric.hpp"
#include "golomb/truncated_series.hpp"

namespace golomb::pade {

// Dense integer polynomial; the top coefficient is nonzero unless the
// polynomial is zero (represented by an empty coefficient list, degree -1).
class int_polynomial {
 public:
  int_polynomial() = default;
  explicit int_polynomial(std::vector<integer> coeffs);
  int_polynomial(std::initializer_list<long> coeffs);

  std::int64_t degree() const { return static_cast<std::int64_t>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  integer coeff(std::int64_t i) const;
  const std::vector<integer>& coeffs() const { return c_; }

  int_polynomial operator+(const int_polynomial& o) const;
  int_polynomial operator*(const int_polynomial& o) const;
  int_polynomial scaled(const integer& k) const;
  int_polynomial negated() const;

  // z -> z^t substitution.
  int_polynomial stretch(std::int64_t t) const;

  // Multiplication by z^s.
  int_polynomial shift_up(std::int64_t s) const;

  integer content() const;  // gcd of coefficients, 0 for the zero polynomial

  rational eval(const rational& x) const;

  // sum_i c_i b^{d - i} — an integer whenever d >= degree.
  integer eval_scaled(const integer& b, std::int64_t d) const;

  truncated_series to_series(std::int64_t order) const;

  bool operator==(const int_polynomial& o) const = default;

 private:
  void trim();
  std::vector<integer> c_;
};

}  // namespace golomb::pade

#endif
