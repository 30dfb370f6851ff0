#ifndef GOLOMB_TRUNCATED_SERIES_HPP
#define GOLOMB_TRUNCATED_SERIES_HPP

#include <cstdint>
#include <vector>

#include "golomb/numeric.hpp"

namespace golomb::pade {

// Power series with exact rational coefficients, kept to a fixed truncation
// order N (coefficients of z^0..z^N).  No operation rounds; binary operations
// truncate to the smaller order.
class truncated_series {
 public:
  truncated_series() : c_(1) {}
  explicit truncated_series(std::int64_t order);
  explicit truncated_series(std::vector<rational> coeffs);

  std::int64_t order() const { return static_cast<std::int64_t>(c_.size()) - 1; }
  const rational& coeff(std::int64_t i) const;
  void set_coeff(std::int64_t i, rational v);

  truncated_series operator+(const truncated_series& o) const;
  truncated_series operator-(const truncated_series& o) const;
  truncated_series operator*(const truncated_series& o) const;

  // Multiplicative inverse to the given order; requires coeff(0) != 0.
  truncated_series inverse(std::int64_t order) const;

  // z -> z^t substitution, truncated to the given order.
  truncated_series stretch(std::int64_t t, std::int64_t order) const;

  // Division by z; requires coeff(0) == 0.
  truncated_series shift_down() const;

  // Smallest i with coeff(i) != 0, or -1 if all stored coefficients vanish.
  std::int64_t first_nonzero() const;

  bool operator==(const truncated_series& o) const = default;

 private:
  std::vector<rational> c_;
};

}  // namespace golomb::pade

#endif
