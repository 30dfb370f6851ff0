#ifndef GOLOMB_SEQUENCES_HPP
#define GOLOMB_SEQUENCES_HPP

#include <cstdint>
#include <vector>

#include "golomb/numeric.hpp"

namespace golomb::seq {

// g(n) = nu_2(2n): 1,2,1,3,1,2,1,4,...  Satisfies g(2n+1)=1, g(2n)=1+g(n).
int ruler_value(std::int64_t n);

// Coefficient of z^n in sum_{k>=0} z^{2^k}/(1+z^{2^k}).  Equals 2 - ruler_value(n);
// the series-expansion route lives in the tests as the independent oracle.
int fermat_coefficient(std::int64_t n);

// Immutable view of one of the studied integer sequences.  Ruler variants carry a
// seed value at index 0; the fermat variant starts at index 1; explicit sequences
// are bounded and never zero-pad.
class sequence_spec {
 public:
  enum class kind { ruler_seeded, fermat_f, explicit_values };

  static sequence_spec ruler_seeded(int seed_bit);
  static sequence_spec fermat_f();
  static sequence_spec explicit_values(std::vector<integer> values, std::int64_t start_index);

  kind which() const { return kind_; }
  int seed_bit() const { return seed_; }

  bool in_domain(std::int64_t n) const;
  integer value(std::int64_t n) const;
  std::vector<integer> window(std::int64_t p, std::int64_t len) const;

 private:
  sequence_spec() = default;
  kind kind_ = kind::ruler_seeded;
  int seed_ = 0;
  std::vector<integer> values_;
  std::int64_t start_ = 0;
};

}  // namespace golomb::seq

#endif
