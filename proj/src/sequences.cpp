#include "golomb/sequences.hpp"

#include <stdexcept>
#include <string>
#include <utility>

namespace golomb::seq {

int ruler_value(std::int64_t n) {
  if (n <= 0) throw std::domain_error("ruler_value: index must be >= 1");
  int v = 1;
  while ((n & 1) == 0) {
    ++v;
    n >>= 1;
  }
  return v;
}

int fermat_coefficient(std::int64_t n) {
  if (n <= 0) throw std::domain_error("fermat_coefficient: index must be >= 1");
  return 2 - ruler_value(n);
}

sequence_spec sequence_spec::ruler_seeded(int seed_bit) {
  if (seed_bit != 0 && seed_bit != 1)
    throw std::domain_error("sequence_spec: seed bit must be 0 or 1");
  sequence_spec s;
  s.kind_ = kind::ruler_seeded;
  s.seed_ = seed_bit;
  return s;
}

sequence_spec sequence_spec::fermat_f() {
  sequence_spec s;
  s.kind_ = kind::fermat_f;
  return s;
}

sequence_spec sequence_spec::explicit_values(std::vector<integer> values, std::int64_t start_index) {
  if (start_index < 0) throw std::domain_error("sequence_spec: start index must be >= 0");
  sequence_spec s;
  s.kind_ = kind::explicit_values;
  s.values_ = std::move(values);
  s.start_ = start_index;
  return s;
}

bool sequence_spec::in_domain(std::int64_t n) const {
  switch (kind_) {
    case kind::ruler_seeded:
      return n >= 0;
    case kind::fermat_f:
      return n >= 1;
    case kind::explicit_values:
      return n >= start_ && n < start_ + static_cast<std::int64_t>(values_.size());
  }
  return false;
}

integer sequence_spec::value(std::int64_t n) const {
  if (!in_domain(n))
    throw std::domain_error("sequence_spec: index " + std::to_string(n) + " out of domain");
  switch (kind_) {
    case kind::ruler_seeded:
      return n == 0 ? integer(seed_) : integer(ruler_value(n));
    case kind::fermat_f:
      return integer(fermat_coefficient(n));
    case kind::explicit_values:
      return values_[static_cast<std::size_t>(n - start_)];
  }
  throw std::logic_error("sequence_spec: unreachable");
}

std::vector<integer> sequence_spec::window(std::int64_t p, std::int64_t len) const {
  if (len < 1) throw std::domain_error("sequence_spec::window: length must be >= 1");
  std::vector<integer> out;
  out.reserve(static_cast<std::size_t>(len));
  for (std::int64_t i = 0; i < len; ++i) out.push_back(value(p + i));
  return out;
}

}  // namespace golomb::seq
