#include "golomb/truncated_series.hpp"

#include <algorithm>
#include <stdexcept>

namespace golomb::pade {

truncated_series::truncated_series(std::int64_t order) {
  if (order < 0) throw std::domain_error("truncated_series: order must be >= 0");
  c_.resize(static_cast<std::size_t>(order) + 1);
}

truncated_series::truncated_series(std::vector<rational> coeffs) : c_(std::move(coeffs)) {
  if (c_.empty()) c_.resize(1);
}

const rational& truncated_series::coeff(std::int64_t i) const {
  if (i < 0 || i > order()) throw std::out_of_range("truncated_series: coefficient index");
  return c_[static_cast<std::size_t>(i)];
}

void truncated_series::set_coeff(std::int64_t i, rational v) {
  if (i < 0 || i > order()) throw std::out_of_range("truncated_series: coefficient index");
  c_[static_cast<std::size_t>(i)] = std::move(v);
}

truncated_series truncated_series::operator+(const truncated_series& o) const {
  truncated_series r(std::min(order(), o.order()));
  for (std::int64_t i = 0; i <= r.order(); ++i) r.c_[i] = c_[i] + o.c_[i];
  return r;
}

truncated_series truncated_series::operator-(const truncated_series& o) const {
  truncated_series r(std::min(order(), o.order()));
  for (std::int64_t i = 0; i <= r.order(); ++i) r.c_[i] = c_[i] - o.c_[i];
  return r;
}

truncated_series truncated_series::operator*(const truncated_series& o) const {
  truncated_series r(std::min(order(), o.order()));
  for (std::int64_t i = 0; i <= r.order(); ++i) {
    if (c_[static_cast<std::size_t>(i)] == 0) continue;
    for (std::int64_t j = 0; i + j <= r.order(); ++j) {
      if (o.c_[static_cast<std::size_t>(j)] == 0) continue;
      r.c_[static_cast<std::size_t>(i + j)] +=
          c_[static_cast<std::size_t>(i)] * o.c_[static_cast<std::size_t>(j)];
    }
  }
  return r;
}

truncated_series truncated_series::inverse(std::int64_t ord) const {
  if (c_[0] == 0) throw std::domain_error("truncated_series: inverse needs nonzero constant term");
  truncated_series r(ord);
  const rational inv0 = rational(1) / c_[0];
  r.c_[0] = inv0;
  for (std::int64_t n = 1; n <= ord; ++n) {
    rational s(0);
    const std::int64_t top = std::min<std::int64_t>(n, order());
    for (std::int64_t i = 1; i <= top; ++i)
      s += c_[static_cast<std::size_t>(i)] * r.c_[static_cast<std::size_t>(n - i)];
    r.c_[static_cast<std::size_t>(n)] = -s * inv0;
  }
  return r;
}

truncated_series truncated_series::stretch(std::int64_t t, std::int64_t ord) const {
  if (t < 1) throw std::domain_error("truncated_series: stretch factor must be >= 1");
  truncated_series r(ord);
  for (std::int64_t i = 0; i <= order() && i * t <= ord; ++i)
    r.c_[static_cast<std::size_t>(i * t)] = c_[static_cast<std::size_t>(i)];
  return r;
}

truncated_series truncated_series::shift_down() const {
  if (c_[0] != 0) throw std::domain_error("truncated_series: shift_down needs zero constant term");
  if (order() == 0) return truncated_series(0);
  truncated_series r(order() - 1);
  for (std::int64_t i = 1; i <= order(); ++i) r.c_[static_cast<std::size_t>(i - 1)] = c_[static_cast<std::size_t>(i)];
  return r;
}

std::int64_t truncated_series::first_nonzero() const {
  for (std::int64_t i = 0; i <= order(); ++i)
    if (c_[static_cast<std::size_t>(i)] != 0) return i;
  return -1;
}

}  // namespace golomb::pade
