#include "golomb/int_polynomial.hpp"

#include <stdexcept>
#include <utility>

namespace golomb::pade {

void int_polynomial::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

int_polynomial::int_polynomial(std::vector<integer> coeffs) : c_(std::move(coeffs)) { trim(); }

int_polynomial::int_polynomial(std::initializer_list<long> coeffs) {
  c_.assign(coeffs.begin(), coeffs.end());
  trim();
}

integer int_polynomial::coeff(std::int64_t i) const {
  if (i < 0) throw std::out_of_range("int_polynomial: negative index");
  if (i >= static_cast<std::int64_t>(c_.size())) return 0;
  return c_[static_cast<std::size_t>(i)];
}

int_polynomial int_polynomial::operator+(const int_polynomial& o) const {
  std::vector<integer> r(std::max(c_.size(), o.c_.size()));
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (i < c_.size()) r[i] += c_[i];
    if (i < o.c_.size()) r[i] += o.c_[i];
  }
  return int_polynomial(std::move(r));
}

int_polynomial int_polynomial::operator*(const int_polynomial& o) const {
  if (is_zero() || o.is_zero()) return {};
  std::vector<integer> r(c_.size() + o.c_.size() - 1);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  }
  return int_polynomial(std::move(r));
}

int_polynomial int_polynomial::scaled(const integer& k) const {
  std::vector<integer> r(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) r[i] = c_[i] * k;
  return int_polynomial(std::move(r));
}

int_polynomial int_polynomial::negated() const { return scaled(-1); }

int_polynomial int_polynomial::stretch(std::int64_t t) const {
  if (t < 1) throw std::domain_error("int_polynomial: stretch factor must be >= 1");
  if (is_zero()) return {};
  std::vector<integer> r(static_cast<std::size_t>(degree() * t) + 1);
  for (std::size_t i = 0; i < c_.size(); ++i) r[i * static_cast<std::size_t>(t)] = c_[i];
  return int_polynomial(std::move(r));
}

int_polynomial int_polynomial::shift_up(std::int64_t s) const {
  if (s < 0) throw std::domain_error("int_polynomial: shift must be >= 0");
  if (is_zero()) return {};
  std::vector<integer> r(c_.size() + static_cast<std::size_t>(s));
  for (std::size_t i = 0; i < c_.size(); ++i) r[i + static_cast<std::size_t>(s)] = c_[i];
  return int_polynomial(std::move(r));
}

integer int_polynomial::content() const {
  integer g = 0;
  for (const auto& c : c_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  return g;
}

rational int_polynomial::eval(const rational& x) const {
  rational acc(0);
  for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + rational(c_[i]);
  return acc;
}

integer int_polynomial::eval_scaled(const integer& b, std::int64_t d) const {
  if (d < degree()) throw std::domain_error("int_polynomial: eval_scaled degree bound too small");
  integer acc = 0;
  for (std::size_t i = 0; i < c_.size(); ++i)
    acc += c_[i] * pow_int(b, static_cast<unsigned long>(d - static_cast<std::int64_t>(i)));
  return acc;
}

truncated_series int_polynomial::to_series(std::int64_t order) const {
  truncated_series s(order);
  for (std::int64_t i = 0; i <= degree() && i <= order; ++i)
    s.set_coeff(i, rational(c_[static_cast<std::size_t>(i)]));
  return s;
}

}  // namespace golomb::pade
