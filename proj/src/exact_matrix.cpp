#include "golomb/exact_matrix.hpp"

#include <stdexcept>
#include <utility>

namespace golomb::linalg {

exact_matrix exact_matrix::identity(std::size_t order) {
  exact_matrix m(order);
  for (std::size_t i = 0; i < order; ++i) m.at(i, i) = 1;
  return m;
}

exact_matrix exact_matrix::constant(std::size_t order, const integer& value) {
  exact_matrix m(order);
  for (std::size_t i = 0; i < order; ++i)
    for (std::size_t j = 0; j < order; ++j) m.at(i, j) = value;
  return m;
}

exact_matrix exact_matrix::from_rows(std::initializer_list<std::initializer_list<long>> rows) {
  exact_matrix m(rows.size());
  std::size_t i = 0;
  for (const auto& row : rows) {
    if (row.size() != rows.size()) throw std::domain_error("exact_matrix: rows must be square");
    std::size_t j = 0;
    for (long v : row) m.at(i, j++) = v;
    ++i;
  }
  return m;
}

exact_matrix exact_matrix::operator+(const exact_matrix& o) const {
  if (n_ != o.n_) throw std::domain_error("exact_matrix: order mismatch");
  exact_matrix r(n_);
  for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] + o.a_[i];
  return r;
}

exact_matrix exact_matrix::scaled(const integer& c) const {
  exact_matrix r(n_);
  for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] * c;
  return r;
}

exact_matrix exact_matrix::negated() const { return scaled(-1); }

integer det_int(const exact_matrix& m) {
  const std::size_t n = m.order();
  if (n == 0) return 1;
  std::vector<integer> a(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i * n + j] = m.at(i, j);

  int sign = 1;
  integer prev = 1;
  integer t;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k * n + k] == 0) {
      std::size_t r = k + 1;
      while (r < n && a[r * n + k] == 0) ++r;
      if (r == n) return 0;
      for (std::size_t j = k; j < n; ++j) std::swap(a[k * n + j], a[r * n + j]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        t = a[i * n + j] * a[k * n + k] - a[i * n + k] * a[k * n + j];
        mpz_divexact(a[i * n + j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = a[k * n + k];
  }
  return sign > 0 ? a[n * n - 1] : -a[n * n - 1];
}

exact_matrix bordered(const exact_matrix& m) {
  const std::size_t n = m.order();
  exact_matrix r(n + 1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) r.at(i, j) = m.at(i, j);
    r.at(i, n) = 1;
    r.at(n, i) = 1;
  }
  r.at(n, n) = 0;
  return r;
}

namespace {

// [[aA, y*ones],[x*ones, bB]] assembled entrywise
exact_matrix assemble_2x2(const exact_matrix& a_mat, const exact_matrix& b_mat, const integer& a,
                          const integer& b, const integer& x, const integer& y) {
  const std::size_t m = a_mat.order(), n = b_mat.order();
  exact_matrix blk(m + n);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) blk.at(i, j) = a * a_mat.at(i, j);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j) blk.at(i, m + j) = y;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < m; ++j) blk.at(m + i, j) = x;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) blk.at(m + i, m + j) = b * b_mat.at(i, j);
  return blk;
}

integer pow_nonneg(const integer& base, std::size_t e) {
  return pow_int(base, static_cast<unsigned long>(e));
}

}  // namespace

block2x2_residuals block_identity_2x2_residual(const exact_matrix& a_mat, const exact_matrix& b_mat,
                                               const integer& a, const integer& b, const integer& x,
                                               const integer& y) {
  const std::size_t m = a_mat.order(), n = b_mat.order();
  if (m == 0 || n == 0) throw std::domain_error("block identity: orders must be >= 1");
  const integer lhs = det_int(assemble_2x2(a_mat, b_mat, a, b, x, y));
  const integer da = det_int(a_mat), db = det_int(b_mat);
  const integer dab = det_int(bordered(a_mat)), dbb = det_int(bordered(b_mat));
  const integer first = pow_nonneg(a, m) * pow_nonneg(b, n) * da * db;
  const integer cross = x * y * dab * dbb;
  block2x2_residuals r;
  r.as_stated = lhs - (first - pow_nonneg(a, m - 1) * pow_nonneg(b, m - 1) * cross);
  r.index_fixed = lhs - (first - pow_nonneg(a, m - 1) * pow_nonneg(b, n - 1) * cross);
  return r;
}

integer block_identity_3x3_residual(const exact_matrix& a_mat, const exact_matrix& b_mat,
                                    const exact_matrix& c_mat, const integer& a, const integer& b,
                                    const integer& c) {
  const std::size_t m = a_mat.order(), n = b_mat.order(), p = c_mat.order();
  if (m == 0 || n == 0 || p == 0) throw std::domain_error("block identity: orders must be >= 1");
  exact_matrix blk(m + n + p);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) blk.at(i, j) = a_mat.at(i, j);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) blk.at(m + i, m + j) = b_mat.at(i, j);
  for (std::size_t i = 0; i < p; ++i)
    for (std::size_t j = 0; j < p; ++j) blk.at(m + n + i, m + n + j) = c_mat.at(i, j);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j) blk.at(i, m + j) = blk.at(m + j, i) = c;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < p; ++j) blk.at(i, m + n + j) = blk.at(m + n + j, i) = b;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < p; ++j) blk.at(m + i, m + n + j) = blk.at(m + n + j, m + i) = a;

  const integer da = det_int(a_mat), db = det_int(b_mat), dc = det_int(c_mat);
  const integer dab = det_int(bordered(a_mat)), dbb = det_int(bordered(b_mat)),
                dcb = det_int(bordered(c_mat));
  const integer rhs = da * db * dc - a * a * da * dbb * dcb - b * b * dab * db * dcb -
                      c * c * dab * dbb * dc - 2 * a * b * c * dab * dbb * dcb;
  return det_int(blk) - rhs;
}

shift_residuals shift_identity_residuals(const exact_matrix& a_mat, const integer& x) {
  const std::size_t m = a_mat.order();
  if (m == 0) throw std::domain_error("shift identity: order must be >= 1");
  const exact_matrix shifted = exact_matrix::constant(m, x) + a_mat;
  const integer da = det_int(a_mat);
  const integer dab = det_int(bordered(a_mat));
  shift_residuals r;
  r.sum_rule = det_int(shifted) - (da - x * dab);
  r.border_rule = det_int(bordered(shifted)) - dab;
  const integer sign = (m % 2 == 0) ? integer(-1) : integer(1);
  r.negation_rule = det_int(bordered(a_mat.negated())) - sign * dab;
  return r;
}

integer desnanot_residual(const seq::sequence_spec& u, std::int64_t n, std::int64_t p) {
  if (n < 2) throw std::domain_error("desnanot_residual: order must be >= 2");
  if (p < 0) throw std::domain_error("desnanot_residual: offset must be >= 0");
  auto hank = [&u](std::int64_t off, std::int64_t ord) {
    exact_matrix m(static_cast<std::size_t>(ord));
    for (std::int64_t i = 0; i < ord; ++i)
      for (std::int64_t j = 0; j < ord; ++j)
        m.at(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = u.value(off + i + j);
    return m;
  };
  const integer lhs =
      det_int(hank(p, n)) * det_int(hank(p + 2, n)) - det_int(hank(p + 1, n)) * det_int(hank(p + 1, n));
  const integer rhs = det_int(hank(p + 2, n - 1)) * det_int(hank(p, n + 1));
  return lhs - rhs;
}

}  // namespace golomb::linalg
