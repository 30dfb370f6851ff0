#include "golomb/gf2_matrix.hpp"

#include <algorithm>

#include "golomb/gf2_kernels.hpp"

namespace golomb::gf2 {

gf2_matrix::gf2_matrix(std::size_t order)
    : n_(order), words_((order + 63) / 64), bits_(n_ * words_, 0) {}

gf2_matrix gf2_matrix::identity(std::size_t order) {
  gf2_matrix m(order);
  for (std::size_t i = 0; i < order; ++i) m.set(i, i, true);
  return m;
}

gf2_matrix gf2_matrix::reduce(const linalg::exact_matrix& src) {
  gf2_matrix m(src.order());
  for (std::size_t i = 0; i < src.order(); ++i)
    for (std::size_t j = 0; j < src.order(); ++j) m.set(i, j, is_odd(src.at(i, j)));
  return m;
}

bool gf2_matrix::get(std::size_t i, std::size_t j) const {
  return (bits_[i * words_ + j / 64] >> (j % 64)) & 1u;
}

void gf2_matrix::set(std::size_t i, std::size_t j, bool v) {
  std::uint64_t& w = bits_[i * words_ + j / 64];
  const std::uint64_t mask = std::uint64_t(1) << (j % 64);
  w = v ? (w | mask) : (w & ~mask);
}

gf2_matrix gf2_matrix::bordered() const {
  gf2_matrix r(n_ + 1);
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) r.set(i, j, get(i, j));
    r.set(i, n_, true);
    r.set(n_, i, true);
  }
  return r;
}

int det_gf2(const gf2_matrix& m) {
  const std::size_t n = m.order();
  if (n == 0) return 1;
  gf2_matrix w = m;
  const std::size_t words = w.words_per_row();
  const xor_rows_fn xor_rows = active_kernel();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && !w.get(piv, c)) ++piv;
    if (piv == n) return 0;
    if (piv != c) std::swap_ranges(w.row(piv), w.row(piv) + words, w.row(c));
    for (std::size_t i = c + 1; i < n; ++i)
      if (w.get(i, c)) xor_rows(w.row(i), w.row(c), words);
  }
  return 1;
}

}  // namespace golomb::gf2
