#ifndef GOLOMB_GF2_MATRIX_HPP
#define GOLOMB_GF2_MATRIX_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

#include "golomb/exact_matrix.hpp"

namespace golomb::gf2 {

// Square matrix over GF(2), one bit per entry, rows packed into 64-bit words.
class gf2_matrix {
 public:
  gf2_matrix() = default;
  explicit gf2_matrix(std::size_t order);

  static gf2_matrix identity(std::size_t order);
  static gf2_matrix reduce(const linalg::exact_matrix& m);

  std::size_t order() const { return n_; }
  std::size_t words_per_row() const { return words_; }

  bool get(std::size_t i, std::size_t j) const;
  void set(std::size_t i, std::size_t j, bool v);

  gf2_matrix bordered() const;

  const std::uint64_t* row(std::size_t i) const { return bits_.data() + i * words_; }
  std::uint64_t* row(std::size_t i) { return bits_.data() + i * words_; }

  bool operator==(const gf2_matrix& o) const = default;

 private:
  std::size_t n_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> bits_;
};

// Determinant over GF(2) via elimination with the active row kernel.
int det_gf2(const gf2_matrix& m);

}  // namespace golomb::gf2

#endif
