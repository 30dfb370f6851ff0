#ifndef GOLOMB_EXACT_MATRIX_HPP
#define GOLOMB_EXACT_MATRIX_HPP

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "golomb/numeric.hpp"
#include "golomb/sequences.hpp"

namespace golomb::linalg {

// Square matrix over arbitrary-precision integers.  Order 0 is allowed and has
// determinant 1 by convention, so recursive identities degenerate gracefully.
class exact_matrix {
 public:
  exact_matrix() = default;
  explicit exact_matrix(std::size_t order) : n_(order), a_(order * order) {}

  static exact_matrix identity(std::size_t order);
  static exact_matrix constant(std::size_t order, const integer& value);
  static exact_matrix from_rows(std::initializer_list<std::initializer_list<long>> rows);

  std::size_t order() const { return n_; }
  integer& at(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
  const integer& at(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }

  exact_matrix operator+(const exact_matrix& o) const;
  exact_matrix scaled(const integer& c) const;
  exact_matrix negated() const;

  bool operator==(const exact_matrix& o) const = default;

 private:
  std::size_t n_ = 0;
  std::vector<integer> a_;
};

// Fraction-free (Bareiss) determinant; every intermediate is an exact integer.
integer det_int(const exact_matrix& m);

// [[M, 1],[1^t, 0]]: one bordering row and column of ones, zero corner.
exact_matrix bordered(const exact_matrix& m);

// Residuals of the block-determinant identities.  Each left side is the
// determinant of the fully assembled block matrix, so the comparisons are
// oracles rather than algebraic rewrites of the right side.
struct block2x2_residuals {
  integer as_stated;    // right side with a^{m-1} b^{m-1}
  integer index_fixed;  // right side with a^{m-1} b^{n-1}
};
block2x2_residuals block_identity_2x2_residual(const exact_matrix& a_mat, const exact_matrix& b_mat,
                                               const integer& a, const integer& b, const integer& x,
                                               const integer& y);

integer block_identity_3x3_residual(const exact_matrix& a_mat, const exact_matrix& b_mat,
                                    const exact_matrix& c_mat, const integer& a, const integer& b,
                                    const integer& c);

struct shift_residuals {
  integer sum_rule;       // |x*ones + A| - (|A| - x|bordered(A)|)
  integer border_rule;    // |bordered(x*ones + A)| - |bordered(A)|
  integer negation_rule;  // |bordered(-A)| - (-1)^{m+1} |bordered(A)|
};
shift_residuals shift_identity_residuals(const exact_matrix& a_mat, const integer& x);

// |H_n^p||H_n^{p+2}| - |H_n^{p+1}|^2 - |H_{n-1}^{p+2}||H_{n+1}^p| from five
// independent determinant evaluations over the given sequence.
integer desnanot_residual(const seq::sequence_spec& u, std::int64_t n, std::int64_t p);

}  // namespace golomb::linalg

#endif
