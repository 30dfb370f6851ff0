#ifndef GOLOMB_PADE_HPP
#define GOLOMB_PADE_HPP

#include <cstdint>
#include <stdexcept>

#include "golomb/int_polynomial.hpp"
#include "golomb/truncated_series.hpp"

namespace golomb::pade {

// A leading principal Hankel minor of the series vanished, so the requested
// [k-1/k] row entry does not exist.  Reported, never worked around.
class not_normal_error : public std::runtime_error {
 public:
  not_normal_error(std::int64_t failing_order);
  std::int64_t failing_order() const { return j_; }

 private:
  std::int64_t j_;
};

class malformed_approximant_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// [k-1/k]-row approximant in canonical form: P and Q jointly primitive,
// Q(0) > 0.  h_k is the defect coefficient (z^{2k} for a raw series,
// z^{2k+1} for the shifted construction of golomb_pade).
struct pade_approximant {
  std::int64_t k = 0;
  int_polynomial p;
  int_polynomial q;
  rational h_k;

  void canonicalize();
  bool is_canonical() const;
};

// Coefficients h(0..order) of sum_{j>=0} z^{2^j}/(1 + eps z^{2^j}) by direct
// expansion of each geometric term: eps=-1 gives the ruler coefficients,
// eps=+1 the alternating variant.
truncated_series golomb_series(int epsilon, std::int64_t order);

// [k-1/k] Padé row entry of c.  Checks det H_j^0(c) != 0 for every j <= k
// before solving; deg p <= k-1, deg q <= k, c*q - p = O(z^{2k}).
pade_approximant pade_k(const truncated_series& c, std::int64_t k);

// Coefficient of z^{2k} in c - p/q by exact series division.
rational defect(const truncated_series& c, const pade_approximant& a);

// Lemma-style approximant of the full series (numerator divisible by z),
// with the defect read at z^{2k+1} and verified nonzero.
pade_approximant golomb_pade(int epsilon, std::int64_t k);

}  // namespace golomb::pade

#endif
