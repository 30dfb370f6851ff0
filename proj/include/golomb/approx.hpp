#ifndef GOLOMB_APPROX_HPP
#define GOLOMB_APPROX_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "golomb/pade.hpp"
#include "golomb/rational_interval.hpp"

namespace golomb::approx {

// Q_{k,m}(1/b) vanished: m below the usable range for this k; retry larger m.
class degenerate_evaluation : public std::runtime_error {
 public:
  degenerate_evaluation(std::int64_t k, std::int64_t m);
  std::int64_t k() const { return k_; }
  std::int64_t m() const { return m_; }

 private:
  std::int64_t k_, m_;
};

class insufficient_records : public std::runtime_error {
 public:
  explicit insufficient_records(std::int64_t k);
  std::int64_t k() const { return k_; }

 private:
  std::int64_t k_;
};

struct lifted_approximant {
  std::int64_t k = 0;
  std::int64_t m = 0;
  int epsilon = -1;
  pade::int_polynomial p;
  pade::int_polynomial q;

  std::int64_t degree_bound() const { return (std::int64_t(1) << m) * (k + 1); }
};

// Functional-equation lift: re-add the first m series terms over their common
// denominator and substitute z -> z^{2^m} in the base approximant.
lifted_approximant lift(const pade::pade_approximant& a, std::int64_t m, int epsilon);

// Enclosure of sum_{n>=0} 1/(b^{2^n} + eps) of width < target_gap.  Partial sum
// plus the tail bound 4 b^{-2^{N+1}}; tails are positive for both signs, so the
// exact partial sum is the lower endpoint.
rational_interval evaluate_reference(int epsilon, const integer& b, const rational& target_gap);

struct convergent_record {
  std::int64_t k = 0;
  std::int64_t m = 0;
  integer b;
  int epsilon = -1;
  integer p;
  integer q;  // > 0
  rational_interval err;            // encloses |alpha - p/q|, err.lo > 0
  std::optional<rational> mu_eff;   // lower witness, unset when q <= 1
};

// Exact integers p, q from the lift evaluated at 1/b; alpha must enclose the
// target value with width < 1/q^2 and must not touch p/q.
convergent_record convergent(const lifted_approximant& l, const integer& b,
                             const rational_interval& alpha);

// -log(err.hi)/log(q) rounded downward (a lower witness), 64 fractional bits.
rational effective_exponent(const convergent_record& rec);

// (1+rho) * theta / delta, exact.
rational ar_bound(const rational& rho, const rational& delta, const rational& theta);

struct gap_result {
  std::vector<integer> values;
  rational max_ratio;
};

// First `count` elements of {k 2^n : n >= n0, k odd in [2^{K-1}+1, 2^K+1]} and
// the largest consecutive ratio.
gap_result gap_sequence(std::int64_t big_k, std::int64_t n0, std::int64_t count);

struct exponent_schedule {
  std::int64_t big_k = 1;
  integer b;
  int epsilon = 1;
  rational theta;  // (2^{K-1}+3)/(2^{K-1}+1)
  rational delta;  // 2^K/(2^K+1)
  rational rho;    // 1: the lower bound of the two-sided error estimate is quadratic
  std::vector<convergent_record> records;                      // sorted by q, strictly increasing
  std::vector<std::pair<std::int64_t, std::int64_t>> degenerate;  // skipped (k, m)
  std::vector<std::pair<std::int64_t, std::int64_t>> m0;          // per-k start of the usable range
  rational mu_eff_tail;      // mu_eff of the final (largest-q) record
  rational mu_eff_tail_min;  // min/max over the tail half
  rational mu_eff_tail_max;
  rational max_log_q_ratio_tail;  // empirical max of log q_{n+1} / log q_n over the tail half
};

// All admissible k (k+1 odd in [2^{K-1}+1, 2^K+1]) and m <= m_max, skipping
// degenerate evaluations, records kept from the empirically discovered m0(k).
exponent_schedule build_exponent_schedule(std::int64_t big_k, const integer& b, int epsilon,
                                          std::int64_t m_max);

}  // namespace golomb::approx

#endif
