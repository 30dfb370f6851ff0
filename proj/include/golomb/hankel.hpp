#ifndef GOLOMB_HANKEL_HPP
#define GOLOMB_HANKEL_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "golomb/exact_matrix.hpp"
#include "golomb/gf2_matrix.hpp"
#include "golomb/sequences.hpp"

namespace golomb::hankel {

enum class variant { g0, g1, f };

const char* variant_name(variant v);
seq::sequence_spec variant_sequence(variant v);

struct hankel_query {
  variant v = variant::g1;
  std::int64_t p = 0;
  std::int64_t n = 1;
  bool barred = false;
};

// Entry (i,j) = u(p+i+j-2), 1-based i,j.
linalg::exact_matrix hankel_matrix(const seq::sequence_spec& u, std::int64_t p, std::int64_t n);

// Entry (i,j) = u(p+2(i+j-2)): the even-index skeleton.
linalg::exact_matrix k_matrix(const seq::sequence_spec& u, std::int64_t p, std::int64_t n);

// Conjugates H_{2n}^p and H_{2n+1}^p by the odd-first/even-second column
// permutation and compares entrywise against the K-matrix block layouts
// (column-deleted off-diagonal block in the odd case).
bool interleave_check(const seq::sequence_spec& u, std::int64_t p, std::int64_t n);

// Determinant parity by GF(2) elimination on the reduced (optionally bordered) matrix.
int parity_direct(const hankel_query& q);

// Tabulated mod-6 parity; offsets 0..2 only.  The f variant maps to g1
// (entrywise mod-2 equality, preserved by bordering).
int parity_closed_form(const hankel_query& q);

struct parity_report {
  hankel_query query;
  int direct = 0;
  int closed_form = 0;
  std::optional<int> exact;  // det_int mod 2, when the exact route was run
  bool agree = false;
};

// All eight tabulated families for 1 <= n <= n_max; the exact-determinant
// route is added for n <= exact_n_max as a third, elimination-free check.
std::vector<parity_report> theorem_check(std::int64_t n_max, std::int64_t exact_n_max);

struct clause_check {
  std::string clause;
  std::int64_t n = 0;
  std::int64_t p = 0;
  int lhs = 0;
  int rhs = 0;
  std::optional<int> rhs_corrected;
};

struct clause_summary {
  std::string clause;
  std::int64_t items = 0;
  bool literal_holds = true;
  std::optional<std::pair<std::int64_t, std::int64_t>> first_counterexample;  // (n, p)
  bool has_corrected = false;
  bool corrected_holds = true;
  std::string note;
};

// Every recurrence clause evaluated with direct parities on both sides for
// 1 <= n <= n_max and every admissible clause offset <= 2.  Clauses with a
// known index discrepancy also evaluate a corrected right side; failures are
// reported with their first counterexample, never patched silently.
std::vector<clause_check> recurrence_items(std::int64_t n_max);
std::vector<clause_summary> recurrence_suite(std::int64_t n_max);

struct main_h_report {
  std::vector<integer> det_g;  // det H_n^1(g), n = 1..n_max_exact
  std::vector<integer> det_f;
  std::int64_t parity_checked = 0;
  bool all_odd_nonzero = true;
  bool all_parity_one = true;
};

main_h_report verify_main_h(std::int64_t n_max_exact, std::int64_t n_max_parity);

}  // namespace golomb::hankel

#endif
