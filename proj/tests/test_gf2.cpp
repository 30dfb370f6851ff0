#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "golomb/gf2_kernels.hpp"
#include "golomb/gf2_matrix.hpp"

using namespace golomb;
using gf2::gf2_matrix;

namespace {

linalg::exact_matrix random_matrix(std::mt19937_64& rng, std::size_t order, int lo, int hi) {
  std::uniform_int_distribution<int> dist(lo, hi);
  linalg::exact_matrix m(order);
  for (std::size_t i = 0; i < order; ++i)
    for (std::size_t j = 0; j < order; ++j) m.at(i, j) = dist(rng);
  return m;
}

gf2_matrix random_bits(std::mt19937_64& rng, std::size_t order) {
  gf2_matrix m(order);
  for (std::size_t i = 0; i < order; ++i)
    for (std::size_t j = 0; j < order; ++j) m.set(i, j, (rng() & 1) != 0);
  return m;
}

struct kernel_guard {
  ~kernel_guard() { gf2::select_default_kernel(); }
};

}  // namespace

TEST_CASE("gf2 determinant basics") {
  for (std::size_t n : {1u, 2u, 5u, 64u, 65u, 130u})
    CHECK(gf2::det_gf2(gf2_matrix::identity(n)) == 1);

  gf2_matrix dup(3);
  dup.set(0, 0, true);
  dup.set(0, 2, true);
  dup.set(1, 0, true);
  dup.set(1, 2, true);  // row 1 equals row 0
  dup.set(2, 1, true);
  CHECK(gf2::det_gf2(dup) == 0);

  const auto m = gf2_matrix::reduce(linalg::exact_matrix::from_rows({{1, 2}, {2, 1}}));
  CHECK(gf2::det_gf2(m) == 1);
}

TEST_CASE("reduction takes each entry mod 2, negatives included") {
  const auto m = linalg::exact_matrix::from_rows({{-3, 4}, {7, -2}});
  const auto r = gf2_matrix::reduce(m);
  CHECK(r.get(0, 0));
  CHECK(!r.get(0, 1));
  CHECK(r.get(1, 0));
  CHECK(!r.get(1, 1));
}

TEST_CASE("gf2 parity equals exact determinant parity") {
  std::mt19937_64 rng(808);
  for (int trial = 0; trial < 120; ++trial) {
    const std::size_t n = 1 + static_cast<std::size_t>(rng() % 32);
    const auto m = random_matrix(rng, n, -20, 20);
    const integer d = det_int(m);
    CHECK(gf2::det_gf2(gf2_matrix::reduce(m)) == (is_odd(d) ? 1 : 0));
  }
}

TEST_CASE("bordered gf2 matrix matches exact bordering") {
  std::mt19937_64 rng(909);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 1 + static_cast<std::size_t>(rng() % 20);
    const auto m = random_matrix(rng, n, -9, 9);
    CHECK(gf2_matrix::reduce(m).bordered() == gf2_matrix::reduce(linalg::bordered(m)));
  }
}

TEST_CASE("xor kernels are bit-for-bit equivalent") {
  if (!gf2::avx2_available()) {
    MESSAGE("avx2 not available; scalar-only run");
    return;
  }
  std::mt19937_64 rng(1717);
  for (std::size_t words : {1u, 3u, 4u, 5u, 8u, 9u, 31u, 64u}) {
    std::vector<std::uint64_t> a(words), b(words);
    for (auto& w : a) w = rng();
    for (auto& w : b) w = rng();
    auto a2 = a;
    gf2::xor_rows_scalar(a.data(), b.data(), words);
    gf2::xor_rows_avx2(a2.data(), b.data(), words);
    CHECK(a == a2);
  }
}

TEST_CASE("elimination result is kernel-independent") {
  if (!gf2::avx2_available()) return;
  kernel_guard restore;
  std::mt19937_64 rng(2718);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = 1 + static_cast<std::size_t>(rng() % 300);
    const auto m = random_bits(rng, n);
    gf2::select_kernel(gf2::kernel_kind::scalar);
    const int d_scalar = gf2::det_gf2(m);
    gf2::select_kernel(gf2::kernel_kind::avx2);
    const int d_avx2 = gf2::det_gf2(m);
    CHECK(d_scalar == d_avx2);
  }
}

TEST_CASE("runtime dispatch picks the wide kernel when the CPU has it") {
  kernel_guard restore;
  gf2::select_default_kernel();
  if (gf2::avx2_available())
    CHECK(gf2::active_kernel_kind() == gf2::kernel_kind::avx2);
  else
    CHECK(gf2::active_kernel_kind() == gf2::kernel_kind::scalar);
}
