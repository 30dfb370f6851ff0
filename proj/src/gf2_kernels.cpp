#include "golomb/gf2_kernels.hpp"

#include <atomic>
#include <stdexcept>

namespace golomb::gf2 {

void xor_rows_scalar(std::uint64_t* dst, const std::uint64_t* src, std::size_t words) {
  for (std::size_t i = 0; i < words; ++i) dst[i] ^= src[i];
}

#if !(defined(__x86_64__) || defined(_M_X64))
bool avx2_available() { return false; }
// Stub so the dispatcher links; select_kernel refuses it before it can run.
void xor_rows_avx2(std::uint64_t* dst, const std::uint64_t* src, std::size_t words) {
  xor_rows_scalar(dst, src, words);
}
#endif

namespace {

std::atomic<xor_rows_fn> g_kernel{nullptr};
std::atomic<kernel_kind> g_kind{kernel_kind::scalar};

xor_rows_fn resolve(kernel_kind k) {
  switch (k) {
    case kernel_kind::scalar:
      return &xor_rows_scalar;
    case kernel_kind::avx2:
      if (!avx2_available()) throw std::runtime_error("gf2: avx2 kernel not available on this CPU");
      return &xor_rows_avx2;
  }
  throw std::logic_error("gf2: unknown kernel kind");
}

}  // namespace

void select_kernel(kernel_kind k) {
  g_kernel.store(resolve(k), std::memory_order_relaxed);
  g_kind.store(k, std::memory_order_relaxed);
}

void select_default_kernel() {
  select_kernel(avx2_available() ? kernel_kind::avx2 : kernel_kind::scalar);
}

xor_rows_fn active_kernel() {
  xor_rows_fn f = g_kernel.load(std::memory_order_relaxed);
  if (f == nullptr) {
    select_default_kernel();
    f = g_kernel.load(std::memory_order_relaxed);
  }
  return f;
}

kernel_kind active_kernel_kind() {
  active_kernel();
  return g_kind.load(std::memory_order_relaxed);
}

}  // namespace golomb::gf2
