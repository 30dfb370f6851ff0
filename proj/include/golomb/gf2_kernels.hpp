#ifndef GOLOMB_GF2_KERNELS_HPP
#define GOLOMB_GF2_KERNELS_HPP

#include <cstddef>
#include <cstdint>

// Row-combination kernels for bit-packed GF(2) elimination.  The scalar kernel
// is the reference; wider variants must be bit-for-bit equivalent and are
// selected at runtime from CPU capabilities (or pinned explicitly, which the
// equivalence tests rely on).

namespace golomb::gf2 {

enum class kernel_kind { scalar, avx2 };

using xor_rows_fn = void (*)(std::uint64_t* dst, const std::uint64_t* src, std::size_t words);

void xor_rows_scalar(std::uint64_t* dst, const std::uint64_t* src, std::size_t words);

bool avx2_available();
// Defined only in the AVX2 translation unit; calling it when !avx2_available()
// is undefined, so go through select_kernel.
void xor_rows_avx2(std::uint64_t* dst, const std::uint64_t* src, std::size_t words);

kernel_kind active_kernel_kind();
xor_rows_fn active_kernel();
void select_kernel(kernel_kind k);  // throws std::runtime_error if unsupported
void select_default_kernel();       // CPU detection

}  // namespace golomb::gf2

#endif
