#pragma once

// Data-parallel inner loops used by the resamplers and the grayscale
// converter. Each kernel has a scalar reference implementation and, on x86-64,
// an AVX2 variant; the variant is picked once at runtime from CPUID. Setting
// LIVC_SIMD=scalar in the environment forces the reference path.
//
// All variants are bit-exact with the scalar path (tests/test_kernels.cpp).

#include <cstddef>
#include <cstdint>

namespace livc::kernels {

enum class Isa { Scalar, Avx2 };

struct KernelTable {
  Isa isa;
  const char* name;

  // gray[i] = round_half_up(0.299 r + 0.587 g + 0.114 b) over interleaved RGB.
  void (*gray_row)(const std::uint8_t* rgb, std::uint8_t* gray, std::size_t pixels);

  // out[i] = floor((2 * (w_top * top[i] + w_bottom * bottom[i]) + denom) / (2 * denom)),
  // i.e. the weighted sum divided by denom, rounded half-up. The caller
  // guarantees the quotient is <= 255. Vector variants defer to the scalar loop
  // when denom > kMaxBlendDenom.
  void (*blend_rows)(const std::uint32_t* top, const std::uint32_t* bottom, std::uint32_t w_top,
                     std::uint32_t w_bottom, std::uint64_t denom, std::uint8_t* out, std::size_t n);

  // out[i] = src[index[i]]; every index < src_len.
  void (*gather_row)(const std::uint8_t* src, std::size_t src_len, const std::uint32_t* index,
                     std::uint8_t* out, std::size_t n);
};

inline constexpr std::uint64_t kMaxBlendDenom = std::uint64_t{1} << 42;

const KernelTable& scalar_kernels() noexcept;

// nullptr when the build or the CPU lacks AVX2.
const KernelTable* avx2_kernels() noexcept;

// The table used by the library.
const KernelTable& active_kernels() noexcept;

}  // namespace livc::kernels
