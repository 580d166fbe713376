#include "livc/kernels.hpp"

#include <cstdlib>
#include <cstring>
#include <string_view>

#if defined(__x86_64__) || defined(__i386__)
#include <immintrin.h>
#define LIVC_HAVE_AVX2_KERNELS 1
#endif

namespace livc::kernels {

namespace {

// ---- scalar reference ------------------------------------------------------

void gray_row_scalar(const std::uint8_t* rgb, std::uint8_t* gray, std::size_t pixels) {
  for (std::size_t i = 0; i < pixels; ++i) {
    const std::uint32_t weighted = 299u * rgb[3 * i] + 587u * rgb[3 * i + 1] + 114u * rgb[3 * i + 2];
    gray[i] = static_cast<std::uint8_t>((weighted + 500u) / 1000u);
  }
}

void blend_rows_scalar(const std::uint32_t* top, const std::uint32_t* bottom, std::uint32_t w_top,
                       std::uint32_t w_bottom, std::uint64_t denom, std::uint8_t* out, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    const std::uint64_t sum = std::uint64_t{w_top} * top[i] + std::uint64_t{w_bottom} * bottom[i];
    out[i] = static_cast<std::uint8_t>((2 * sum + denom) / (2 * denom));
  }
}

void gather_row_scalar(const std::uint8_t* src, std::size_t, const std::uint32_t* index, std::uint8_t* out,
                       std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) out[i] = src[index[i]];
}

constexpr KernelTable kScalar{Isa::Scalar, "scalar", gray_row_scalar, blend_rows_scalar, gather_row_scalar};

// ---- AVX2 --------------------------------------------------------------------

#ifdef LIVC_HAVE_AVX2_KERNELS

// Four doubles holding integers in [0,255] -> four bytes at out.
__attribute__((target("avx2"))) inline void store4(__m256d v, std::uint8_t* out) {
  __m128i ints = _mm256_cvttpd_epi32(v);
  ints = _mm_packus_epi32(ints, ints);
  ints = _mm_packus_epi16(ints, ints);
  const int packed = _mm_cvtsi128_si32(ints);
  std::memcpy(out, &packed, 4);
}

__attribute__((target("avx2"))) void gray_row_avx2(const std::uint8_t* rgb, std::uint8_t* gray,
                                                    std::size_t pixels) {
  const __m256i offsets = _mm256_setr_epi32(0, 3, 6, 9, 12, 15, 18, 21);
  const __m256i low_byte = _mm256_set1_epi32(0xFF);
  const __m256i wr = _mm256_set1_epi32(299), wg = _mm256_set1_epi32(587), wb = _mm256_set1_epi32(114);
  const __m256i half = _mm256_set1_epi32(500);
  const __m256d thousand = _mm256_set1_pd(1000.0);

  std::size_t i = 0;
  // Each gather reads 4 bytes from offset 3k, so keep one pixel of slack.
  for (; i + 9 <= pixels; i += 8) {
    const __m256i px = _mm256_i32gather_epi32(reinterpret_cast<const int*>(rgb + 3 * i), offsets, 1);
    const __m256i r = _mm256_and_si256(px, low_byte);
    const __m256i g = _mm256_and_si256(_mm256_srli_epi32(px, 8), low_byte);
    const __m256i b = _mm256_and_si256(_mm256_srli_epi32(px, 16), low_byte);
    __m256i sum = _mm256_add_epi32(_mm256_mullo_epi32(r, wr), _mm256_mullo_epi32(g, wg));
    sum = _mm256_add_epi32(sum, _mm256_mullo_epi32(b, wb));
    sum = _mm256_add_epi32(sum, half);
    // sum < 2^18, so the double quotient floors exactly.
    const __m256d lo = _mm256_floor_pd(_mm256_div_pd(_mm256_cvtepi32_pd(_mm256_castsi256_si128(sum)), thousand));
    const __m256d hi = _mm256_floor_pd(_mm256_div_pd(_mm256_cvtepi32_pd(_mm256_extracti128_si256(sum, 1)), thousand));
    store4(lo, gray + i);
    store4(hi, gray + i + 4);
  }
  gray_row_scalar(rgb + 3 * i, gray + i, pixels - i);
}

__attribute__((target("avx2"))) void blend_rows_avx2(const std::uint32_t* top, const std::uint32_t* bottom,
                                                      std::uint32_t w_top, std::uint32_t w_bottom,
                                                      std::uint64_t denom, std::uint8_t* out, std::size_t n) {
  // Operands are integers below 2^52, where double add/mul are exact and
  // floor(p / q) of the rounded quotient equals the integer quotient.
  const __m256d wt = _mm256_set1_pd(static_cast<double>(w_top));
  const __m256d wb = _mm256_set1_pd(static_cast<double>(w_bottom));
  const __m256d d = _mm256_set1_pd(static_cast<double>(denom));
  const __m256d two_d = _mm256_set1_pd(2.0 * static_cast<double>(denom));

  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d t = _mm256_cvtepi32_pd(_mm_loadu_si128(reinterpret_cast<const __m128i*>(top + i)));
    const __m256d b = _mm256_cvtepi32_pd(_mm_loadu_si128(reinterpret_cast<const __m128i*>(bottom + i)));
    const __m256d sum = _mm256_add_pd(_mm256_mul_pd(t, wt), _mm256_mul_pd(b, wb));
    const __m256d p = _mm256_add_pd(_mm256_add_pd(sum, sum), d);
    store4(_mm256_floor_pd(_mm256_div_pd(p, two_d)), out + i);
  }
  blend_rows_scalar(top + i, bottom + i, w_top, w_bottom, denom, out + i, n - i);
}

__attribute__((target("avx2"))) void gather_row_avx2(const std::uint8_t* src, std::size_t src_len,
                                                      const std::uint32_t* index, std::uint8_t* out,
                                                      std::size_t n) {
  const __m256i low_byte = _mm256_set1_epi32(0xFF);
  std::size_t i = 0;
  // Indices are nondecreasing in practice but not required; a 32-bit gather
  // reads 3 bytes past each index, so only safe lanes take the vector path.
  for (; i + 8 <= n; i += 8) {
    const __m256i idx = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(index + i));
    const __m256i limit = _mm256_set1_epi32(static_cast<int>(src_len >= 4 ? src_len - 4 : 0));
    const __m256i over = _mm256_cmpgt_epi32(idx, limit);
    if (src_len < 4 || src_len - 4 > 0x7FFFFFFF || !_mm256_testz_si256(over, over)) {
      gather_row_scalar(src, src_len, index + i, out + i, 8);
      continue;
    }
    __m256i v = _mm256_and_si256(_mm256_i32gather_epi32(reinterpret_cast<const int*>(src), idx, 1), low_byte);
    __m128i packed = _mm_packus_epi32(_mm256_castsi256_si128(v), _mm256_extracti128_si256(v, 1));
    packed = _mm_packus_epi16(packed, packed);
    _mm_storel_epi64(reinterpret_cast<__m128i*>(out + i), packed);
  }
  gather_row_scalar(src, src_len, index + i, out + i, n - i);
}

void blend_rows_avx2_checked(const std::uint32_t* top, const std::uint32_t* bottom, std::uint32_t w_top,
                             std::uint32_t w_bottom, std::uint64_t denom, std::uint8_t* out, std::size_t n) {
  if (denom > kMaxBlendDenom) return blend_rows_scalar(top, bottom, w_top, w_bottom, denom, out, n);
  blend_rows_avx2(top, bottom, w_top, w_bottom, denom, out, n);
}

constexpr KernelTable kAvx2{Isa::Avx2, "avx2", gray_row_avx2, blend_rows_avx2_checked, gather_row_avx2};

#endif

const KernelTable& select() noexcept {
  if (const char* env = std::getenv("LIVC_SIMD"); env && std::string_view(env) == "scalar") return kScalar;
  if (const KernelTable* avx2 = avx2_kernels()) return *avx2;
  return kScalar;
}

}  // namespace

const KernelTable& scalar_kernels() noexcept { return kScalar; }

const KernelTable* avx2_kernels() noexcept {
#ifdef LIVC_HAVE_AVX2_KERNELS
  static const bool supported = __builtin_cpu_supports("avx2");
  return supported ? &kAvx2 : nullptr;
#else
  return nullptr;
#endif
}

const KernelTable& active_kernels() noexcept {
  static const KernelTable& table = select();
  return table;
}

}  // namespace livc::kernels
