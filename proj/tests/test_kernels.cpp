#include <doctest.h>

#include <random>

#include "livc/kernels.hpp"
#include "support.hpp"

using namespace livc::kernels;

// Every vector variant must agree bit for bit with the scalar reference.

TEST_CASE("active table is one of the known variants") {
  const auto& active = active_kernels();
  CHECK((active.isa == Isa::Scalar || active.isa == Isa::Avx2));
  MESSAGE("active kernels: " << active.name);
}

TEST_CASE("gray_row variants agree, including every RGB corner and tail lengths") {
  const auto* simd = avx2_kernels();
  if (!simd) return;
  const auto& ref = scalar_kernels();
  std::mt19937_64 rng(1);
  for (std::size_t n : {0, 1, 7, 8, 9, 16, 17, 33, 1000, 4099}) {
    const auto rgb = livc::testing::random_bytes(rng, 3 * n);
    std::vector<std::uint8_t> a(n), b(n);
    ref.gray_row(rgb.data(), a.data(), n);
    simd->gray_row(rgb.data(), b.data(), n);
    REQUIRE(a == b);
  }
  // Exhaustive over one channel at a time, plus the extremes.
  std::vector<std::uint8_t> rgb;
  for (int v = 0; v < 256; ++v)
    for (int ch = 0; ch < 3; ++ch) {
      std::uint8_t px[3] = {0, 0, 0};
      px[ch] = static_cast<std::uint8_t>(v);
      rgb.insert(rgb.end(), px, px + 3);
    }
  const std::size_t n = rgb.size() / 3;
  std::vector<std::uint8_t> a(n), b(n);
  ref.gray_row(rgb.data(), a.data(), n);
  simd->gray_row(rgb.data(), b.data(), n);
  CHECK(a == b);
}

TEST_CASE("blend_rows variants agree on exact halves and random weights") {
  const auto* simd = avx2_kernels();
  if (!simd) return;
  const auto& ref = scalar_kernels();
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 500; ++trial) {
    const std::uint32_t dx = std::uniform_int_distribution<std::uint32_t>(1, trial % 2 ? 7 : 4000)(rng);
    const std::uint32_t dy = std::uniform_int_distribution<std::uint32_t>(1, trial % 3 ? 5 : 4000)(rng);
    const std::uint32_t wb = std::uniform_int_distribution<std::uint32_t>(0, dy)(rng);
    const std::size_t n = std::uniform_int_distribution<std::size_t>(0, 70)(rng);
    std::vector<std::uint32_t> top(n), bottom(n);
    for (std::size_t i = 0; i < n; ++i) {
      std::uint32_t f = std::uniform_int_distribution<std::uint32_t>(0, dx)(rng);
      top[i] = (dx - f) * (rng() & 0xFF) + f * (rng() & 0xFF);
      f = std::uniform_int_distribution<std::uint32_t>(0, dx)(rng);
      bottom[i] = (dx - f) * (rng() & 0xFF) + f * (rng() & 0xFF);
    }
    std::vector<std::uint8_t> a(n), b(n);
    ref.blend_rows(top.data(), bottom.data(), dy - wb, wb, std::uint64_t{dx} * dy, a.data(), n);
    simd->blend_rows(top.data(), bottom.data(), dy - wb, wb, std::uint64_t{dx} * dy, b.data(), n);
    REQUIRE(a == b);
  }
  // x.5 ties must round up on both paths: (1*1 + 1*2) / 2 = 1.5 -> 2
  std::uint32_t top[4] = {1, 3, 5, 253}, bottom[4] = {2, 4, 6, 254};
  std::uint8_t a[4], b[4];
  ref.blend_rows(top, bottom, 1, 1, 2, a, 4);
  simd->blend_rows(top, bottom, 1, 1, 2, b, 4);
  CHECK(a[0] == 2);
  CHECK(a[3] == 254);
  CHECK(std::equal(a, a + 4, b));
}

TEST_CASE("gather_row variants agree, including indices near the end of the source") {
  const auto* simd = avx2_kernels();
  if (!simd) return;
  const auto& ref = scalar_kernels();
  std::mt19937_64 rng(3);
  for (std::size_t src_len : {1, 2, 3, 4, 5, 31, 64, 1000}) {
    const auto src = livc::testing::random_bytes(rng, src_len);
    for (std::size_t n : {1, 8, 9, 40, 257}) {
      std::vector<std::uint32_t> idx(n);
      for (auto& i : idx) i = static_cast<std::uint32_t>(rng() % src_len);
      std::vector<std::uint8_t> a(n), b(n);
      ref.gather_row(src.data(), src.size(), idx.data(), a.data(), n);
      simd->gather_row(src.data(), src.size(), idx.data(), b.data(), n);
      REQUIRE(a == b);
    }
  }
}
