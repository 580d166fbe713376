#include "livc/lossy.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <vector>

#include "livc/kernels.hpp"

namespace livc::lossy {

ScaleSpec::ScaleSpec(std::size_t rows, std::size_t cols) : target_rows(rows), target_cols(cols) {
  if (rows == 0 || cols == 0)
    fail(ErrorCode::InvalidDimensions, "scale target must be at least 1x1, got " + std::to_string(rows) + "x" +
                                           std::to_string(cols));
}

ScaleSpec scale_by_factor(const PixelMatrix& m, double factor) {
  if (!(factor > 0.0 && factor <= 1.0))
    fail(ErrorCode::InvalidArgument, "scale factor " + std::to_string(factor) + " not in (0,1]");
  auto axis = [factor](std::size_t dim) {
    auto t = static_cast<std::size_t>(std::floor(factor * static_cast<double>(dim) + 0.5));
    return std::clamp<std::size_t>(t, 1, dim);
  };
  return ScaleSpec(axis(m.rows()), axis(m.cols()));
}

PixelMatrix nn_resample(const PixelMatrix& m, const ScaleSpec& s) {
  const auto& k = kernels::active_kernels();
  std::vector<std::uint32_t> col_index(s.target_cols);
  for (std::size_t c = 0; c < s.target_cols; ++c)
    col_index[c] = static_cast<std::uint32_t>(std::uint64_t{c} * m.cols() / s.target_cols);

  std::vector<std::uint8_t> out(s.target_rows * s.target_cols);
  for (std::size_t r = 0; r < s.target_rows; ++r) {
    const std::size_t src_r = std::uint64_t{r} * m.rows() / s.target_rows;
    auto src = m.row(src_r);
    k.gather_row(src.data(), src.size(), col_index.data(), out.data() + r * s.target_cols, s.target_cols);
  }
  return PixelMatrix(s.target_rows, s.target_cols, std::move(out));
}

namespace {

constexpr std::uint64_t kMaxAxisDenom = std::uint64_t{1} << 23;

// Source position of each output sample along one axis, as lo + frac / denom.
struct AxisMap {
  std::uint64_t denom = 1;
  std::vector<std::uint32_t> lo;
  std::vector<std::uint32_t> hi;
  std::vector<std::uint32_t> frac;
};

AxisMap corner_aligned(std::size_t src, std::size_t dst) {
  AxisMap map;
  map.lo.resize(dst);
  map.hi.resize(dst);
  map.frac.resize(dst);
  if (dst == 1 || src == 1) return map;  // everything samples index 0

  const std::uint64_t g = std::gcd<std::uint64_t>(src - 1, dst - 1);
  const std::uint64_t step = (src - 1) / g;
  map.denom = (dst - 1) / g;
  if (map.denom >= kMaxAxisDenom)
    fail(ErrorCode::InvalidDimensions, "bilinear axis of " + std::to_string(dst) + " samples is too large");
  for (std::size_t i = 0; i < dst; ++i) {
    const std::uint64_t pos = i * step;
    map.lo[i] = static_cast<std::uint32_t>(pos / map.denom);
    map.frac[i] = static_cast<std::uint32_t>(pos % map.denom);
    map.hi[i] = static_cast<std::uint32_t>(std::min<std::uint64_t>(map.lo[i] + 1, src - 1));
  }
  return map;
}

}  // namespace

PixelMatrix bilinear_resample(const PixelMatrix& m, const ScaleSpec& s) {
  const auto& k = kernels::active_kernels();
  const AxisMap rows = corner_aligned(m.rows(), s.target_rows);
  const AxisMap cols = corner_aligned(m.cols(), s.target_cols);
  const std::uint64_t denom = rows.denom * cols.denom;
  const auto dx = static_cast<std::uint32_t>(cols.denom);

  // Horizontally interpolated source rows, scaled by cols.denom. Two slots
  // cover the pair of rows the vertical blend needs.
  std::vector<std::uint32_t> cache[2] = {std::vector<std::uint32_t>(s.target_cols),
                                         std::vector<std::uint32_t>(s.target_cols)};
  std::size_t cached_row[2] = {std::numeric_limits<std::size_t>::max(), std::numeric_limits<std::size_t>::max()};
  int next_slot = 0;

  auto horizontal = [&](std::size_t src_r, int avoid) -> const std::uint32_t* {
    for (int slot = 0; slot < 2; ++slot)
      if (cached_row[slot] == src_r) return cache[slot].data();
    int slot = next_slot == avoid ? 1 - avoid : next_slot;
    next_slot = 1 - slot;
    auto src = m.row(src_r);
    auto& h = cache[slot];
    for (std::size_t c = 0; c < s.target_cols; ++c)
      h[c] = (dx - cols.frac[c]) * std::uint32_t{src[cols.lo[c]]} + cols.frac[c] * std::uint32_t{src[cols.hi[c]]};
    cached_row[slot] = src_r;
    return h.data();
  };
  auto slot_of = [&](const std::uint32_t* p) { return p == cache[0].data() ? 0 : 1; };

  std::vector<std::uint8_t> out(s.target_rows * s.target_cols);
  for (std::size_t r = 0; r < s.target_rows; ++r) {
    const std::uint32_t* top = horizontal(rows.lo[r], -1);
    const std::uint32_t* bottom = horizontal(rows.hi[r], slot_of(top));
    const auto w_bottom = rows.frac[r];
    const auto w_top = static_cast<std::uint32_t>(rows.denom) - w_bottom;
    k.blend_rows(top, bottom, w_top, w_bottom, denom, out.data() + r * s.target_cols, s.target_cols);
  }
  return PixelMatrix(s.target_rows, s.target_cols, std::move(out));
}

LossyArchive compress(const PixelMatrix& m, const ScaleSpec& s) {
  if (s.target_rows > m.rows() || s.target_cols > m.cols())
    fail(ErrorCode::UpscaleRequested, "target " + std::to_string(s.target_rows) + "x" +
                                          std::to_string(s.target_cols) + " exceeds source " +
                                          std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
  if (m.rows() > std::numeric_limits<std::uint32_t>::max() || m.cols() > std::numeric_limits<std::uint32_t>::max())
    fail(ErrorCode::InvalidDimensions, "matrix dimensions exceed u32");
  return LossyArchive{static_cast<std::uint32_t>(m.rows()), static_cast<std::uint32_t>(m.cols()),
                      nn_resample(m, s)};
}

PixelMatrix decompress(const LossyArchive& a) {
  return bilinear_resample(a.payload, ScaleSpec(a.original_rows, a.original_cols));
}

Bytes encode_archive(const LossyArchive& a) {
  Bytes out;
  out.reserve(kArchiveHeaderBytes + a.payload.pixel_count());
  ByteWriter w(out);
  w.u32(a.original_rows);
  w.u32(a.original_cols);
  w.u32(static_cast<std::uint32_t>(a.payload.rows()));
  w.u32(static_cast<std::uint32_t>(a.payload.cols()));
  w.bytes(a.payload.data());
  return out;
}

LossyArchive decode_archive(ByteView body) {
  ByteReader r(body, ErrorCode::TruncatedInput);
  const std::uint32_t orig_rows = r.u32();
  const std::uint32_t orig_cols = r.u32();
  const std::uint32_t rows = r.u32();
  const std::uint32_t cols = r.u32();
  if (orig_rows == 0 || orig_cols == 0 || rows == 0 || cols == 0)
    fail(ErrorCode::InvalidDimensions, "archive declares an empty dimension");
  const std::uint64_t pixels = std::uint64_t{rows} * cols;
  if (r.remaining() < pixels)
    fail(ErrorCode::TruncatedInput, "archive payload holds " + std::to_string(r.remaining()) + " of " +
                                        std::to_string(pixels) + " pixels");
  if (r.remaining() > pixels)
    fail(ErrorCode::PayloadLengthMismatch, std::to_string(r.remaining() - pixels) + " trailing bytes in archive");
  auto px = r.take(pixels);
  return LossyArchive{orig_rows, orig_cols, PixelMatrix(rows, cols, std::vector<std::uint8_t>(px.begin(), px.end()))};
}

}  // namespace livc::lossy
