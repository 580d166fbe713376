#pragma once

#include <cstddef>
#include <cstdint>

#include "livc/bytes.hpp"
#include "livc/pixel_matrix.hpp"

namespace livc::lossy {

/// Output dimensions of a resample. Both axes are at least 1.
struct ScaleSpec {
  std::size_t target_rows;
  std::size_t target_cols;

  ScaleSpec(std::size_t rows, std::size_t cols);
};

/// Per-axis reduction: each target dimension is round(factor * dim), at least 1.
/// factor must lie in (0, 1].
ScaleSpec scale_by_factor(const PixelMatrix& m, double factor);

/// Unit of lossy compression: the downsampled image plus the size to rebuild.
struct LossyArchive {
  std::uint32_t original_rows;
  std::uint32_t original_cols;
  PixelMatrix payload;

  friend bool operator==(const LossyArchive&, const LossyArchive&) = default;
};

/// Origin-aligned nearest neighbour: out(r, c) = m(floor(r * rows / target_rows),
/// floor(c * cols / target_cols)). Enlarges or reduces.
PixelMatrix nn_resample(const PixelMatrix& m, const ScaleSpec& s);

/// Corner-aligned bilinear interpolation. Output index i maps to source
/// coordinate i * (src - 1) / (target - 1) (0 when target == 1); the four
/// neighbouring pixels are blended with exact rational weights and rounded
/// half-up. Axes are limited to 2^23 samples.
PixelMatrix bilinear_resample(const PixelMatrix& m, const ScaleSpec& s);

/// Downsample with nearest neighbour. Throws UpscaleRequested if either target
/// dimension exceeds the source.
LossyArchive compress(const PixelMatrix& m, const ScaleSpec& s);

/// Bilinear reconstruction at the archived original size.
PixelMatrix decompress(const LossyArchive& a);

// Archive body as stored in a LossyNN frame: u32 LE original rows, original
// cols, payload rows, payload cols, then payload pixels row-major.
inline constexpr std::size_t kArchiveHeaderBytes = 16;
Bytes encode_archive(const LossyArchive& a);
LossyArchive decode_archive(ByteView body);

}  // namespace livc::lossy
