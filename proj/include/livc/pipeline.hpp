#pragma once

// File-level entry points shared by the CLI and the bench harness: an image
// goes in, a framed archive comes out, and back.

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

#include "livc/codecs.hpp"
#include "livc/frame.hpp"
#include "livc/lossy.hpp"
#include "livc/pixel_matrix.hpp"

namespace livc::pipeline {

// Keeps about 1/2.3 of the pixels (0.66^2 = 0.4356).
inline constexpr double kDefaultScaleFactor = 0.66;

struct ScaleRequest {
  std::optional<std::size_t> rows;
  std::optional<std::size_t> cols;
  double factor = kDefaultScaleFactor;

  // Explicit axes win; a missing axis is scaled by `factor`.
  lossy::ScaleSpec resolve(const PixelMatrix& m) const;
};

struct CompressOptions {
  CodecId codec = CodecId::BwtPipeline;
  LosslessOptions lossless;
  ScaleRequest scale;
  // Lossless codecs frame a P5 graymap (one byte per pixel) instead of CSV text.
  bool raw_pixels = false;
};

/// Framed archive bytes for `m`. Lossless codecs encode the canonical CSV (or
/// P5 bytes with raw_pixels); LossyNN encodes the downsampled archive.
Bytes compress_image(const PixelMatrix& m, const CompressOptions& options);

/// The bytes a lossless codec is fed for `m`.
Bytes lossless_source(const PixelMatrix& m, bool raw_pixels);

/// Canonical CSV text of the image held by a framed archive. LossyNN archives
/// are reconstructed at their original size.
std::string decompress_to_csv(ByteView frame_bytes);

}  // namespace livc::pipeline
