#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "livc/bytes.hpp"

namespace livc {

enum class ImageLabel { Healthy, Sick, Unlabeled };

std::string_view label_name(ImageLabel label) noexcept;  // "healthy" / "sick" / "unlabeled"
ImageLabel parse_label(std::string_view name);

/// Rectangular grid of 8-bit grayscale intensities, stored row-major.
///
/// Immutable once built; construction rejects empty shapes and data whose
/// length is not rows x cols.
class PixelMatrix {
 public:
  PixelMatrix(std::size_t rows, std::size_t cols, std::vector<std::uint8_t> data);

  /// rows x cols matrix filled with `value`.
  static PixelMatrix filled(std::size_t rows, std::size_t cols, std::uint8_t value);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::size_t pixel_count() const noexcept { return data_.size(); }

  std::uint8_t at(std::size_t r, std::size_t c) const noexcept { return data_[r * cols_ + c]; }
  std::span<const std::uint8_t> row(std::size_t r) const noexcept {
    return std::span<const std::uint8_t>(data_).subspan(r * cols_, cols_);
  }
  std::span<const std::uint8_t> data() const noexcept { return data_; }

  friend bool operator==(const PixelMatrix&, const PixelMatrix&) = default;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<std::uint8_t> data_;
};

// CSV: one row per line, comma-separated base-10 values. The parser also
// accepts bracketed rows ("[1,2,3]"), CRLF, blanks around values and a
// trailing empty line; the writer always emits the bare canonical form.
PixelMatrix parse_csv(std::string_view text);
std::string write_csv(const PixelMatrix& m);

// Netpbm graymap, P2 (ASCII) or P5 (binary), maxval <= 255. Writer emits P5/255.
PixelMatrix parse_pgm(ByteView bytes);
Bytes write_pgm(const PixelMatrix& m);

}  // namespace livc
