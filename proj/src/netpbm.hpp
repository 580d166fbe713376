#pragma once

// Shared netpbm header/sample reader used by the PGM and PPM decoders.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "livc/bytes.hpp"

namespace livc::detail {

struct NetpbmImage {
  char kind;  // '2', '3', '5' or '6'
  std::size_t width;
  std::size_t height;
  unsigned maxval;
  std::vector<std::uint8_t> samples;  // height * width * channels, row-major
};

// Accepts the magic numbers listed in `kinds` (e.g. "25"); anything else is
// UnsupportedFormat.
NetpbmImage read_netpbm(ByteView bytes, const char* kinds);

}  // namespace livc::detail
