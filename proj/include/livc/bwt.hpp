#pragma once

#include <cstddef>
#include <cstdint>

#include "livc/bytes.hpp"

namespace livc::bwt {

inline constexpr std::size_t kMaxBlock = std::size_t{1} << 20;

// Last column of the sorted rotation matrix plus the row holding the
// untouched input.
struct BwtBlock {
  Bytes transformed;
  std::uint32_t primary_index;

  friend bool operator==(const BwtBlock&, const BwtBlock&) = default;
};

// Rotations are ranked by prefix doubling with counting sorts, so no sentinel
// byte is reserved and every byte value is legal.
BwtBlock bwt_forward(ByteView block, std::size_t max_block = kMaxBlock);
Bytes bwt_inverse(const BwtBlock& b);

// Move-to-front over the byte alphabet, list initialised to 0..255.
Bytes mtf_encode(ByteView input);
Bytes mtf_decode(ByteView input);

}  // namespace livc::bwt
