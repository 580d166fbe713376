#pragma once

#include <cstdint>
#include <vector>

#include "livc/bytes.hpp"
#include "livc/frame.hpp"

namespace livc::lz77 {

inline constexpr std::uint32_t kDefaultWindow = 4096;
inline constexpr std::uint32_t kMaxWindow = 65535;
inline constexpr std::uint32_t kMinMatch = 3;
inline constexpr std::uint32_t kMaxMatch = 255;

// (offset, length, next): copy `length` bytes from `offset` back, then emit
// `next`. A literal is (0, 0, byte).
struct Lz77Token {
  std::uint16_t offset;
  std::uint8_t length;
  std::uint8_t next;

  friend bool operator==(const Lz77Token&, const Lz77Token&) = default;
};

/// Greedy longest-match parse. A match is taken when at least kMinMatch bytes
/// repeat within the window (overlapping the cursor is allowed). Every token
/// carries a `next` byte: a match that would run to the very end of the input
/// gives up its last byte to `next`.
std::vector<Lz77Token> parse(ByteView input, std::uint32_t window = kDefaultWindow);

// Payload is the token stream, 4 bytes per token: u16 LE offset, u8 length, u8 next.
CodecFrame lz77_encode(ByteView input, std::uint32_t window = kDefaultWindow);
Bytes lz77_decode(const CodecFrame& frame);
Bytes decode_payload(ByteView payload);

}  // namespace livc::lz77
