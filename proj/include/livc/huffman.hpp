#pragma once

#include <array>
#include <cstdint>

#include "livc/bytes.hpp"
#include "livc/frame.hpp"

namespace livc::huffman {

/// Code length per byte value (0 = symbol absent). Codes are canonical:
/// assigned in (length, symbol) order, so the lengths alone define the code.
struct HuffmanTable {
  std::array<std::uint8_t, 256> code_lengths{};

  friend bool operator==(const HuffmanTable&, const HuffmanTable&) = default;
};

using Frequencies = std::array<std::uint64_t, 256>;

Frequencies count_bytes(ByteView input);

/// Optimal prefix-code lengths for `freq`. A lone symbol gets length 1.
HuffmanTable build_table(const Frequencies& freq);

/// Bits in the packed body when `freq` is coded with `table`.
std::uint64_t body_bits(const HuffmanTable& table, const Frequencies& freq);

// Payload: 256 length bytes | u32 LE original length | MSB-first canonical
// bitstream, last byte zero-padded.
Bytes encode_payload(ByteView input);
Bytes decode_payload(ByteView payload);

CodecFrame huffman_encode(ByteView input);
Bytes huffman_decode(const CodecFrame& frame);

}  // namespace livc::huffman
