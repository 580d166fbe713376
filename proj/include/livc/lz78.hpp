#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "livc/bytes.hpp"
#include "livc/frame.hpp"

namespace livc::lz78 {

// Dictionary reference plus extending byte. Index 0 is the empty phrase;
// entries are numbered from 1 in creation order. Only the final token may
// lack a symbol, when the input ends on an existing phrase.
struct Lz78Token {
  std::uint32_t index;
  std::optional<std::uint8_t> symbol;

  friend bool operator==(const Lz78Token&, const Lz78Token&) = default;
};

std::vector<Lz78Token> parse(ByteView input);

/// Phrases in the order the encoder creates them (entry 1 first).
std::vector<Bytes> dictionary(ByteView input);

// Payload: u32 LE count of complete tokens | count x (u32 LE index, u8 symbol)
//        | u8 tail flag | u32 LE index when the flag is 1.
CodecFrame lz78_encode(ByteView input);
Bytes lz78_decode(const CodecFrame& frame);
Bytes decode_payload(ByteView payload);

}  // namespace livc::lz78
