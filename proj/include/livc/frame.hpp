#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

#include "livc/bytes.hpp"

namespace livc {

// Stable one-byte codec identifiers.
enum class CodecId : std::uint8_t {
  Store = 0,
  Huffman = 1,
  Lz77 = 2,
  Lz78 = 3,
  BwtPipeline = 4,
  LossyNN = 5,
};

std::string_view codec_name(CodecId id) noexcept;  // "store", "huffman", "lz77", "lz78", "bwt", "lossy"
std::optional<CodecId> parse_codec_name(std::string_view name) noexcept;
bool is_lossless(CodecId id) noexcept;

// Self-describing container:
//   "LIVC" | version 0x01 | codec id | payload_length u32 LE | payload
struct CodecFrame {
  CodecId codec;
  Bytes payload;

  friend bool operator==(const CodecFrame&, const CodecFrame&) = default;
};

inline constexpr std::uint8_t kFrameMagic[4] = {'L', 'I', 'V', 'C'};
inline constexpr std::uint8_t kFrameVersion = 1;
inline constexpr std::size_t kFrameHeaderBytes = 10;

Bytes encode_frame(const CodecFrame& frame);

// Throws BadMagic, UnsupportedVersion, UnknownCodec, TruncatedInput (short
// header), PayloadLengthMismatch (bytes after the payload). A payload shorter
// than declared raises the owning codec's truncation error (TruncatedToken for
// LZ77/LZ78, TruncatedBitstream for Huffman/BWT, TruncatedInput otherwise).
CodecFrame decode_frame(ByteView bytes);

}  // namespace livc
