#include "livc/frame.hpp"

#include <algorithm>

namespace livc {

std::string_view codec_name(CodecId id) noexcept {
  switch (id) {
    case CodecId::Store: return "store";
    case CodecId::Huffman: return "huffman";
    case CodecId::Lz77: return "lz77";
    case CodecId::Lz78: return "lz78";
    case CodecId::BwtPipeline: return "bwt";
    case CodecId::LossyNN: return "lossy";
  }
  return "unknown";
}

std::optional<CodecId> parse_codec_name(std::string_view name) noexcept {
  if (name == "store") return CodecId::Store;
  if (name == "huffman") return CodecId::Huffman;
  if (name == "lz77") return CodecId::Lz77;
  if (name == "lz78") return CodecId::Lz78;
  if (name == "bwt" || name == "bwt-pipeline") return CodecId::BwtPipeline;
  if (name == "lossy" || name == "lossy-nn") return CodecId::LossyNN;
  return std::nullopt;
}

bool is_lossless(CodecId id) noexcept { return id != CodecId::LossyNN; }

namespace {

// A short payload is reported in the vocabulary of the codec that owns it.
ErrorCode truncation_code(CodecId id) {
  switch (id) {
    case CodecId::Lz77:
    case CodecId::Lz78: return ErrorCode::TruncatedToken;
    case CodecId::Huffman:
    case CodecId::BwtPipeline: return ErrorCode::TruncatedBitstream;
    default: return ErrorCode::TruncatedInput;
  }
}

}  // namespace

Bytes encode_frame(const CodecFrame& frame) {
  if (frame.payload.size() > 0xFFFFFFFFu)
    fail(ErrorCode::InvalidArgument, "payload exceeds the 4 GiB frame limit");
  Bytes out;
  out.reserve(kFrameHeaderBytes + frame.payload.size());
  ByteWriter w(out);
  w.bytes(kFrameMagic);
  w.u8(kFrameVersion);
  w.u8(static_cast<std::uint8_t>(frame.codec));
  w.u32(static_cast<std::uint32_t>(frame.payload.size()));
  w.bytes(frame.payload);
  return out;
}

CodecFrame decode_frame(ByteView bytes) {
  ByteReader r(bytes, ErrorCode::TruncatedInput);
  auto magic = r.take(4);
  if (!std::equal(magic.begin(), magic.end(), std::begin(kFrameMagic))) fail(ErrorCode::BadMagic, "not a LIVC frame");
  const auto version = r.u8();
  if (version != kFrameVersion) fail(ErrorCode::UnsupportedVersion, "frame version " + std::to_string(version));
  const auto codec = r.u8();
  if (codec > static_cast<std::uint8_t>(CodecId::LossyNN))
    fail(ErrorCode::UnknownCodec, "codec id " + std::to_string(codec));
  const auto length = r.u32();
  if (r.remaining() < length)
    fail(truncation_code(static_cast<CodecId>(codec)), "frame declares " + std::to_string(length) + " payload bytes, " +
                                        std::to_string(r.remaining()) + " present");
  if (r.remaining() > length)
    fail(ErrorCode::PayloadLengthMismatch, std::to_string(r.remaining() - length) + " bytes after payload");
  auto payload = r.take(length);
  return CodecFrame{static_cast<CodecId>(codec), Bytes(payload.begin(), payload.end())};
}

}  // namespace livc
