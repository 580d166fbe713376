#include "livc/codecs.hpp"

#include "livc/bwt.hpp"
#include "livc/huffman.hpp"
#include "livc/lz78.hpp"

namespace livc {

namespace {

Bytes bwt_pipeline_encode(ByteView input, std::size_t block_size) {
  if (block_size == 0 || block_size > bwt::kMaxBlock)
    fail(ErrorCode::InvalidArgument, "BWT block size " + std::to_string(block_size) + " not in [1, 1 MiB]");
  Bytes out;
  ByteWriter w(out);
  const std::size_t blocks = (input.size() + block_size - 1) / block_size;
  w.u32(static_cast<std::uint32_t>(blocks));
  for (std::size_t start = 0; start < input.size(); start += block_size) {
    auto block = input.subspan(start, std::min(block_size, input.size() - start));
    auto transformed = bwt::bwt_forward(block, block_size);
    auto coded = huffman::encode_payload(bwt::mtf_encode(transformed.transformed));
    w.u32(static_cast<std::uint32_t>(block.size()));
    w.u32(transformed.primary_index);
    w.u32(static_cast<std::uint32_t>(coded.size()));
    w.bytes(coded);
  }
  return out;
}

Bytes bwt_pipeline_decode(ByteView payload) {
  ByteReader r(payload, ErrorCode::TruncatedBitstream);
  const std::uint32_t blocks = r.u32();
  Bytes out;
  for (std::uint32_t b = 0; b < blocks; ++b) {
    const std::uint32_t length = r.u32();
    const std::uint32_t primary = r.u32();
    const std::uint32_t coded_length = r.u32();
    auto mtf = huffman::decode_payload(r.take(coded_length));
    if (mtf.size() != length)
      fail(ErrorCode::PayloadLengthMismatch, "block " + std::to_string(b) + " decodes to " +
                                                 std::to_string(mtf.size()) + " bytes, header says " +
                                                 std::to_string(length));
    auto block = bwt::bwt_inverse(bwt::BwtBlock{bwt::mtf_decode(mtf), primary});
    out.insert(out.end(), block.begin(), block.end());
  }
  if (!r.at_end()) fail(ErrorCode::PayloadLengthMismatch, std::to_string(r.remaining()) + " trailing bytes");
  return out;
}

}  // namespace

CodecFrame compress_bytes(ByteView input, CodecId codec, const LosslessOptions& options) {
  switch (codec) {
    case CodecId::Store: return CodecFrame{codec, Bytes(input.begin(), input.end())};
    case CodecId::Huffman: return huffman::huffman_encode(input);
    case CodecId::Lz77: return lz77::lz77_encode(input, options.lz77_window);
    case CodecId::Lz78: return lz78::lz78_encode(input);
    case CodecId::BwtPipeline: return CodecFrame{codec, bwt_pipeline_encode(input, options.bwt_block_size)};
    case CodecId::LossyNN: break;
  }
  fail(ErrorCode::InvalidArgument, "codec '" + std::string(codec_name(codec)) + "' is not a byte codec");
}

Bytes decompress_bytes(const CodecFrame& frame) {
  switch (frame.codec) {
    case CodecId::Store: return frame.payload;
    case CodecId::Huffman: return huffman::huffman_decode(frame);
    case CodecId::Lz77: return lz77::lz77_decode(frame);
    case CodecId::Lz78: return lz78::lz78_decode(frame);
    case CodecId::BwtPipeline: return bwt_pipeline_decode(frame.payload);
    case CodecId::LossyNN: break;
  }
  fail(ErrorCode::InvalidArgument, "codec '" + std::string(codec_name(frame.codec)) + "' is not a byte codec");
}

}  // namespace livc
