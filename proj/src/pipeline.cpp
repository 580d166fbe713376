#include "livc/pipeline.hpp"

#include <algorithm>

namespace livc::pipeline {

lossy::ScaleSpec ScaleRequest::resolve(const PixelMatrix& m) const {
  const auto by_factor = lossy::scale_by_factor(m, factor);
  return lossy::ScaleSpec(rows.value_or(by_factor.target_rows), cols.value_or(by_factor.target_cols));
}

Bytes lossless_source(const PixelMatrix& m, bool raw_pixels) {
  return raw_pixels ? write_pgm(m) : to_bytes(write_csv(m));
}

Bytes compress_image(const PixelMatrix& m, const CompressOptions& options) {
  if (options.codec == CodecId::LossyNN) {
    const auto archive = lossy::compress(m, options.scale.resolve(m));
    return encode_frame(CodecFrame{CodecId::LossyNN, lossy::encode_archive(archive)});
  }
  return encode_frame(compress_bytes(lossless_source(m, options.raw_pixels), options.codec, options.lossless));
}

std::string decompress_to_csv(ByteView frame_bytes) {
  const auto frame = decode_frame(frame_bytes);
  if (frame.codec == CodecId::LossyNN) return write_csv(lossy::decompress(lossy::decode_archive(frame.payload)));
  auto bytes = decompress_bytes(frame);
  // CSV text never starts with 'P', so a P5 header marks a raw-pixel payload.
  if (bytes.size() >= 2 && bytes[0] == 'P' && bytes[1] == '5') return write_csv(parse_pgm(bytes));
  return to_string(bytes);
}

}  // namespace livc::pipeline
