#pragma once

#include <cstddef>
#include <cstdint>

#include "livc/bytes.hpp"
#include "livc/frame.hpp"
#include "livc/lz77.hpp"

namespace livc {

struct LosslessOptions {
  std::uint32_t lz77_window = lz77::kDefaultWindow;
  std::size_t bwt_block_size = std::size_t{64} * 1024;
};

// BwtPipeline payload: u32 LE block count, then per block
//   u32 LE block length | u32 LE primary index | u32 LE coded length | Huffman payload of MTF(BWT(block))
//
// Throws InvalidArgument for LossyNN, which goes through the lossy module.
CodecFrame compress_bytes(ByteView input, CodecId codec, const LosslessOptions& options = {});

// Inverse of compress_bytes for every lossless codec.
Bytes decompress_bytes(const CodecFrame& frame);

}  // namespace livc
