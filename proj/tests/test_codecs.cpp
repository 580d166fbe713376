#include <doctest.h>

#include <random>

#include "livc/codecs.hpp"
#include "livc/pipeline.hpp"
#include "support.hpp"

using namespace livc;

namespace {

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected livc::Error");
  return ErrorCode::IoError;
}

constexpr CodecId kLossless[] = {CodecId::Store, CodecId::Huffman, CodecId::Lz77, CodecId::Lz78,
                                 CodecId::BwtPipeline};

Bytes round_trip(ByteView input, CodecId codec, const LosslessOptions& o = {}) {
  return decompress_bytes(decode_frame(encode_frame(compress_bytes(input, codec, o))));
}

}  // namespace

TEST_CASE("every lossless codec round trips") {
  std::mt19937_64 rng(41);
  std::vector<Bytes> inputs{Bytes{}, Bytes{'x'}, Bytes(10240, 7), testing::random_bytes(rng, 10240)};
  inputs.push_back(to_bytes(write_csv(testing::gradient_image(3, 64, 64))));
  for (auto codec : kLossless) {
    CAPTURE(codec_name(codec));
    for (const auto& input : inputs) REQUIRE(round_trip(input, codec) == input);
  }
}

TEST_CASE("bwt pipeline with small blocks") {
  std::mt19937_64 rng(42);
  const auto input = testing::random_bytes(rng, 5000, 5);
  for (std::size_t block : {1, 7, 4096, 5000, 8192}) {
    LosslessOptions o;
    o.bwt_block_size = block;
    REQUIRE(round_trip(input, CodecId::BwtPipeline, o) == input);
  }
  LosslessOptions zero;
  zero.bwt_block_size = 0;
  CHECK(code_of([&] { compress_bytes(input, CodecId::BwtPipeline, zero); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("store frames the bytes verbatim") {
  const auto frame = compress_bytes(to_bytes("1,2\n"), CodecId::Store);
  CHECK(frame.payload == to_bytes("1,2\n"));
}

TEST_CASE("entropy coders shrink CSV text") {
  const auto csv = to_bytes(write_csv(testing::gradient_image(9, 100, 100)));
  const auto store = encode_frame(compress_bytes(csv, CodecId::Store)).size();
  CHECK(encode_frame(compress_bytes(csv, CodecId::Huffman)).size() < store);
  CHECK(encode_frame(compress_bytes(csv, CodecId::BwtPipeline)).size() < store);
  CHECK(encode_frame(compress_bytes(csv, CodecId::Lz78)).size() < store);
}

TEST_CASE("lossy frames are not byte codecs") {
  CHECK(code_of([] { compress_bytes(Bytes{1}, CodecId::LossyNN); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("corrupt frames") {
  auto bytes = encode_frame(compress_bytes(to_bytes("hello"), CodecId::Huffman));
  bytes[0] = 'X';
  CHECK(code_of([&] { decode_frame(bytes); }) == ErrorCode::BadMagic);
  bytes[0] = 'L';
  bytes[5] = 9;
  CHECK(code_of([&] { decode_frame(bytes); }) == ErrorCode::UnknownCodec);
}

TEST_CASE("pipeline sources") {
  const PixelMatrix m(2, 2, {0, 255, 16, 8});
  CHECK(to_string(pipeline::lossless_source(m, false)) == "0,255\n16,8");
  CHECK(pipeline::lossless_source(m, true) == write_pgm(m));
  for (bool raw : {false, true})
    for (auto codec : kLossless) {
      pipeline::CompressOptions o;
      o.codec = codec;
      o.raw_pixels = raw;
      REQUIRE(pipeline::decompress_to_csv(pipeline::compress_image(m, o)) == "0,255\n16,8");
    }
}

TEST_CASE("pipeline lossy reconstructs at original size") {
  const auto m = testing::gradient_image(5, 60, 40);
  pipeline::CompressOptions o;
  o.codec = CodecId::LossyNN;
  const auto archive = pipeline::compress_image(m, o);
  CHECK(archive.size() == kFrameHeaderBytes + lossy::kArchiveHeaderBytes + 40 * 26);
  const auto back = parse_csv(pipeline::decompress_to_csv(archive));
  CHECK(back.rows() == 60);
  CHECK(back.cols() == 40);

  o.scale.rows = 61;
  CHECK(code_of([&] { pipeline::compress_image(m, o); }) == ErrorCode::UpscaleRequested);
}

TEST_CASE("scale request resolution") {
  const PixelMatrix m = PixelMatrix::filled(100, 50, 1);
  pipeline::ScaleRequest r;
  CHECK(r.resolve(m).target_rows == 66);
  CHECK(r.resolve(m).target_cols == 33);
  r.rows = 10;
  CHECK(r.resolve(m).target_rows == 10);
  CHECK(r.resolve(m).target_cols == 33);
  r.factor = 0.001;
  CHECK(r.resolve(m).target_cols == 1);
}
