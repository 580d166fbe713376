#include <doctest.h>

#include <sstream>

#include "../tools/cli.hpp"
#include "livc/dataset.hpp"
#include "support.hpp"

using namespace livc;
namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args, const cli::Hooks& hooks = {}) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err, hooks);
  return {code, out.str(), err.str()};
}

void check_single_error_line(const Result& r) {
  CHECK(r.code != 0);
  CHECK(r.err.rfind("error:", 0) == 0);
  CHECK(std::count(r.err.begin(), r.err.end(), '\n') == 1);
}

std::string p(const fs::path& path) { return path.string(); }

}  // namespace

TEST_CASE("compress and decompress") {
  testing::TempDir tmp;
  const auto csv = write_csv(testing::gradient_image(1, 40, 30));
  testing::write_text(tmp.path() / "in.csv", csv);

  auto r = run({"compress", p(tmp.path() / "in.csv"), "--codec", "store", "--out", p(tmp.path() / "s.livc")});
  REQUIRE(r.code == 0);
  CHECK(fs::file_size(tmp.path() / "s.livc") == csv.size() + 10);
  CHECK(r.out == "input_bytes=" + std::to_string(csv.size()) + " output_bytes=" + std::to_string(csv.size() + 10) +
                     " ratio=1.0:1\n");

  for (const char* codec : {"huffman", "lz77", "lz78", "bwt", "store"}) {
    CAPTURE(codec);
    const auto archive = p(tmp.path() / (std::string(codec) + ".livc"));
    REQUIRE(run({"compress", p(tmp.path() / "in.csv"), "--codec", codec, "--out", archive}).code == 0);
    REQUIRE(run({"decompress", archive, "--out", p(tmp.path() / "back.csv")}).code == 0);
    CHECK(testing::read_text(tmp.path() / "back.csv") == csv);
    REQUIRE(run({"compress", p(tmp.path() / "in.csv"), "--codec", codec, "--raw-pixels", "--out", archive}).code == 0);
    REQUIRE(run({"decompress", archive, "--out", p(tmp.path() / "back.csv")}).code == 0);
    CHECK(testing::read_text(tmp.path() / "back.csv") == csv);
  }
  CHECK(testing::read_text(tmp.path() / "in.csv") == csv);

  r = run({"compress", p(tmp.path() / "in.csv"), "--codec", "lossy", "--out", p(tmp.path() / "l.livc")});
  REQUIRE(r.code == 0);
  REQUIRE(run({"decompress", p(tmp.path() / "l.livc"), "--out", p(tmp.path() / "l.csv")}).code == 0);
  const auto back = parse_csv(testing::read_text(tmp.path() / "l.csv"));
  CHECK(back.rows() == 40);
  CHECK(back.cols() == 30);
}

TEST_CASE("ratio line matches compression_ratio") {
  testing::TempDir tmp;
  testing::write_text(tmp.path() / "in.csv", write_csv(PixelMatrix::filled(50, 50, 7)));
  const auto r = run({"compress", p(tmp.path() / "in.csv"), "--codec", "huffman", "--out", p(tmp.path() / "h.livc")});
  REQUIRE(r.code == 0);
  const double ratio = static_cast<double>(fs::file_size(tmp.path() / "in.csv")) / fs::file_size(tmp.path() / "h.livc");
  char buf[32];
  std::snprintf(buf, sizeof buf, "ratio=%.1f:1\n", ratio);
  CHECK(r.out.find(buf) != std::string::npos);
}

TEST_CASE("failures print one diagnostic line") {
  testing::TempDir tmp;
  testing::write_text(tmp.path() / "in.csv", write_csv(PixelMatrix::filled(4, 4, 1)));

  auto r = run({"compress", p(tmp.path() / "in.csv"), "--codec", "lossy", "--scale-rows", "9", "--out",
                p(tmp.path() / "x.livc")});
  check_single_error_line(r);
  CHECK(r.code == cli::kCodec);
  CHECK(r.err.find("UpscaleRequested") != std::string::npos);
  CHECK_FALSE(fs::exists(tmp.path() / "x.livc"));

  r = run({"compress", p(tmp.path() / "in.csv"), "--codec", "zip", "--out", p(tmp.path() / "x.livc")});
  check_single_error_line(r);
  CHECK(r.code == cli::kUsage);

  r = run({"compress", p(tmp.path() / "missing.csv"), "--out", p(tmp.path() / "x.livc")});
  check_single_error_line(r);
  CHECK(r.code == cli::kIoOrParse);

  testing::write_text(tmp.path() / "ragged.csv", "1,2\n3\n");
  r = run({"compress", p(tmp.path() / "ragged.csv"), "--out", p(tmp.path() / "x.livc")});
  check_single_error_line(r);
  CHECK(r.code == cli::kIoOrParse);
  CHECK(r.err.find("parse") != std::string::npos);

  check_single_error_line(run({}));
  check_single_error_line(run({"frobnicate"}));
  check_single_error_line(run({"split", p(tmp.path() / "m.csv"), "--train-fraction", "1.5"}));
}

TEST_CASE("decompress errors") {
  testing::TempDir tmp;
  testing::write_text(tmp.path() / "in.csv", write_csv(testing::gradient_image(2, 20, 20)));
  for (auto [codec, name] : {std::pair{"lz77", "TruncatedToken"}, {"lz78", "TruncatedToken"},
                             {"huffman", "TruncatedBitstream"}, {"bwt", "TruncatedBitstream"}}) {
    CAPTURE(codec);
    const auto archive = tmp.path() / "a.livc";
    REQUIRE(run({"compress", p(tmp.path() / "in.csv"), "--codec", codec, "--out", p(archive)}).code == 0);
    fs::resize_file(archive, fs::file_size(archive) - 3);
    const auto r = run({"decompress", p(archive), "--out", p(tmp.path() / "o.csv")});
    check_single_error_line(r);
    CHECK(r.code == cli::kCodec);
    CHECK(r.err.find(name) != std::string::npos);
  }

  testing::write_text(tmp.path() / "junk.livc", "JUNKJUNKJUNK");
  auto r = run({"decompress", p(tmp.path() / "junk.livc"), "--out", p(tmp.path() / "o.csv")});
  check_single_error_line(r);
  CHECK(r.err.find("BadMagic") != std::string::npos);

  testing::write_text(tmp.path() / "codec9.livc", std::string("LIVC\x01\x09\0\0\0\0", 10));
  r = run({"decompress", p(tmp.path() / "codec9.livc"), "--out", p(tmp.path() / "o.csv")});
  check_single_error_line(r);
  CHECK(r.err.find("UnknownCodec") != std::string::npos);
}

TEST_CASE("bench and report") {
  testing::TempDir corpus, out;
  for (int i = 0; i < 5; ++i)
    testing::write_text(corpus.path() / ("i" + std::to_string(i) + ".csv"), write_csv(testing::gradient_image(i, 16, 16)));

  auto r = run({"bench", p(corpus.path()), "--codec", "huffman,bwt", "--runs", "1", "--out", p(out.path() / "b.csv")});
  REQUIRE(r.code == 0);
  const auto records = testing::read_text(out.path() / "b.csv");
  CHECK(std::count(records.begin(), records.end(), '\n') == 1 + 5 * 2 * 2);
  const auto tables = testing::read_text(out.path() / "b.txt");
  CHECK(tables.find("Compression ratio") != std::string::npos);

  const auto a = run({"report", p(out.path() / "b.csv")});
  const auto b = run({"report", p(out.path() / "b.csv")});
  REQUIRE(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out == tables);

  cli::Hooks hooks;
  hooks.tamper_decoded = [](std::string& s) { s[0] ^= 1; };
  r = run({"bench", p(corpus.path()), "--codec", "lz77", "--runs", "1", "--out", p(out.path() / "t.csv")}, hooks);
  check_single_error_line(r);
  CHECK(r.code == cli::kRoundTrip);
  CHECK(r.err.find("i0") != std::string::npos);

  testing::TempDir empty;
  r = run({"bench", p(empty.path()), "--out", p(out.path() / "e.csv")});
  check_single_error_line(r);
  CHECK(r.err.find("EmptyCorpus") != std::string::npos);
}

TEST_CASE("ingest and split") {
  testing::TempDir src, dst;
  fs::create_directories(src.path() / "healthy");
  fs::create_directories(src.path() / "sick");
  for (int i = 0; i < 10; ++i)
    testing::write_text(src.path() / (i < 5 ? "healthy" : "sick") / ("c" + std::to_string(i) + ".ppm"),
                        "P3\n1 2\n255\n" + std::to_string(i) + " 0 0 255 255 255\n");
  auto r = run({"ingest", p(src.path()), p(dst.path() / "csv")});
  REQUIRE(r.code == 0);
  CHECK(r.out == "images=10 healthy=5 sick=5 unlabeled=0\n");
  CHECK(parse_csv(testing::read_text(dst.path() / "csv" / "healthy" / "c0.csv")) == PixelMatrix(2, 1, {0, 255}));

  const auto manifest = p(dst.path() / "csv" / "manifest.csv");
  const auto original = testing::read_text(manifest);
  r = run({"split", manifest, "--train-fraction", "0.7", "--seed", "42", "--out", p(dst.path() / "s1.csv")});
  REQUIRE(r.code == 0);
  REQUIRE(run({"split", manifest, "--out", p(dst.path() / "s2.csv")}).code == 0);
  const auto s1 = testing::read_text(dst.path() / "s1.csv");
  CHECK(s1 == testing::read_text(dst.path() / "s2.csv"));
  CHECK(testing::read_text(manifest) == original);
  std::size_t train = 0, pos = 0;
  while ((pos = s1.find(",train\n", pos)) != std::string::npos) ++train, ++pos;
  CHECK(train == 7);

  r = run({"split", manifest});
  CHECK(r.code == 0);
  CHECK(r.out == s1);
}
