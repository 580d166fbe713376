#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <optional>

#include "livc/bench.hpp"
#include "livc/dataset.hpp"
#include "livc/pipeline.hpp"

namespace fs = std::filesystem;

namespace livc::cli {

namespace {

// Failure tagged with the command stage it came from.
struct StageError {
  std::string stage;
  Error error;
};

template <typename F>
auto stage(const char* name, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const Error& e) {
    throw StageError{name, e};
  }
}

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument:
    case ErrorCode::UpscaleRequested:
    case ErrorCode::BadMagic:
    case ErrorCode::UnsupportedVersion:
    case ErrorCode::UnknownCodec:
    case ErrorCode::PayloadLengthMismatch:
    case ErrorCode::CorruptTable:
    case ErrorCode::TruncatedBitstream:
    case ErrorCode::BadOffset:
    case ErrorCode::TruncatedToken:
    case ErrorCode::BadIndex:
    case ErrorCode::EmptyBlock:
    case ErrorCode::IndexOutOfRange:
    case ErrorCode::MeasurementUnavailable:
    case ErrorCode::ZeroOutput:
    case ErrorCode::DegenerateSamples: return kCodec;
    case ErrorCode::RoundTripMismatch: return kRoundTrip;
    default: return kIoOrParse;
  }
}

CodecId codec_from_flag(const std::string& name) {
  auto id = parse_codec_name(name);
  if (!id) throw CLI::ValidationError("--codec", "unknown codec '" + name + "'");
  return *id;
}

std::string format_ratio(double ratio) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.1f", ratio);
  return buf;
}

fs::path tables_path(const fs::path& records) {
  auto p = records;
  p.replace_extension(".txt");
  if (p == records) p += ".report.txt";
  return p;
}

struct Flags {
  std::string codec = "bwt";
  std::vector<std::string> codecs;
  std::optional<std::size_t> scale_rows;
  std::optional<std::size_t> scale_cols;
  double factor = pipeline::kDefaultScaleFactor;
  std::uint32_t window = lz77::kDefaultWindow;
  std::size_t runs = 3;
  std::uint64_t seed = 42;
  double train_fraction = 0.7;
  bool raw_pixels = false;
  std::string out;
  std::string input;
  std::string second;
  std::string manifest;
};

pipeline::CompressOptions compress_options(const Flags& f) {
  pipeline::CompressOptions o;
  o.codec = codec_from_flag(f.codec);
  o.lossless.lz77_window = f.window;
  o.scale.rows = f.scale_rows;
  o.scale.cols = f.scale_cols;
  o.scale.factor = f.factor;
  o.raw_pixels = f.raw_pixels;
  return o;
}

void add_codec_flags(CLI::App* cmd, Flags& f) {
  cmd->add_option("--scale-rows", f.scale_rows, "lossy target rows")->check(CLI::PositiveNumber);
  cmd->add_option("--scale-cols", f.scale_cols, "lossy target columns")->check(CLI::PositiveNumber);
  cmd->add_option("--factor", f.factor, "lossy per-axis scale factor in (0,1]")
      ->check(CLI::Range(0.0, 1.0))
      ->check(CLI::Validator([](std::string& s) { return std::stod(s) > 0 ? "" : "factor must be > 0"; }, "", ""));
  cmd->add_option("--window", f.window, "LZ77 window")->check(CLI::Range(1u, 65535u));
  cmd->add_flag("--raw-pixels", f.raw_pixels, "lossless codecs see one byte per pixel instead of CSV");
}

int cmd_compress(const Flags& f, std::ostream& out) {
  const auto options = compress_options(f);
  const auto input = stage("read", [&] { return dataset::read_file(f.input); });
  const auto matrix = stage("parse", [&] { return dataset::ingest_bytes(input); });
  const auto frame = stage("encode", [&] { return pipeline::compress_image(matrix, options); });
  stage("write", [&] { dataset::write_file(f.out, frame); });
  out << "input_bytes=" << input.size() << " output_bytes=" << frame.size()
      << " ratio=" << format_ratio(bench::compression_ratio(input.size(), frame.size())) << ":1\n";
  return kOk;
}

int cmd_decompress(const Flags& f, std::ostream& out) {
  const auto input = stage("read", [&] { return dataset::read_file(f.input); });
  const auto csv = stage("decode", [&] { return pipeline::decompress_to_csv(input); });
  stage("write", [&] { dataset::write_file(f.out, to_bytes(csv)); });
  out << "input_bytes=" << input.size() << " output_bytes=" << csv.size() << '\n';
  return kOk;
}

bench::LabelMap labels_from(const std::vector<dataset::DatasetItem>& items) {
  bench::LabelMap labels;
  for (const auto& item : items) labels.emplace(item.image_id, item.label);
  return labels;
}

int cmd_bench(const Flags& f, std::ostream& out, const Hooks& hooks) {
  bench::CorpusOptions options;
  options.compress = compress_options(f);
  options.runs = f.runs;
  for (const auto& name : f.codecs) options.codecs.push_back(codec_from_flag(name));
  if (options.codecs.empty())
    options.codecs = {CodecId::Huffman, CodecId::Lz77, CodecId::Lz78, CodecId::BwtPipeline, CodecId::LossyNN};
  options.tamper_decoded = hooks.tamper_decoded;

  const auto records = stage("bench", [&] { return bench::run_corpus(f.input, options); });
  const auto labels = stage("bench", [&] { return labels_from(dataset::build_manifest(f.input)); });
  const auto tables = bench::render_report(records, labels);
  stage("write", [&] {
    dataset::write_file(f.out, to_bytes(bench::write_records_csv(records)));
    dataset::write_file(tables_path(f.out), to_bytes(tables));
  });
  out << tables;
  return kOk;
}

int cmd_report(const Flags& f, std::ostream& out) {
  const auto records = stage("read", [&] {
    return bench::parse_records_csv(to_string(dataset::read_file(f.input)));
  });
  bench::LabelMap labels;
  if (!f.manifest.empty())
    labels = stage("read", [&] { return labels_from(dataset::parse_manifest(to_string(dataset::read_file(f.manifest)))); });
  const auto tables = bench::render_report(records, labels);
  if (!f.out.empty()) stage("write", [&] { dataset::write_file(f.out, to_bytes(tables)); });
  out << tables;
  return kOk;
}

int cmd_ingest(const Flags& f, std::ostream& out) {
  const auto items = stage("ingest", [&] { return dataset::ingest_directory(f.input, f.second); });
  std::size_t healthy = 0, sick = 0;
  for (const auto& item : items) {
    healthy += item.label == ImageLabel::Healthy;
    sick += item.label == ImageLabel::Sick;
  }
  out << "images=" << items.size() << " healthy=" << healthy << " sick=" << sick
      << " unlabeled=" << items.size() - healthy - sick << '\n';
  return kOk;
}

int cmd_split(const Flags& f, std::ostream& out) {
  const auto items = stage("read", [&] { return dataset::parse_manifest(to_string(dataset::read_file(f.input))); });
  const auto split = stage("split", [&] { return dataset::apply_split(items, f.train_fraction, f.seed); });
  const auto text = dataset::write_manifest(split);
  if (f.out.empty()) {
    out << text;
  } else {
    stage("write", [&] { dataset::write_file(f.out, to_bytes(text)); });
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, const Hooks& hooks) {
  CLI::App app{"Compression toolkit for grayscale pixel-matrix images", "livc"};
  app.require_subcommand(1);
  Flags f;

  auto* compress = app.add_subcommand("compress", "frame one image with a codec");
  compress->add_option("input", f.input, "CSV, PGM or PPM image")->required();
  compress->add_option("--out", f.out, "archive path")->required();
  compress->add_option("--codec", f.codec, "store|huffman|lz77|lz78|bwt|lossy")->check([](const std::string& s) {
    return parse_codec_name(s) ? std::string() : "unknown codec '" + s + "'";
  });
  add_codec_flags(compress, f);

  auto* decompress = app.add_subcommand("decompress", "restore the CSV held by an archive");
  decompress->add_option("input", f.input, "archive")->required();
  decompress->add_option("--out", f.out, "CSV path")->required();

  auto* bench_cmd = app.add_subcommand("bench", "time, memory and ratio over a corpus");
  bench_cmd->add_option("corpus", f.input, "directory of images")->required();
  bench_cmd->add_option("--codec", f.codecs, "codecs to run (repeat or comma-separate)")
      ->delimiter(',')
      ->check([](const std::string& s) { return parse_codec_name(s) ? std::string() : "unknown codec '" + s + "'"; });
  bench_cmd->add_option("--runs", f.runs, "timed runs per measurement")->check(CLI::PositiveNumber);
  bench_cmd->add_option("--out", f.out, "records CSV; tables go next to it as .txt")->required();
  add_codec_flags(bench_cmd, f);

  auto* report = app.add_subcommand("report", "rebuild the tables from a records CSV");
  report->add_option("records", f.input, "records CSV")->required();
  report->add_option("--manifest", f.manifest, "manifest giving image labels");
  report->add_option("--out", f.out, "write the tables here as well");

  auto* ingest = app.add_subcommand("ingest", "convert images to canonical CSV and write a manifest");
  ingest->add_option("src", f.input, "source directory")->required();
  ingest->add_option("dst", f.second, "destination directory")->required();

  auto* split = app.add_subcommand("split", "assign train/test splits to a manifest");
  split->add_option("manifest", f.input, "manifest CSV")->required();
  split->add_option("--train-fraction", f.train_fraction, "fraction in (0,1)")
      ->check(CLI::Validator([](std::string& s) {
        const double v = std::stod(s);
        return v > 0 && v < 1 ? std::string() : "train fraction must be in (0,1)";
      }, "", ""));
  split->add_option("--seed", f.seed, "shuffle seed");
  split->add_option("--out", f.out, "output manifest (stdout when omitted)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    std::string msg = e.what();
    std::replace(msg.begin(), msg.end(), '\n', ' ');
    err << "error: usage: " << msg << '\n';
    return kUsage;
  }

  try {
    if (*compress) return cmd_compress(f, out);
    if (*decompress) return cmd_decompress(f, out);
    if (*bench_cmd) return cmd_bench(f, out, hooks);
    if (*report) return cmd_report(f, out);
    if (*ingest) return cmd_ingest(f, out);
    if (*split) return cmd_split(f, out);
  } catch (const StageError& e) {
    std::string msg = e.error.what();
    std::replace(msg.begin(), msg.end(), '\n', ' ');
    err << "error: " << e.stage << ": " << msg << '\n';
    return e.stage == "write" || e.stage == "read" ? kIoOrParse : exit_code_for(e.error.code());
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kIoOrParse;
  }
  return kUsage;
}

}  // namespace livc::cli
