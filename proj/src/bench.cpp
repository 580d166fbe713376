#include "livc/bench.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <tuple>

#include "livc/codecs.hpp"
#include "livc/dataset.hpp"

namespace fs = std::filesystem;

namespace livc::bench {

std::string_view direction_name(Direction d) noexcept { return d == Direction::Compress ? "compress" : "decompress"; }

double time_operation(const std::function<void()>& op, std::size_t runs) {
  if (runs == 0) fail(ErrorCode::InvalidArgument, "runs must be at least 1");
  using clock = std::chrono::steady_clock;
  op();  // warm-up
  std::vector<double> times;
  times.reserve(runs);
  for (std::size_t i = 0; i < runs; ++i) {
    const auto start = clock::now();
    op();
    times.push_back(std::chrono::duration<double>(clock::now() - start).count());
  }
  std::sort(times.begin(), times.end());
  const std::size_t mid = runs / 2;
  return runs % 2 ? times[mid] : 0.5 * (times[mid - 1] + times[mid]);
}

// ---- heap accounting -------------------------------------------------------

namespace {

constinit std::atomic<bool> g_installed{false};
constinit std::atomic<std::int64_t> g_live{0};
constinit std::atomic<std::int64_t> g_peak{0};

}  // namespace

namespace detail {

void mark_allocation_counter_installed() noexcept { g_installed.store(true); }

void on_allocate(std::size_t bytes) noexcept {
  const auto live = g_live.fetch_add(static_cast<std::int64_t>(bytes), std::memory_order_relaxed) +
                    static_cast<std::int64_t>(bytes);
  auto peak = g_peak.load(std::memory_order_relaxed);
  while (live > peak && !g_peak.compare_exchange_weak(peak, live, std::memory_order_relaxed)) {
  }
}

void on_release(std::size_t bytes) noexcept {
  g_live.fetch_sub(static_cast<std::int64_t>(bytes), std::memory_order_relaxed);
}

}  // namespace detail

bool allocation_counter_installed() noexcept { return g_installed.load(); }

std::uint64_t measure_peak_memory(const std::function<void()>& op) {
  if (!allocation_counter_installed())
    fail(ErrorCode::MeasurementUnavailable, "allocation counter not linked into this binary");
  const auto baseline = g_live.load();
  g_peak.store(baseline);
  op();
  return static_cast<std::uint64_t>(std::max<std::int64_t>(0, g_peak.load() - baseline));
}

// ---- ratios and fits -------------------------------------------------------

double compression_ratio(std::uint64_t input_bytes, std::uint64_t output_bytes) {
  if (output_bytes == 0) fail(ErrorCode::ZeroOutput, "compressed size is zero");
  return static_cast<double>(input_bytes) / static_cast<double>(output_bytes);
}

ExponentFit fit_complexity_exponent(std::span<const Sample> samples) {
  if (samples.size() < 3)
    fail(ErrorCode::DegenerateSamples, "need at least 3 samples, got " + std::to_string(samples.size()));
  std::vector<double> sizes;
  for (const auto& s : samples) {
    if (!(s.size > 0.0) || !(s.seconds > 0.0) || !std::isfinite(s.size) || !std::isfinite(s.seconds))
      fail(ErrorCode::DegenerateSamples, "sizes and times must be positive");
    sizes.push_back(s.size);
  }
  std::sort(sizes.begin(), sizes.end());
  if (std::adjacent_find(sizes.begin(), sizes.end()) != sizes.end())
    fail(ErrorCode::DegenerateSamples, "sizes must be distinct");

  const double n = static_cast<double>(samples.size());
  double mx = 0, my = 0;
  for (const auto& s : samples) {
    mx += std::log(s.size);
    my += std::log(s.seconds);
  }
  mx /= n;
  my /= n;
  double sxx = 0, sxy = 0, syy = 0;
  for (const auto& s : samples) {
    const double dx = std::log(s.size) - mx, dy = std::log(s.seconds) - my;
    sxx += dx * dx;
    sxy += dx * dy;
    syy += dy * dy;
  }
  const double slope = sxy / sxx;
  const double intercept = my - slope * mx;
  double ss_res = 0;
  for (const auto& s : samples) {
    const double r = std::log(s.seconds) - (intercept + slope * std::log(s.size));
    ss_res += r * r;
  }
  // A flat series is fitted exactly by slope 0.
  const double r2 = syy > 0 ? std::clamp(1.0 - ss_res / syy, 0.0, 1.0) : 1.0;
  return ExponentFit{slope, std::exp(intercept), r2, samples.size()};
}

std::vector<Sample> time_scaling(std::span<const std::size_t> sizes,
                                 const std::function<std::function<void()>(std::size_t)>& make_op,
                                 std::size_t runs, double min_batch_s) {
  using clock = std::chrono::steady_clock;
  std::vector<Sample> out;
  for (auto size : sizes) {
    auto op = make_op(size);
    std::size_t reps = 1;
    for (;;) {
      const auto start = clock::now();
      for (std::size_t i = 0; i < reps; ++i) op();
      if (std::chrono::duration<double>(clock::now() - start).count() >= min_batch_s || reps >= (1u << 20)) break;
      reps *= 2;
    }
    const double batch = time_operation(
        [&] {
          for (std::size_t i = 0; i < reps; ++i) op();
        },
        runs);
    out.push_back({static_cast<double>(size), batch / static_cast<double>(reps)});
  }
  return out;
}

// ---- corpus runs -------------------------------------------------------------

std::vector<BenchRecord> run_corpus(const fs::path& dir, const CorpusOptions& options) {
  if (options.runs == 0) fail(ErrorCode::InvalidArgument, "runs must be at least 1");
  const auto images = dataset::list_images(dir);
  if (images.empty()) fail(ErrorCode::EmptyCorpus, "no images under " + dir.string());

  const bool measure_memory = options.measure_memory && allocation_counter_installed();
  std::vector<BenchRecord> records;
  for (const auto& rel : images) {
    const auto path = dir / rel;
    try {
      const auto matrix = dataset::ingest_image(path);
      const std::string csv = write_csv(matrix);
      const auto image_id = rel.stem().string();

      for (const auto codec : options.codecs) {
        auto copts = options.compress;
        copts.codec = codec;
        const Bytes source = is_lossless(codec) ? pipeline::lossless_source(matrix, copts.raw_pixels) : to_bytes(csv);

        Bytes frame;
        auto compress_op = [&] {
          if (is_lossless(codec))
            frame = encode_frame(compress_bytes(source, codec, copts.lossless));
          else
            frame = pipeline::compress_image(parse_csv(csv), copts);
        };
        std::string decoded;
        auto decompress_op = [&] { decoded = pipeline::decompress_to_csv(frame); };

        const double t_compress = time_operation(compress_op, options.runs);
        const std::uint64_t m_compress = measure_memory ? measure_peak_memory(compress_op) : 0;
        const double t_decompress = time_operation(decompress_op, options.runs);
        const std::uint64_t m_decompress = measure_memory ? measure_peak_memory(decompress_op) : 0;

        if (is_lossless(codec)) {
          if (options.tamper_decoded) options.tamper_decoded(decoded);
          if (decoded != csv)
            fail(ErrorCode::RoundTripMismatch, "codec " + std::string(codec_name(codec)) + " did not reproduce the input");
        }

        records.push_back({codec, image_id, Direction::Compress, source.size(), frame.size(), matrix.pixel_count(),
                           t_compress, m_compress});
        records.push_back({codec, image_id, Direction::Decompress, frame.size(), decoded.size(), matrix.pixel_count(),
                           t_decompress, m_decompress});
      }
    } catch (const Error& e) {
      fail(e.code(), path.string() + ": " + e.detail());
    }
  }
  return records;
}

// ---- reporting ---------------------------------------------------------------

namespace {

std::string shortest(double v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

std::string fixed(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  return buf;
}

template <typename T>
T parse_number(std::string_view field, std::size_t line_no) {
  T v{};
  auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
  if (ec != std::errc() || ptr != field.data() + field.size())
    fail(ErrorCode::MalformedToken, "bad number '" + std::string(field) + "' on records line " + std::to_string(line_no));
  return v;
}

constexpr double kMB = 1e6;

}  // namespace

std::string write_records_csv(std::span<const BenchRecord> records) {
  std::string out(kRecordsHeader);
  out += '\n';
  for (const auto& r : records) {
    out += codec_name(r.codec);
    out += ',' + r.image_id + ',';
    out += direction_name(r.direction);
    out += ',' + std::to_string(r.input_bytes) + ',' + std::to_string(r.output_bytes) + ',' +
           std::to_string(r.input_pixels) + ',' + shortest(r.wall_time_s) + ',' + std::to_string(r.peak_heap_bytes);
    out += '\n';
  }
  return out;
}

std::vector<BenchRecord> parse_records_csv(std::string_view text) {
  std::vector<BenchRecord> records;
  bool header = true;
  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    auto nl = text.find('\n');
    auto line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty()) continue;
    if (header) {
      if (line != kRecordsHeader) fail(ErrorCode::MalformedToken, "records header mismatch");
      header = false;
      continue;
    }
    std::vector<std::string_view> f;
    for (std::size_t start = 0;;) {
      auto comma = line.find(',', start);
      f.push_back(line.substr(start, comma - start));
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
    if (f.size() != 8) fail(ErrorCode::MalformedToken, "records line " + std::to_string(line_no) + " needs 8 fields");
    const auto codec = parse_codec_name(f[0]);
    if (!codec) fail(ErrorCode::UnknownCodec, "codec '" + std::string(f[0]) + "'");
    Direction dir;
    if (f[2] == "compress") dir = Direction::Compress;
    else if (f[2] == "decompress") dir = Direction::Decompress;
    else fail(ErrorCode::MalformedToken, "direction '" + std::string(f[2]) + "'");
    records.push_back({*codec, std::string(f[1]), dir, parse_number<std::uint64_t>(f[3], line_no),
                       parse_number<std::uint64_t>(f[4], line_no), parse_number<std::uint64_t>(f[5], line_no),
                       parse_number<double>(f[6], line_no), parse_number<std::uint64_t>(f[7], line_no)});
  }
  if (header) fail(ErrorCode::EmptyInput, "records file has no header");
  return records;
}

Report summarize(std::span<const BenchRecord> records, const LabelMap& labels) {
  struct Acc {
    std::size_t n = 0;
    double a = 0, b = 0;
  };
  std::map<std::pair<CodecId, Direction>, Acc> time, memory;
  std::map<std::tuple<CodecId, bool, ImageLabel>, Acc> ratio;

  for (const auto& r : records) {
    const double file_bytes = static_cast<double>(r.direction == Direction::Compress ? r.input_bytes : r.output_bytes);
    auto& t = time[{r.codec, r.direction}];
    ++t.n;
    t.a += r.wall_time_s;
    t.b += file_bytes / kMB;
    auto& m = memory[{r.codec, r.direction}];
    ++m.n;
    m.a += static_cast<double>(r.peak_heap_bytes) / kMB;
    m.b += file_bytes / kMB;

    if (r.direction != Direction::Compress) continue;
    auto it = labels.find(r.image_id);
    const auto label = it == labels.end() ? ImageLabel::Unlabeled : it->second;
    auto& byte_ratio = ratio[{r.codec, false, label}];
    ++byte_ratio.n;
    byte_ratio.a += compression_ratio(r.input_bytes, r.output_bytes);
    if (r.codec == CodecId::LossyNN) {
      const auto header = kFrameHeaderBytes + lossy::kArchiveHeaderBytes;
      auto& px = ratio[{r.codec, true, label}];
      ++px.n;
      px.a += compression_ratio(r.input_pixels, r.output_bytes > header ? r.output_bytes - header : 0);
    }
  }

  Report report;
  for (const auto& [key, acc] : time)
    report.time.push_back({key.first, key.second, acc.n, acc.a / acc.n, acc.b / acc.n});
  for (const auto& [key, acc] : memory)
    report.memory.push_back({key.first, key.second, acc.n, acc.a / acc.n, acc.b / acc.n});
  for (const auto& [key, acc] : ratio)
    report.ratio.push_back({std::get<0>(key), std::get<1>(key), std::get<2>(key), acc.n, acc.a / acc.n});
  return report;
}

namespace {

// Left-aligned text table.
std::string align(const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width;
  for (const auto& row : rows)
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (width.size() <= c) width.push_back(0);
      width[c] = std::max(width[c], row[c].size());
    }
  std::string out;
  for (const auto& row : rows) {
    std::string line;
    for (std::size_t c = 0; c < row.size(); ++c) {
      line += row[c];
      if (c + 1 < row.size()) line += std::string(width[c] - row[c].size() + 2, ' ');
    }
    out += line + '\n';
  }
  return out;
}

std::string ratio_section(const RatioRow& r) {
  return "codec=" + std::string(codec_name(r.codec)) + " level=" + (r.pixel_level ? "pixels" : "bytes");
}

}  // namespace

std::string render_report(std::span<const BenchRecord> records, const LabelMap& labels) {
  const auto report = summarize(records, labels);
  std::ostringstream out;

  std::vector<std::vector<std::string>> t{{"codec", "direction", "records", "mean_time_s", "mean_file_mb"}};
  for (const auto& r : report.time)
    t.push_back({std::string(codec_name(r.codec)), std::string(direction_name(r.direction)), std::to_string(r.count),
                 fixed(r.mean_wall_time_s, 6), fixed(r.mean_file_mb, 3)});
  out << "Execution time\n" << align(t) << '\n';

  std::vector<std::vector<std::string>> m{{"codec", "direction", "records", "mean_peak_heap_mb", "mean_file_mb"}};
  for (const auto& r : report.memory)
    m.push_back({std::string(codec_name(r.codec)), std::string(direction_name(r.direction)), std::to_string(r.count),
                 fixed(r.mean_peak_heap_mb, 3), fixed(r.mean_file_mb, 3)});
  out << "Memory consumption\n" << align(m) << '\n';

  out << "Compression ratio\n";
  std::string section;
  std::vector<std::vector<std::string>> rt;
  auto flush = [&] {
    if (!rt.empty()) out << section << '\n' << align(rt);
    rt.clear();
  };
  for (const auto& r : report.ratio) {
    if (ratio_section(r) != section) {
      flush();
      section = ratio_section(r);
      rt.push_back({"label", "mean_ratio"});
    }
    rt.push_back({std::string(label_name(r.label)), fixed(r.mean_ratio, 1) + ":1"});
  }
  flush();

  out << "\n# time\ncodec,direction,mean_wall_time_s,mean_file_mb\n";
  for (const auto& r : report.time)
    out << codec_name(r.codec) << ',' << direction_name(r.direction) << ',' << shortest(r.mean_wall_time_s) << ','
        << shortest(r.mean_file_mb) << '\n';
  out << "# memory\ncodec,direction,mean_peak_heap_mb,mean_file_mb\n";
  for (const auto& r : report.memory)
    out << codec_name(r.codec) << ',' << direction_name(r.direction) << ',' << shortest(r.mean_peak_heap_mb) << ','
        << shortest(r.mean_file_mb) << '\n';
  section.clear();
  for (const auto& r : report.ratio) {
    if (ratio_section(r) != section) {
      section = ratio_section(r);
      out << "# ratio " << section << "\nlabel,mean_ratio\n";
    }
    out << label_name(r.label) << ',' << shortest(r.mean_ratio) << '\n';
  }
  return out.str();
}

}  // namespace livc::bench
