#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "livc/frame.hpp"
#include "livc/pipeline.hpp"
#include "livc/pixel_matrix.hpp"

namespace livc::bench {

enum class Direction { Compress, Decompress };
std::string_view direction_name(Direction d) noexcept;

/// One measured call. Sizes are file sizes in bytes: the CSV text and the
/// framed archive, in whichever order the direction implies.
struct BenchRecord {
  CodecId codec;
  std::string image_id;
  Direction direction;
  std::uint64_t input_bytes;
  std::uint64_t output_bytes;
  std::uint64_t input_pixels;  // rows x cols of the source image
  double wall_time_s;
  std::uint64_t peak_heap_bytes;

  friend bool operator==(const BenchRecord&, const BenchRecord&) = default;
};

/// Runs `op` once untimed, then `runs` timed times; returns the median in seconds.
double time_operation(const std::function<void()>& op, std::size_t runs);

// ---- heap accounting -------------------------------------------------------
//
// Linking the livc_alloc_hooks object library replaces the global allocation
// functions with counting versions. Only one measured call may run at a time.

bool allocation_counter_installed() noexcept;

/// High-water mark of live heap bytes above the starting level while `op`
/// runs. Throws MeasurementUnavailable without the hooks.
std::uint64_t measure_peak_memory(const std::function<void()>& op);

namespace detail {
void mark_allocation_counter_installed() noexcept;
void on_allocate(std::size_t bytes) noexcept;
void on_release(std::size_t bytes) noexcept;
}  // namespace detail

// ---- ratios and fits -------------------------------------------------------

/// input / output. Throws ZeroOutput when output_bytes is 0.
double compression_ratio(std::uint64_t input_bytes, std::uint64_t output_bytes);

struct Sample {
  double size;
  double seconds;
};

struct ExponentFit {
  double exponent;
  double coefficient;  // seconds at size 1
  double r_squared;
  std::size_t sample_count;
};

/// Least squares on (ln size, ln seconds). Needs >= 3 samples with distinct
/// positive sizes and positive times, else DegenerateSamples.
ExponentFit fit_complexity_exponent(std::span<const Sample> samples);

/// Times `make_op(size)` for each size. Each sample repeats the operation
/// until one batch lasts at least `min_batch_s`, and reports per-call time.
std::vector<Sample> time_scaling(std::span<const std::size_t> sizes,
                                 const std::function<std::function<void()>(std::size_t)>& make_op,
                                 std::size_t runs, double min_batch_s = 0.005);

// ---- corpus runs -------------------------------------------------------------

struct CorpusOptions {
  std::vector<CodecId> codecs;
  std::size_t runs = 3;
  pipeline::CompressOptions compress;  // codec field is overridden per run
  bool measure_memory = true;          // skipped when the hooks are absent
  // Test hook: applied to lossless decoder output before verification.
  std::function<void(std::string&)> tamper_decoded;
};

/// Benchmarks every image under `dir` (see dataset::list_images) with every
/// codec, compress then decompress. Lossless round trips must reproduce the
/// canonical CSV exactly (RoundTripMismatch otherwise). Errors name the file.
std::vector<BenchRecord> run_corpus(const std::filesystem::path& dir, const CorpusOptions& options);

// ---- reporting ---------------------------------------------------------------

inline constexpr std::string_view kRecordsHeader =
    "codec,image_id,direction,input_bytes,output_bytes,input_pixels,wall_time_s,peak_heap_bytes";

std::string write_records_csv(std::span<const BenchRecord> records);
std::vector<BenchRecord> parse_records_csv(std::string_view text);

using LabelMap = std::map<std::string, ImageLabel>;

struct TimeRow {
  CodecId codec;
  Direction direction;
  std::size_t count;
  double mean_wall_time_s;
  double mean_file_mb;
};

struct MemoryRow {
  CodecId codec;
  Direction direction;
  std::size_t count;
  double mean_peak_heap_mb;
  double mean_file_mb;
};

struct RatioRow {
  CodecId codec;
  bool pixel_level;  // lossy only: input pixels / archived pixels
  ImageLabel label;
  std::size_t count;
  double mean_ratio;
};

struct Report {
  std::vector<TimeRow> time;
  std::vector<MemoryRow> memory;
  std::vector<RatioRow> ratio;
};

/// Aggregates records into the time, memory and ratio tables. Images missing
/// from `labels` count as Unlabeled. MB = 10^6 bytes.
Report summarize(std::span<const BenchRecord> records, const LabelMap& labels);

/// Both renderings of summarize(): aligned text tables followed by the same
/// tables as CSV blocks.
std::string render_report(std::span<const BenchRecord> records, const LabelMap& labels);

}  // namespace livc::bench
