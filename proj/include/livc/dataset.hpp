#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "livc/pixel_matrix.hpp"

namespace livc::dataset {

/// Rec.601 luma, round(0.299 r + 0.587 g + 0.114 b) with halves rounded up.
std::uint8_t rgb_to_gray(std::uint8_t r, std::uint8_t g, std::uint8_t b) noexcept;

/// Grayscale matrix from a PPM (P3/P6) image; pixels go through rgb_to_gray.
PixelMatrix parse_ppm(ByteView bytes);

/// Loads a PGM (P2/P5), PPM (P3/P6) or CSV matrix, chosen by content.
PixelMatrix ingest_bytes(ByteView bytes);
PixelMatrix ingest_image(const std::filesystem::path& path);

Bytes read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, ByteView bytes);

enum class Split { Train, Test };
std::string_view split_name(Split s) noexcept;  // "train" / "test"

struct DatasetItem {
  std::string image_id;
  ImageLabel label = ImageLabel::Unlabeled;
  std::optional<Split> split;  // unset until a split is applied

  friend bool operator==(const DatasetItem&, const DatasetItem&) = default;
};

struct SplitAssignment {
  std::string image_id;
  Split split;

  friend bool operator==(const SplitAssignment&, const SplitAssignment&) = default;
};

/// SplitMix64 (Steele, Lea & Flood constants).
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next() noexcept;

 private:
  std::uint64_t state_;
};

/// Sorts `ids`, shuffles them with Fisher-Yates driven by SplitMix64(seed)
/// (swap index = next() % (i + 1), i from n-1 down to 1) and marks the first
/// ceil(train_fraction * n) as Train. Returned in shuffled order.
std::vector<SplitAssignment> split_dataset(std::vector<std::string> ids, double train_fraction, std::uint64_t seed);

/// Applies split_dataset to a manifest, keeping its row order.
std::vector<DatasetItem> apply_split(std::vector<DatasetItem> items, double train_fraction, std::uint64_t seed);

/// Image files under `root` (.csv, .pgm, .ppm, .pnm), recursively, sorted by
/// relative path. A manifest.csv directly under root is not an image.
std::vector<std::filesystem::path> list_images(const std::filesystem::path& root);

/// One item per image; files under root/healthy or root/sick are labelled
/// accordingly, everything else Unlabeled. Throws MissingRoot.
std::vector<DatasetItem> build_manifest(const std::filesystem::path& root);

// Manifest CSV: header "image_id,label,split", one '\n'-terminated line per
// item; the split column is empty before a split is applied.
std::string write_manifest(const std::vector<DatasetItem>& items);
std::vector<DatasetItem> parse_manifest(std::string_view text);

/// Converts every image under `src` to canonical CSV under `dst`, mirroring
/// the directory layout, and writes dst/manifest.csv. Returns the items.
std::vector<DatasetItem> ingest_directory(const std::filesystem::path& src, const std::filesystem::path& dst);

}  // namespace livc::dataset
