#include "livc/dataset.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <iterator>
#include <set>
#include <unordered_map>

#include "livc/kernels.hpp"
#include "netpbm.hpp"

namespace fs = std::filesystem;

namespace livc::dataset {

std::uint8_t rgb_to_gray(std::uint8_t r, std::uint8_t g, std::uint8_t b) noexcept {
  const std::uint8_t rgb[3] = {r, g, b};
  std::uint8_t out;
  kernels::scalar_kernels().gray_row(rgb, &out, 1);
  return out;
}

PixelMatrix parse_ppm(ByteView bytes) {
  auto img = detail::read_netpbm(bytes, "36");
  std::vector<std::uint8_t> gray(img.width * img.height);
  kernels::active_kernels().gray_row(img.samples.data(), gray.data(), gray.size());
  return PixelMatrix(img.height, img.width, std::move(gray));
}

PixelMatrix ingest_bytes(ByteView bytes) {
  if (bytes.size() >= 2 && bytes[0] == 'P') {
    if (bytes[1] == '2' || bytes[1] == '5') return parse_pgm(bytes);
    if (bytes[1] == '3' || bytes[1] == '6') return parse_ppm(bytes);
    fail(ErrorCode::UnsupportedFormat, "netpbm variant P" + std::string(1, static_cast<char>(bytes[1])));
  }
  // CSV rows start with a digit, a sign, '[' or blanks.
  auto first = std::find_if(bytes.begin(), bytes.end(), [](std::uint8_t c) { return !std::isspace(c); });
  if (first == bytes.end()) fail(ErrorCode::EmptyInput, "no image data");
  const auto c = *first;
  if (!(std::isdigit(c) || c == '[' || c == '+' || c == '-'))
    fail(ErrorCode::UnsupportedFormat, "not a PGM, PPM or CSV image");
  return parse_csv(std::string_view(reinterpret_cast<const char*>(bytes.data()), bytes.size()));
}

Bytes read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorCode::IoError, "cannot open " + path.string());
  Bytes data((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  if (in.bad()) fail(ErrorCode::IoError, "failed reading " + path.string());
  return data;
}

void write_file(const fs::path& path, ByteView bytes) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) fail(ErrorCode::IoError, "cannot create " + path.string());
  out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
  if (!out) fail(ErrorCode::IoError, "failed writing " + path.string());
}

PixelMatrix ingest_image(const fs::path& path) {
  const auto bytes = read_file(path);
  try {
    return ingest_bytes(bytes);
  } catch (const Error& e) {
    fail(e.code(), path.string() + ": " + e.detail());
  }
}

std::string_view split_name(Split s) noexcept { return s == Split::Train ? "train" : "test"; }

std::uint64_t SplitMix64::next() noexcept {
  std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

std::vector<SplitAssignment> split_dataset(std::vector<std::string> ids, double train_fraction, std::uint64_t seed) {
  if (!(train_fraction > 0.0 && train_fraction < 1.0))
    fail(ErrorCode::InvalidArgument, "train fraction " + std::to_string(train_fraction) + " not in (0,1)");
  if (ids.empty()) fail(ErrorCode::EmptyList, "no ids to split");
  std::sort(ids.begin(), ids.end());
  if (auto dup = std::adjacent_find(ids.begin(), ids.end()); dup != ids.end())
    fail(ErrorCode::DuplicateId, "image id '" + *dup + "' appears more than once");

  SplitMix64 rng(seed);
  for (std::size_t i = ids.size() - 1; i > 0; --i) std::swap(ids[i], ids[rng.next() % (i + 1)]);

  // The epsilon keeps products like 0.7 * 1000 = 700.0000000000001 at 700.
  const double exact = train_fraction * static_cast<double>(ids.size());
  const auto train = std::min(ids.size(), static_cast<std::size_t>(std::ceil(exact - 1e-9)));

  std::vector<SplitAssignment> out;
  out.reserve(ids.size());
  for (std::size_t i = 0; i < ids.size(); ++i)
    out.push_back({std::move(ids[i]), i < train ? Split::Train : Split::Test});
  return out;
}

std::vector<DatasetItem> apply_split(std::vector<DatasetItem> items, double train_fraction, std::uint64_t seed) {
  std::vector<std::string> ids;
  ids.reserve(items.size());
  for (const auto& item : items) ids.push_back(item.image_id);
  std::unordered_map<std::string, Split> assigned;
  for (auto& a : split_dataset(std::move(ids), train_fraction, seed)) assigned.emplace(std::move(a.image_id), a.split);
  for (auto& item : items) item.split = assigned.at(item.image_id);
  return items;
}

namespace {

bool is_image_extension(const fs::path& p) {
  auto ext = p.extension().string();
  std::transform(ext.begin(), ext.end(), ext.begin(), [](unsigned char c) { return std::tolower(c); });
  return ext == ".csv" || ext == ".pgm" || ext == ".ppm" || ext == ".pnm";
}

ImageLabel label_for(const fs::path& relative) {
  if (std::distance(relative.begin(), relative.end()) < 2) return ImageLabel::Unlabeled;
  const auto top = relative.begin()->string();
  if (top == "healthy") return ImageLabel::Healthy;
  if (top == "sick") return ImageLabel::Sick;
  return ImageLabel::Unlabeled;
}

}  // namespace

std::vector<fs::path> list_images(const fs::path& root) {
  if (!fs::is_directory(root)) fail(ErrorCode::MissingRoot, root.string() + " is not a directory");
  std::vector<fs::path> out;
  for (const auto& entry : fs::recursive_directory_iterator(root)) {
    if (!entry.is_regular_file() || !is_image_extension(entry.path())) continue;
    auto rel = fs::relative(entry.path(), root);
    if (rel == "manifest.csv") continue;
    out.push_back(rel);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<DatasetItem> build_manifest(const fs::path& root) {
  std::vector<DatasetItem> items;
  for (const auto& rel : list_images(root)) items.push_back({rel.stem().string(), label_for(rel), std::nullopt});
  return items;
}

std::string write_manifest(const std::vector<DatasetItem>& items) {
  std::string out = "image_id,label,split\n";
  for (const auto& item : items) {
    out += item.image_id;
    out += ',';
    out += label_name(item.label);
    out += ',';
    if (item.split) out += split_name(*item.split);
    out += '\n';
  }
  return out;
}

std::vector<DatasetItem> parse_manifest(std::string_view text) {
  std::vector<DatasetItem> items;
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
      if (line != "image_id,label,split") fail(ErrorCode::MalformedToken, "manifest header must be image_id,label,split");
      header = false;
      continue;
    }
    const auto c1 = line.find(',');
    const auto c2 = c1 == std::string_view::npos ? c1 : line.find(',', c1 + 1);
    if (c2 == std::string_view::npos || line.find(',', c2 + 1) != std::string_view::npos)
      fail(ErrorCode::MalformedToken, "manifest line " + std::to_string(line_no) + " needs 3 fields");
    DatasetItem item{std::string(line.substr(0, c1)), parse_label(line.substr(c1 + 1, c2 - c1 - 1)), std::nullopt};
    const auto split = line.substr(c2 + 1);
    if (split == "train") item.split = Split::Train;
    else if (split == "test") item.split = Split::Test;
    else if (!split.empty()) fail(ErrorCode::MalformedToken, "unknown split '" + std::string(split) + "'");
    items.push_back(std::move(item));
  }
  if (header) fail(ErrorCode::EmptyInput, "manifest has no header");
  return items;
}

std::vector<DatasetItem> ingest_directory(const fs::path& src, const fs::path& dst) {
  std::error_code ec;
  if (fs::exists(dst) && fs::equivalent(src, dst, ec))
    fail(ErrorCode::InvalidArgument, "destination must differ from the source directory");
  std::vector<DatasetItem> items;
  for (const auto& rel : list_images(src)) {
    const auto matrix = ingest_image(src / rel);
    auto out_path = dst / rel;
    out_path.replace_extension(".csv");
    fs::create_directories(out_path.parent_path());
    write_file(out_path, to_bytes(write_csv(matrix)));
    items.push_back({rel.stem().string(), label_for(rel), std::nullopt});
  }
  fs::create_directories(dst);
  write_file(dst / "manifest.csv", to_bytes(write_manifest(items)));
  return items;
}

}  // namespace livc::dataset
