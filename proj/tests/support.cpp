#include "support.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <functional>
#include <sstream>

namespace fs = std::filesystem;

namespace livc::testing {

Bytes random_bytes(std::mt19937_64& rng, std::size_t n, unsigned alphabet) {
  std::uniform_int_distribution<unsigned> d(0, alphabet - 1);
  Bytes out(n);
  for (auto& b : out) b = static_cast<std::uint8_t>(d(rng));
  return out;
}

PixelMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols) {
  return PixelMatrix(rows, cols, random_bytes(rng, rows * cols));
}

PixelMatrix gradient_image(std::uint64_t seed, std::size_t rows, std::size_t cols, int noise) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> jitter(-noise, noise);
  std::uniform_real_distribution<double> place(0.3, 0.7);
  const double cy = place(rng) * rows, cx = place(rng) * cols;
  const double ry = rows * 0.2, rx = cols * 0.3;
  std::vector<std::uint8_t> data(rows * cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) {
      double v = 40.0 + 120.0 * (static_cast<double>(r) / rows + static_cast<double>(c) / cols) / 2.0;
      const double dy = (r - cy) / ry, dx = (c - cx) / rx;
      if (dy * dy + dx * dx < 1.0) v += 70.0 * (1.0 - (dy * dy + dx * dx));
      const int px = static_cast<int>(std::lround(v)) + jitter(rng);
      data[r * cols + c] = static_cast<std::uint8_t>(std::clamp(px, 0, 255));
    }
  return PixelMatrix(rows, cols, std::move(data));
}

std::uint64_t brute_force_optimal_bits(const std::vector<std::uint64_t>& counts) {
  std::vector<std::uint64_t> present;
  for (auto c : counts)
    if (c) present.push_back(c);
  if (present.empty()) return 0;
  if (present.size() == 1) return present[0];

  const unsigned k = static_cast<unsigned>(present.size());
  const unsigned max_len = k - 1;
  std::vector<unsigned> len(k, 1);
  std::uint64_t best = UINT64_MAX;
  std::function<void(unsigned)> go = [&](unsigned i) {
    if (i == k) {
      // Kraft in units of 2^-max_len
      std::uint64_t kraft = 0;
      for (auto l : len) kraft += std::uint64_t{1} << (max_len - l);
      if (kraft > (std::uint64_t{1} << max_len)) return;
      std::uint64_t bits = 0;
      for (unsigned j = 0; j < k; ++j) bits += present[j] * len[j];
      best = std::min(best, bits);
      return;
    }
    for (unsigned l = 1; l <= max_len; ++l) {
      len[i] = l;
      go(i + 1);
    }
  };
  go(0);
  return best;
}

std::pair<std::string, std::size_t> naive_bwt(const std::string& s) {
  std::vector<std::string> rotations;
  for (std::size_t i = 0; i < s.size(); ++i) rotations.push_back(s.substr(i) + s.substr(0, i));
  std::vector<std::string> sorted = rotations;
  std::stable_sort(sorted.begin(), sorted.end());
  std::string last;
  for (const auto& r : sorted) last.push_back(r.back());
  const auto primary = std::find(sorted.begin(), sorted.end(), s) - sorted.begin();
  return {last, static_cast<std::size_t>(primary)};
}

TempDir::TempDir() {
  static std::mt19937_64 rng(std::random_device{}());
  for (;;) {
    auto p = fs::temp_directory_path() / ("livc-test-" + std::to_string(rng()));
    if (fs::create_directory(p)) {
      path_ = p;
      return;
    }
  }
}

TempDir::~TempDir() {
  std::error_code ec;
  fs::remove_all(path_, ec);
}

void write_text(const fs::path& p, const std::string& text) {
  fs::create_directories(p.parent_path());
  std::ofstream out(p, std::ios::binary);
  out << text;
}

std::string read_text(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace livc::testing
