#pragma once

// Test-only generators and independent oracles. Nothing here calls the
// implementation paths it is used to check.

#include <cstdint>
#include <filesystem>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "livc/bytes.hpp"
#include "livc/pixel_matrix.hpp"

namespace livc::testing {

Bytes random_bytes(std::mt19937_64& rng, std::size_t n, unsigned alphabet = 256);
PixelMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols);

/// Smooth diagonal gradient with a bright elliptical blob and uniform noise
/// of +-`noise`, clamped to [0,255]. Stands in for a grayscale photograph.
PixelMatrix gradient_image(std::uint64_t seed, std::size_t rows, std::size_t cols, int noise = 6);

/// Minimum total bits of any prefix code for these symbol counts, by
/// enumerating every length assignment (1..k-1 bits each, or 1 bit for a lone
/// symbol) that satisfies the Kraft inequality. Practical for k <= 6.
std::uint64_t brute_force_optimal_bits(const std::vector<std::uint64_t>& counts);

/// BWT by materialising and sorting every rotation.
std::pair<std::string, std::size_t> naive_bwt(const std::string& s);

/// Scratch directory removed on destruction.
class TempDir {
 public:
  TempDir();
  ~TempDir();
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;
  const std::filesystem::path& path() const { return path_; }

 private:
  std::filesystem::path path_;
};

void write_text(const std::filesystem::path& p, const std::string& text);
std::string read_text(const std::filesystem::path& p);

}  // namespace livc::testing
