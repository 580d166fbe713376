#include "livc/bwt.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <utility>
#include <vector>

namespace livc::bwt {

BwtBlock bwt_forward(ByteView block, std::size_t max_block) {
  const std::size_t n = block.size();
  if (n == 0) fail(ErrorCode::EmptyBlock, "cannot transform an empty block");
  if (n > max_block)
    fail(ErrorCode::InvalidArgument, "block of " + std::to_string(n) + " bytes exceeds limit " +
                                         std::to_string(max_block));

  std::vector<std::uint32_t> order(n), rank(n), scratch(n), bucket(std::max<std::size_t>(n, 256) + 1);

  // Initial order: counting sort on the leading byte.
  std::fill(bucket.begin(), bucket.begin() + 257, 0);
  for (auto b : block) ++bucket[b + 1];
  for (std::size_t c = 1; c <= 256; ++c) bucket[c] += bucket[c - 1];
  for (std::size_t i = 0; i < n; ++i) order[bucket[block[i]]++] = static_cast<std::uint32_t>(i);
  std::uint32_t classes = 1;
  rank[order[0]] = 0;
  for (std::size_t i = 1; i < n; ++i) {
    if (block[order[i]] != block[order[i - 1]]) ++classes;
    rank[order[i]] = classes - 1;
  }

  // Rotations agree on their first `len` bytes within a class; each round
  // doubles `len` by ordering on (rank[i], rank[i + len]).
  for (std::size_t len = 1; len < n && classes < n; len <<= 1) {
    for (std::size_t i = 0; i < n; ++i)
      scratch[i] = static_cast<std::uint32_t>((order[i] + n - len % n) % n);  // sorted by second key
    std::fill(bucket.begin(), bucket.begin() + classes + 1, 0);
    for (std::size_t i = 0; i < n; ++i) ++bucket[rank[scratch[i]] + 1];
    for (std::size_t c = 1; c <= classes; ++c) bucket[c] += bucket[c - 1];
    for (std::size_t i = 0; i < n; ++i) order[bucket[rank[scratch[i]]]++] = scratch[i];

    scratch[order[0]] = 0;
    classes = 1;
    for (std::size_t i = 1; i < n; ++i) {
      const auto a = order[i], b = order[i - 1];
      if (rank[a] != rank[b] || rank[(a + len) % n] != rank[(b + len) % n]) ++classes;
      scratch[a] = classes - 1;
    }
    rank.swap(scratch);
  }

  BwtBlock out{Bytes(n), 0};
  for (std::size_t i = 0; i < n; ++i) {
    out.transformed[i] = block[(order[i] + n - 1) % n];
    if (order[i] == 0) out.primary_index = static_cast<std::uint32_t>(i);
  }
  return out;
}

Bytes bwt_inverse(const BwtBlock& b) {
  const std::size_t n = b.transformed.size();
  if (b.primary_index >= n)
    fail(ErrorCode::IndexOutOfRange, "primary index " + std::to_string(b.primary_index) + " outside block of " +
                                         std::to_string(n));

  // first[c]: row where rotations starting with byte c begin.
  std::array<std::size_t, 256> first{};
  for (auto c : b.transformed) ++first[c];
  std::size_t sum = 0;
  for (auto& f : first) sum += std::exchange(f, sum);

  // last-to-first mapping
  std::vector<std::uint32_t> lf(n);
  for (std::size_t i = 0; i < n; ++i) lf[i] = static_cast<std::uint32_t>(first[b.transformed[i]]++);

  Bytes out(n);
  std::size_t row = b.primary_index;
  for (std::size_t i = n; i-- > 0;) {
    out[i] = b.transformed[row];
    row = lf[row];
  }
  return out;
}

Bytes mtf_encode(ByteView input) {
  std::array<std::uint8_t, 256> list;
  std::iota(list.begin(), list.end(), 0);
  Bytes out;
  out.reserve(input.size());
  for (auto b : input) {
    std::uint8_t pos = 0;
    while (list[pos] != b) ++pos;
    out.push_back(pos);
    for (std::uint8_t k = pos; k > 0; --k) list[k] = list[k - 1];
    list[0] = b;
  }
  return out;
}

Bytes mtf_decode(ByteView input) {
  std::array<std::uint8_t, 256> list;
  std::iota(list.begin(), list.end(), 0);
  Bytes out;
  out.reserve(input.size());
  for (auto pos : input) {
    const auto b = list[pos];
    out.push_back(b);
    for (std::uint8_t k = pos; k > 0; --k) list[k] = list[k - 1];
    list[0] = b;
  }
  return out;
}

}  // namespace livc::bwt
