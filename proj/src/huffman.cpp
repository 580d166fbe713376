#include "livc/huffman.hpp"

#include <algorithm>
#include <queue>
#include <vector>

namespace livc::huffman {

namespace {

constexpr unsigned kMaxCodeLength = 57;
constexpr std::size_t kTableBytes = 256;

// Symbols ordered by (length, value) with their canonical codes.
struct CanonicalCode {
  std::array<std::uint64_t, 256> code{};
  std::vector<std::uint8_t> sorted;  // present symbols in canonical order
};

CanonicalCode assign_codes(const HuffmanTable& table) {
  CanonicalCode cc;
  for (unsigned s = 0; s < 256; ++s)
    if (table.code_lengths[s]) cc.sorted.push_back(static_cast<std::uint8_t>(s));
  std::stable_sort(cc.sorted.begin(), cc.sorted.end(), [&](std::uint8_t a, std::uint8_t b) {
    return table.code_lengths[a] < table.code_lengths[b];
  });
  std::uint64_t code = 0;
  unsigned prev_len = 0;
  for (auto s : cc.sorted) {
    const unsigned len = table.code_lengths[s];
    if (prev_len) code = (code + 1) << (len - prev_len);
    prev_len = len;
    cc.code[s] = code;
  }
  return cc;
}

// Kraft sum scaled by 2^kMaxCodeLength.
void validate(const HuffmanTable& table) {
  std::uint64_t kraft = 0;
  unsigned present = 0;
  for (auto len : table.code_lengths) {
    if (!len) continue;
    if (len > kMaxCodeLength) fail(ErrorCode::CorruptTable, "code length " + std::to_string(len) + " too long");
    kraft += std::uint64_t{1} << (kMaxCodeLength - len);
    ++present;
  }
  constexpr std::uint64_t one = std::uint64_t{1} << kMaxCodeLength;
  if (kraft > one) fail(ErrorCode::CorruptTable, "code lengths violate the Kraft inequality");
  if (present >= 2 && kraft != one) fail(ErrorCode::CorruptTable, "code lengths leave an incomplete code");
}

class BitWriter {
 public:
  explicit BitWriter(Bytes& out) : out_(out) {}

  void put(std::uint64_t code, unsigned len) {
    while (len) {
      const unsigned take = std::min(len, 32u);
      len -= take;
      acc_ = (acc_ << take) | ((code >> len) & ((std::uint64_t{1} << take) - 1));
      bits_ += take;
      while (bits_ >= 8) {
        bits_ -= 8;
        out_.push_back(static_cast<std::uint8_t>(acc_ >> bits_));
      }
    }
  }
  void flush() {
    if (bits_) out_.push_back(static_cast<std::uint8_t>(acc_ << (8 - bits_)));
    bits_ = 0;
  }

 private:
  Bytes& out_;
  std::uint64_t acc_ = 0;
  unsigned bits_ = 0;
};

}  // namespace

Frequencies count_bytes(ByteView input) {
  Frequencies freq{};
  for (auto b : input) ++freq[b];
  return freq;
}

HuffmanTable build_table(const Frequencies& freq) {
  HuffmanTable table;
  struct Node {
    std::uint64_t weight;
    std::uint32_t order;  // tie-break: leaves by symbol, then merged nodes by creation
    int left = -1, right = -1;
  };
  std::vector<Node> nodes;
  for (unsigned s = 0; s < 256; ++s)
    if (freq[s]) nodes.push_back({freq[s], s, -1, -1});

  if (nodes.empty()) return table;
  if (nodes.size() == 1) {
    table.code_lengths[nodes[0].order] = 1;
    return table;
  }

  const std::size_t leaves = nodes.size();
  auto heavier = [&](int a, int b) {
    if (nodes[a].weight != nodes[b].weight) return nodes[a].weight > nodes[b].weight;
    return nodes[a].order > nodes[b].order;
  };
  std::priority_queue<int, std::vector<int>, decltype(heavier)> heap(heavier);
  for (std::size_t i = 0; i < leaves; ++i) heap.push(static_cast<int>(i));
  std::uint32_t next_order = 256;
  while (heap.size() > 1) {
    const int a = heap.top();
    heap.pop();
    const int b = heap.top();
    heap.pop();
    nodes.push_back({nodes[a].weight + nodes[b].weight, next_order++, a, b});
    heap.push(static_cast<int>(nodes.size() - 1));
  }

  // Depth-first walk assigning depths to leaves.
  std::vector<std::pair<int, unsigned>> stack{{heap.top(), 0u}};
  while (!stack.empty()) {
    auto [n, depth] = stack.back();
    stack.pop_back();
    if (nodes[n].left < 0) {
      table.code_lengths[nodes[n].order] = static_cast<std::uint8_t>(depth);
    } else {
      stack.push_back({nodes[n].left, depth + 1});
      stack.push_back({nodes[n].right, depth + 1});
    }
  }
  return table;
}

std::uint64_t body_bits(const HuffmanTable& table, const Frequencies& freq) {
  std::uint64_t bits = 0;
  for (unsigned s = 0; s < 256; ++s) bits += freq[s] * table.code_lengths[s];
  return bits;
}

Bytes encode_payload(ByteView input) {
  if (input.size() > 0xFFFFFFFFu) fail(ErrorCode::InvalidArgument, "input exceeds 4 GiB");
  const auto freq = count_bytes(input);
  const auto table = build_table(freq);
  const auto cc = assign_codes(table);

  Bytes out;
  out.reserve(kTableBytes + 4 + body_bits(table, freq) / 8 + 1);
  ByteWriter w(out);
  w.bytes(table.code_lengths);
  w.u32(static_cast<std::uint32_t>(input.size()));
  BitWriter bits(out);
  for (auto b : input) bits.put(cc.code[b], table.code_lengths[b]);
  bits.flush();
  return out;
}

Bytes decode_payload(ByteView payload) {
  ByteReader r(payload, ErrorCode::TruncatedBitstream);
  HuffmanTable table;
  auto raw = r.take(kTableBytes);
  std::copy(raw.begin(), raw.end(), table.code_lengths.begin());
  const std::uint32_t length = r.u32();
  validate(table);
  const auto cc = assign_codes(table);
  if (length > 0 && cc.sorted.empty()) fail(ErrorCode::CorruptTable, "empty table for non-empty input");

  // Canonical decoding: per length, the first code and its index in `sorted`.
  std::array<std::uint64_t, kMaxCodeLength + 2> first_code{};
  std::array<std::uint32_t, kMaxCodeLength + 2> count{};
  std::array<std::uint32_t, kMaxCodeLength + 2> first_index{};
  for (auto s : cc.sorted) ++count[table.code_lengths[s]];
  {
    std::uint32_t index = 0;
    for (unsigned len = 1; len <= kMaxCodeLength; ++len) {
      first_index[len] = index;
      index += count[len];
    }
    for (std::size_t i = 0; i < cc.sorted.size(); ++i) {
      const auto s = cc.sorted[i];
      if (i == first_index[table.code_lengths[s]]) first_code[table.code_lengths[s]] = cc.code[s];
    }
  }

  auto body = payload.subspan(r.position());
  Bytes out;
  out.reserve(length);
  std::size_t bit_pos = 0;
  const std::size_t total_bits = body.size() * 8;
  for (std::uint32_t produced = 0; produced < length; ++produced) {
    std::uint64_t code = 0;
    for (unsigned len = 1;; ++len) {
      if (len > kMaxCodeLength) fail(ErrorCode::CorruptTable, "bitstream matches no code");
      if (bit_pos >= total_bits)
        fail(ErrorCode::TruncatedBitstream, "ran out of bits after " + std::to_string(produced) + " of " +
                                                std::to_string(length) + " symbols");
      code = (code << 1) | ((body[bit_pos >> 3] >> (7 - (bit_pos & 7))) & 1u);
      ++bit_pos;
      if (count[len] && code >= first_code[len] && code - first_code[len] < count[len]) {
        out.push_back(cc.sorted[first_index[len] + (code - first_code[len])]);
        break;
      }
    }
  }
  if ((bit_pos + 7) / 8 != body.size())
    fail(ErrorCode::PayloadLengthMismatch, "bitstream has " + std::to_string(body.size() - (bit_pos + 7) / 8) +
                                               " unused bytes");
  return out;
}

CodecFrame huffman_encode(ByteView input) { return CodecFrame{CodecId::Huffman, encode_payload(input)}; }

Bytes huffman_decode(const CodecFrame& frame) {
  if (frame.codec != CodecId::Huffman) fail(ErrorCode::InvalidArgument, "not a Huffman frame");
  return decode_payload(frame.payload);
}

}  // namespace livc::huffman
