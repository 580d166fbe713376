#include "livc/lz77.hpp"

#include <algorithm>

namespace livc::lz77 {

namespace {

constexpr unsigned kHashBits = 16;

inline std::uint32_t hash3(const std::uint8_t* p) {
  const std::uint32_t v = (std::uint32_t{p[0]} << 16) | (std::uint32_t{p[1]} << 8) | p[2];
  return (v * 2654435761u) >> (32 - kHashBits);
}

}  // namespace

std::vector<Lz77Token> parse(ByteView input, std::uint32_t window) {
  if (window < 1 || window > kMaxWindow)
    fail(ErrorCode::InvalidArgument, "window " + std::to_string(window) + " not in [1, 65535]");

  const std::size_t n = input.size();
  const std::uint8_t* data = input.data();
  std::vector<std::int64_t> head(std::size_t{1} << kHashBits, -1);
  std::vector<std::int64_t> prev(n, -1);
  std::size_t inserted = 0;
  auto insert_up_to = [&](std::size_t end) {
    for (; inserted < end; ++inserted) {
      if (inserted + kMinMatch > n) continue;
      auto& h = head[hash3(data + inserted)];
      prev[inserted] = h;
      h = static_cast<std::int64_t>(inserted);
    }
  };

  std::vector<Lz77Token> tokens;
  std::size_t i = 0;
  while (i < n) {
    const std::size_t max_len = std::min<std::size_t>(kMaxMatch, n - i);
    std::size_t best_len = 0;
    std::size_t best_off = 0;
    if (max_len >= kMinMatch) {
      for (std::int64_t j = head[hash3(data + i)]; j >= 0 && i - static_cast<std::size_t>(j) <= window;
           j = prev[j]) {
        const std::size_t cand = static_cast<std::size_t>(j);
        if (data[cand + best_len] != data[i + best_len]) continue;
        std::size_t len = 0;
        while (len < max_len && data[cand + len] == data[i + len]) ++len;
        if (len > best_len) {
          best_len = len;
          best_off = i - cand;
          if (len == max_len) break;
        }
      }
    }

    if (best_len >= kMinMatch) {
      if (i + best_len == n) --best_len;  // the final byte travels as `next`
      tokens.push_back({static_cast<std::uint16_t>(best_off), static_cast<std::uint8_t>(best_len),
                        data[i + best_len]});
      i += best_len + 1;
    } else {
      tokens.push_back({0, 0, data[i]});
      ++i;
    }
    insert_up_to(i);
  }
  return tokens;
}

CodecFrame lz77_encode(ByteView input, std::uint32_t window) {
  const auto tokens = parse(input, window);
  CodecFrame frame{CodecId::Lz77, {}};
  frame.payload.reserve(tokens.size() * 4);
  ByteWriter w(frame.payload);
  for (const auto& t : tokens) {
    w.u16(t.offset);
    w.u8(t.length);
    w.u8(t.next);
  }
  return frame;
}

Bytes decode_payload(ByteView payload) {
  if (payload.size() % 4 != 0)
    fail(ErrorCode::TruncatedToken, "payload of " + std::to_string(payload.size()) + " bytes ends mid-token");
  Bytes out;
  ByteReader r(payload, ErrorCode::TruncatedToken);
  while (!r.at_end()) {
    const std::size_t offset = r.u16();
    const std::size_t length = r.u8();
    const std::uint8_t next = r.u8();
    if ((offset == 0) != (length == 0))
      fail(ErrorCode::BadOffset, "token (" + std::to_string(offset) + "," + std::to_string(length) +
                                     ") mixes literal and match");
    if (offset > out.size())
      fail(ErrorCode::BadOffset, "offset " + std::to_string(offset) + " reaches before the " +
                                     std::to_string(out.size()) + " bytes produced");
    const std::size_t from = out.size() - offset;
    for (std::size_t k = 0; k < length; ++k) out.push_back(out[from + k]);  // overlap-safe forward copy
    out.push_back(next);
  }
  return out;
}

Bytes lz77_decode(const CodecFrame& frame) {
  if (frame.codec != CodecId::Lz77) fail(ErrorCode::InvalidArgument, "not an LZ77 frame");
  return decode_payload(frame.payload);
}

}  // namespace livc::lz77
