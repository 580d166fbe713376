#include "livc/lz78.hpp"

#include <unordered_map>

namespace livc::lz78 {

namespace {

// Phrase trie keyed by (parent entry, next byte).
class PhraseTrie {
 public:
  std::uint32_t child(std::uint32_t parent, std::uint8_t byte) const {
    auto it = edges_.find(key(parent, byte));
    return it == edges_.end() ? 0 : it->second;
  }
  std::uint32_t add(std::uint32_t parent, std::uint8_t byte) {
    const auto id = ++size_;
    edges_.emplace(key(parent, byte), id);
    return id;
  }

 private:
  static std::uint64_t key(std::uint32_t parent, std::uint8_t byte) { return (std::uint64_t{parent} << 8) | byte; }

  std::unordered_map<std::uint64_t, std::uint32_t> edges_;
  std::uint32_t size_ = 0;
};

template <typename OnPhrase>
std::vector<Lz78Token> parse_impl(ByteView input, OnPhrase on_phrase) {
  PhraseTrie trie;
  std::vector<Lz78Token> tokens;
  std::uint32_t current = 0;
  std::size_t phrase_start = 0;
  for (std::size_t i = 0; i < input.size(); ++i) {
    const auto byte = input[i];
    if (auto next = trie.child(current, byte)) {
      current = next;
      continue;
    }
    if (trie.add(current, byte) == 0xFFFFFFFFu) fail(ErrorCode::InvalidArgument, "dictionary index overflow");
    tokens.push_back({current, byte});
    on_phrase(input.subspan(phrase_start, i + 1 - phrase_start));
    current = 0;
    phrase_start = i + 1;
  }
  if (current != 0) tokens.push_back({current, std::nullopt});
  return tokens;
}

}  // namespace

std::vector<Lz78Token> parse(ByteView input) {
  return parse_impl(input, [](ByteView) {});
}

std::vector<Bytes> dictionary(ByteView input) {
  std::vector<Bytes> entries;
  parse_impl(input, [&](ByteView phrase) { entries.emplace_back(phrase.begin(), phrase.end()); });
  return entries;
}

CodecFrame lz78_encode(ByteView input) {
  auto tokens = parse(input);
  std::optional<std::uint32_t> tail;
  if (!tokens.empty() && !tokens.back().symbol) {
    tail = tokens.back().index;
    tokens.pop_back();
  }
  CodecFrame frame{CodecId::Lz78, {}};
  frame.payload.reserve(4 + tokens.size() * 5 + 5);
  ByteWriter w(frame.payload);
  w.u32(static_cast<std::uint32_t>(tokens.size()));
  for (const auto& t : tokens) {
    w.u32(t.index);
    w.u8(*t.symbol);
  }
  w.u8(tail ? 1 : 0);
  if (tail) w.u32(*tail);
  return frame;
}

Bytes decode_payload(ByteView payload) {
  ByteReader r(payload, ErrorCode::TruncatedToken);
  const std::uint32_t count = r.u32();
  if (r.remaining() / 5 < count)
    fail(ErrorCode::TruncatedToken, "payload too short for " + std::to_string(count) + " tokens");

  // Every phrase is a substring of the output: entry k = out[start, start + len).
  struct Entry {
    std::size_t start;
    std::size_t length;
  };
  std::vector<Entry> entries{{0, 0}};
  entries.reserve(std::size_t{count} + 1);
  Bytes out;

  auto copy_entry = [&](std::uint32_t index) {
    if (index >= entries.size())
      fail(ErrorCode::BadIndex, "index " + std::to_string(index) + " but only " +
                                    std::to_string(entries.size() - 1) + " entries exist");
    const auto e = entries[index];
    for (std::size_t k = 0; k < e.length; ++k) out.push_back(out[e.start + k]);
    return e.length;
  };

  for (std::uint32_t t = 0; t < count; ++t) {
    const std::uint32_t index = r.u32();
    const std::uint8_t symbol = r.u8();
    const std::size_t start = out.size();
    const std::size_t len = copy_entry(index);
    out.push_back(symbol);
    entries.push_back({start, len + 1});
  }
  const std::uint8_t flag = r.u8();
  if (flag > 1) fail(ErrorCode::TruncatedToken, "bad tail flag " + std::to_string(flag));
  if (flag == 1) {
    const std::uint32_t index = r.u32();
    if (index == 0) fail(ErrorCode::BadIndex, "tail token references the empty phrase");
    copy_entry(index);
  }
  if (!r.at_end()) fail(ErrorCode::PayloadLengthMismatch, std::to_string(r.remaining()) + " trailing bytes");
  return out;
}

Bytes lz78_decode(const CodecFrame& frame) {
  if (frame.codec != CodecId::Lz78) fail(ErrorCode::InvalidArgument, "not an LZ78 frame");
  return decode_payload(frame.payload);
}

}  // namespace livc::lz78
