#include <doctest.h>

#include <map>
#include <random>

#include "livc/lz78.hpp"
#include "support.hpp"

using namespace livc;
using namespace livc::lz78;

namespace {

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected livc::Error");
  return ErrorCode::IoError;
}

// Textbook LZ78 over a std::map of strings.
std::vector<Lz78Token> reference_parse(const std::string& s) {
  std::map<std::string, std::uint32_t> dict;
  std::vector<Lz78Token> out;
  std::string w;
  for (char c : s) {
    if (dict.count(w + c)) {
      w += c;
      continue;
    }
    out.push_back({w.empty() ? 0 : dict[w], static_cast<std::uint8_t>(c)});
    const auto next = static_cast<std::uint32_t>(dict.size() + 1);
    dict[w + c] = next;
    w.clear();
  }
  if (!w.empty()) out.push_back({dict[w], std::nullopt});
  return out;
}

}  // namespace

TEST_CASE("dictionary and tokens for 'DAD DADABDAD'") {
  const auto input = to_bytes("DAD DADABDAD");
  const auto dict = dictionary(input);
  std::vector<std::string> phrases;
  for (const auto& p : dict) phrases.push_back(to_string(p));
  CHECK(phrases == std::vector<std::string>{"D", "A", "D ", "DA", "DAB", "DAD"});
  CHECK(parse(input) == std::vector<Lz78Token>{{0, 'D'}, {0, 'A'}, {1, ' '}, {1, 'A'}, {4, 'B'}, {4, 'D'}});
  CHECK(to_string(lz78_decode(lz78_encode(input))) == "DAD DADABDAD");
}

TEST_CASE("trailing phrase without symbol") {
  CHECK(parse(to_bytes("aa")) == std::vector<Lz78Token>{{0, 'a'}, {1, std::nullopt}});
  const auto frame = lz78_encode(to_bytes("aa"));
  const Bytes expected{1, 0, 0, 0, 0, 0, 0, 0, 'a', 1, 1, 0, 0, 0};
  CHECK(frame.payload == expected);
  CHECK(to_string(lz78_decode(frame)) == "aa");
}

TEST_CASE("empty input") {
  CHECK(parse(Bytes{}).empty());
  CHECK(lz78_decode(lz78_encode(Bytes{})).empty());
}

TEST_CASE("agrees with the reference parser") {
  std::mt19937_64 rng(21);
  for (int i = 0; i < 200; ++i) {
    const auto input = testing::random_bytes(rng, rng() % 800, 1 + rng() % 8);
    REQUIRE(parse(input) == reference_parse(to_string(input)));
    REQUIRE(lz78_decode(lz78_encode(input)) == input);
  }
  const auto big = testing::random_bytes(rng, 100000);
  CHECK(lz78_decode(lz78_encode(big)) == big);
}

TEST_CASE("decode errors") {
  const Bytes bad_index{1, 0, 0, 0, 7, 0, 0, 0, 'x', 0};
  CHECK(code_of([&] { decode_payload(bad_index); }) == ErrorCode::BadIndex);
  const Bytes short_tokens{2, 0, 0, 0, 0, 0, 0, 0, 'x'};
  CHECK(code_of([&] { decode_payload(short_tokens); }) == ErrorCode::TruncatedToken);
  const Bytes trailing{0, 0, 0, 0, 0, 9};
  CHECK(code_of([&] { decode_payload(trailing); }) == ErrorCode::PayloadLengthMismatch);
}
