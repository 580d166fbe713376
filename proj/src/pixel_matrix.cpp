#include "livc/pixel_matrix.hpp"

#include <cctype>
#include <charconv>
#include <algorithm>
#include <array>
#include <cstring>
#include <limits>

#include "netpbm.hpp"

namespace livc {

std::string_view label_name(ImageLabel label) noexcept {
  switch (label) {
    case ImageLabel::Healthy: return "healthy";
    case ImageLabel::Sick: return "sick";
    case ImageLabel::Unlabeled: return "unlabeled";
  }
  return "unlabeled";
}

ImageLabel parse_label(std::string_view name) {
  if (name == "healthy") return ImageLabel::Healthy;
  if (name == "sick") return ImageLabel::Sick;
  if (name == "unlabeled") return ImageLabel::Unlabeled;
  fail(ErrorCode::MalformedToken, "unknown label '" + std::string(name) + "'");
}

PixelMatrix::PixelMatrix(std::size_t rows, std::size_t cols, std::vector<std::uint8_t> data)
    : rows_(rows), cols_(cols), data_(std::move(data)) {
  if (rows == 0 || cols == 0)
    fail(ErrorCode::InvalidDimensions, "matrix must be at least 1x1, got " + std::to_string(rows) + "x" +
                                           std::to_string(cols));
  if (cols > std::numeric_limits<std::size_t>::max() / rows || data_.size() != rows * cols)
    fail(ErrorCode::InvalidDimensions, std::to_string(data_.size()) + " pixels do not fill " +
                                           std::to_string(rows) + "x" + std::to_string(cols));
}

PixelMatrix PixelMatrix::filled(std::size_t rows, std::size_t cols, std::uint8_t value) {
  if (rows == 0 || cols == 0) return PixelMatrix(rows, cols, {});
  return PixelMatrix(rows, cols, std::vector<std::uint8_t>(rows * cols, value));
}

namespace {

bool is_blank(char c) { return c == ' ' || c == '\t'; }

std::string_view trim(std::string_view s) {
  while (!s.empty() && is_blank(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_blank(s.back())) s.remove_suffix(1);
  return s;
}

std::uint8_t parse_csv_value(std::string_view token, std::size_t line_no) {
  token = trim(token);
  auto where = [&] { return " on line " + std::to_string(line_no); };
  if (token.empty()) fail(ErrorCode::MalformedToken, "empty value" + where());
  std::string_view digits = token;
  bool negative = false;
  if (digits.front() == '+' || digits.front() == '-') {
    negative = digits.front() == '-';
    digits.remove_prefix(1);
  }
  if (digits.empty()) fail(ErrorCode::MalformedToken, "'" + std::string(token) + "'" + where());
  for (char c : digits)
    if (c < '0' || c > '9') fail(ErrorCode::MalformedToken, "'" + std::string(token) + "'" + where());
  unsigned long long value = 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
  if (ec == std::errc::result_out_of_range || (negative && value != 0) || value > 255)
    fail(ErrorCode::ValueOutOfRange, "'" + std::string(token) + "' not in [0,255]" + where());
  return static_cast<std::uint8_t>(value);
}

}  // namespace

PixelMatrix parse_csv(std::string_view text) {
  std::vector<std::uint8_t> data;
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::size_t line_no = 0;

  while (!text.empty()) {
    ++line_no;
    auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    line = trim(line);
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']') fail(ErrorCode::MalformedToken, "unterminated '[' on line " + std::to_string(line_no));
      line = line.substr(1, line.size() - 2);
    }

    std::size_t count = 0;
    for (;;) {
      auto comma = line.find(',');
      data.push_back(parse_csv_value(line.substr(0, comma), line_no));
      ++count;
      if (comma == std::string_view::npos) break;
      line.remove_prefix(comma + 1);
    }
    if (rows == 0) {
      cols = count;
    } else if (count != cols) {
      fail(ErrorCode::RaggedRows, "line " + std::to_string(line_no) + " has " + std::to_string(count) +
                                      " values, expected " + std::to_string(cols));
    }
    ++rows;
  }
  if (rows == 0) fail(ErrorCode::EmptyInput, "no matrix rows");
  return PixelMatrix(rows, cols, std::move(data));
}

namespace {

struct Decimal {
  std::uint8_t len;
  char digits[3];
};

constexpr std::array<Decimal, 256> make_decimals() {
  std::array<Decimal, 256> t{};
  for (int v = 0; v < 256; ++v) {
    auto& d = t[v];
    if (v >= 100) d.digits[d.len++] = static_cast<char>('0' + v / 100);
    if (v >= 10) d.digits[d.len++] = static_cast<char>('0' + v / 10 % 10);
    d.digits[d.len++] = static_cast<char>('0' + v % 10);
  }
  return t;
}

constexpr auto kDecimals = make_decimals();

}  // namespace

std::string write_csv(const PixelMatrix& m) {
  // One separator per value except the very last.
  std::size_t size = m.pixel_count() ? m.pixel_count() - 1 : 0;
  for (auto v : m.data()) size += kDecimals[v].len;
  // Digits are copied three at a time, so leave slack for the last value.
  std::string out(size + 2, '\0');
  char* p = out.data();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    if (r) *p++ = '\n';
    auto row = m.row(r);
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) *p++ = ',';
      const auto& d = kDecimals[row[c]];
      std::memcpy(p, d.digits, 3);
      p += d.len;
    }
  }
  out.resize(size);
  return out;
}

namespace detail {

namespace {

class HeaderScanner {
 public:
  explicit HeaderScanner(ByteView in) : in_(in) {}

  unsigned long number(const char* what) {
    skip_space_and_comments();
    unsigned long v = 0;
    std::size_t digits = 0;
    while (pos_ < in_.size() && in_[pos_] >= '0' && in_[pos_] <= '9') {
      if (v > 100'000'000) fail(ErrorCode::UnsupportedFormat, std::string(what) + " too large");
      v = v * 10 + (in_[pos_++] - '0');
      ++digits;
    }
    if (digits == 0) {
      if (pos_ >= in_.size()) fail(ErrorCode::TruncatedInput, std::string("missing ") + what);
      fail(ErrorCode::MalformedToken, std::string("bad ") + what);
    }
    return v;
  }

  std::size_t& pos() { return pos_; }

 private:
  void skip_space_and_comments() {
    while (pos_ < in_.size()) {
      auto c = in_[pos_];
      if (c == '#') {
        while (pos_ < in_.size() && in_[pos_] != '\n') ++pos_;
      } else if (std::isspace(c)) {
        ++pos_;
      } else {
        break;
      }
    }
  }

  ByteView in_;
  std::size_t pos_ = 0;
};

}  // namespace

NetpbmImage read_netpbm(ByteView bytes, const char* kinds) {
  if (bytes.size() < 2 || bytes[0] != 'P' || !std::strchr(kinds, bytes[1]) || bytes[1] == '\0')
    fail(ErrorCode::UnsupportedFormat, "unrecognised magic number");
  NetpbmImage img{static_cast<char>(bytes[1]), 0, 0, 0, {}};
  HeaderScanner scan(bytes.subspan(2));
  img.width = scan.number("width");
  img.height = scan.number("height");
  img.maxval = static_cast<unsigned>(scan.number("maxval"));
  if (img.maxval == 0 || img.maxval > 255)
    fail(ErrorCode::UnsupportedFormat, "maxval " + std::to_string(img.maxval) + " outside 1..255");
  if (img.width == 0 || img.height == 0)
    fail(ErrorCode::InvalidDimensions, "zero-sized image");

  const std::size_t channels = (img.kind == '3' || img.kind == '6') ? 3 : 1;
  if (img.width * img.height > (std::size_t{1} << 32))
    fail(ErrorCode::UnsupportedFormat, "image too large");
  const std::size_t count = img.width * img.height * channels;
  std::size_t pos = scan.pos() + 2;

  if (img.kind == '5' || img.kind == '6') {
    // exactly one whitespace byte separates maxval from the raster
    if (pos >= bytes.size()) fail(ErrorCode::TruncatedInput, "missing raster");
    if (!std::isspace(bytes[pos])) fail(ErrorCode::MalformedToken, "no separator before raster");
    ++pos;
    if (bytes.size() - pos < count)
      fail(ErrorCode::TruncatedInput, "raster holds " + std::to_string(bytes.size() - pos) + " of " +
                                          std::to_string(count) + " samples");
    img.samples.assign(bytes.begin() + pos, bytes.begin() + pos + count);
  } else {
    HeaderScanner samples(bytes.subspan(pos));
    img.samples.reserve(std::min(count, bytes.size()));
    for (std::size_t i = 0; i < count; ++i) {
      auto v = samples.number("sample");
      if (v > img.maxval) fail(ErrorCode::ValueOutOfRange, "sample " + std::to_string(v) + " exceeds maxval");
      img.samples.push_back(static_cast<std::uint8_t>(v));
    }
  }
  for (auto s : img.samples)
    if (s > img.maxval) fail(ErrorCode::ValueOutOfRange, "sample " + std::to_string(s) + " exceeds maxval");
  return img;
}

}  // namespace detail

PixelMatrix parse_pgm(ByteView bytes) {
  auto img = detail::read_netpbm(bytes, "25");
  return PixelMatrix(img.height, img.width, std::move(img.samples));
}

Bytes write_pgm(const PixelMatrix& m) {
  std::string header = "P5\n" + std::to_string(m.cols()) + " " + std::to_string(m.rows()) + "\n255\n";
  Bytes out(header.begin(), header.end());
  out.insert(out.end(), m.data().begin(), m.data().end());
  return out;
}

}  // namespace livc
