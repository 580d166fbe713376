#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace livc {

enum class ErrorCode {
  // pixel-matrix / dataset input
  EmptyInput,
  RaggedRows,
  ValueOutOfRange,
  MalformedToken,
  UnsupportedFormat,
  TruncatedInput,
  InvalidDimensions,
  // lossy codec
  UpscaleRequested,
  // framing and lossless codecs
  BadMagic,
  UnsupportedVersion,
  UnknownCodec,
  PayloadLengthMismatch,
  CorruptTable,
  TruncatedBitstream,
  BadOffset,
  TruncatedToken,
  BadIndex,
  EmptyBlock,
  IndexOutOfRange,
  InvalidArgument,
  // bench harness
  MeasurementUnavailable,
  ZeroOutput,
  DegenerateSamples,
  EmptyCorpus,
  RoundTripMismatch,
  // dataset pipeline
  DuplicateId,
  EmptyList,
  MissingRoot,
  IoError,
};

std::string_view error_code_name(ErrorCode code) noexcept;

// Every failure raised by the library. what() is "<CodeName>: <detail>" so the
// code survives being flattened into a one-line diagnostic.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail);

  ErrorCode code() const noexcept { return code_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorCode code_;
  std::string detail_;
};

[[noreturn]] void fail(ErrorCode code, const std::string& detail);

}  // namespace livc
