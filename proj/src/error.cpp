#include "livc/error.hpp"

namespace livc {

std::string_view error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::EmptyInput: return "EmptyInput";
    case ErrorCode::RaggedRows: return "RaggedRows";
    case ErrorCode::ValueOutOfRange: return "ValueOutOfRange";
    case ErrorCode::MalformedToken: return "MalformedToken";
    case ErrorCode::UnsupportedFormat: return "UnsupportedFormat";
    case ErrorCode::TruncatedInput: return "TruncatedInput";
    case ErrorCode::InvalidDimensions: return "InvalidDimensions";
    case ErrorCode::UpscaleRequested: return "UpscaleRequested";
    case ErrorCode::BadMagic: return "BadMagic";
    case ErrorCode::UnsupportedVersion: return "UnsupportedVersion";
    case ErrorCode::UnknownCodec: return "UnknownCodec";
    case ErrorCode::PayloadLengthMismatch: return "PayloadLengthMismatch";
    case ErrorCode::CorruptTable: return "CorruptTable";
    case ErrorCode::TruncatedBitstream: return "TruncatedBitstream";
    case ErrorCode::BadOffset: return "BadOffset";
    case ErrorCode::TruncatedToken: return "TruncatedToken";
    case ErrorCode::BadIndex: return "BadIndex";
    case ErrorCode::EmptyBlock: return "EmptyBlock";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::MeasurementUnavailable: return "MeasurementUnavailable";
    case ErrorCode::ZeroOutput: return "ZeroOutput";
    case ErrorCode::DegenerateSamples: return "DegenerateSamples";
    case ErrorCode::EmptyCorpus: return "EmptyCorpus";
    case ErrorCode::RoundTripMismatch: return "RoundTripMismatch";
    case ErrorCode::DuplicateId: return "DuplicateId";
    case ErrorCode::EmptyList: return "EmptyList";
    case ErrorCode::MissingRoot: return "MissingRoot";
    case ErrorCode::IoError: return "IoError";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& detail)
    : std::runtime_error(std::string(error_code_name(code)) + ": " + detail),
      code_(code),
      detail_(detail) {}

void fail(ErrorCode code, const std::string& detail) { throw Error(code, detail); }

}  // namespace livc
