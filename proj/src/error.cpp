#include "krullkit/error.hpp"

namespace krullkit {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::Parse: return "ParseError";
    case ErrorCode::MalformedInput: return "MalformedInput";
    case ErrorCode::MalformedSegment: return "MalformedSegment";
    case ErrorCode::ZeroElement: return "ZeroElement";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::EmptySubset: return "EmptySubset";
    case ErrorCode::UnsupportedCarrier: return "UnsupportedCarrier";
    case ErrorCode::FiniteCardinal: return "FiniteCardinal";
    case ErrorCode::InconsistentTable: return "InconsistentTable";
    case ErrorCode::UnsupportedDescriptor: return "UnsupportedDescriptor";
    case ErrorCode::IncompatibleCuts: return "IncompatibleCuts";
    case ErrorCode::Overflow: return "Overflow";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

void fail(ErrorCode code, const std::string& message) { throw Error(code, message); }

}  // namespace krullkit
