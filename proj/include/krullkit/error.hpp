#pragma once

#include <stdexcept>
#include <string>

namespace krullkit {

enum class ErrorCode {
  Parse,
  MalformedInput,
  MalformedSegment,
  ZeroElement,
  TooLarge,
  EmptySubset,
  UnsupportedCarrier,
  FiniteCardinal,
  InconsistentTable,
  UnsupportedDescriptor,
  IncompatibleCuts,
  Overflow,
};

const char* to_string(ErrorCode code) noexcept;

// Every failure raised by the library carries one of the codes above so the
// CLI can map it onto an exit status.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] void fail(ErrorCode code, const std::string& message);

}  // namespace krullkit
