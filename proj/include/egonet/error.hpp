#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace egonet {

enum class ErrorCode {
  FatalFormat,
  InvalidEvent,
  InvalidArgument,
  EmptyInput,
  ZeroSpan,
  TooFewDistinct,
  EmptyNetwork,
  DegenerateNetwork,
  InsufficientSample,
  UndefinedC,
  SpanTooShort,
  Underdetermined,
  DegenerateDesign,
  InvalidConfig,
};

std::string_view to_string(ErrorCode code);

// All library failures surface as this type; code() is the machine-readable kind.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace egonet
