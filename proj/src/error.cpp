#include "egonet/error.hpp"

namespace egonet {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::FatalFormat: return "FatalFormat";
    case ErrorCode::InvalidEvent: return "InvalidEvent";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::EmptyInput: return "EmptyInput";
    case ErrorCode::ZeroSpan: return "ZeroSpan";
    case ErrorCode::TooFewDistinct: return "TooFewDistinct";
    case ErrorCode::EmptyNetwork: return "EmptyNetwork";
    case ErrorCode::DegenerateNetwork: return "DegenerateNetwork";
    case ErrorCode::InsufficientSample: return "InsufficientSample";
    case ErrorCode::UndefinedC: return "UndefinedC";
    case ErrorCode::SpanTooShort: return "SpanTooShort";
    case ErrorCode::Underdetermined: return "Underdetermined";
    case ErrorCode::DegenerateDesign: return "DegenerateDesign";
    case ErrorCode::InvalidConfig: return "InvalidConfig";
  }
  return "Unknown";
}

}  // namespace egonet
