#include "bvl/error.hpp"

namespace bvl {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::Parse: return "parse";
    case ErrorCode::SizeGuard: return "size-guard";
    case ErrorCode::Precondition: return "precondition";
    case ErrorCode::Invalid: return "invalid";
    case ErrorCode::AlgebraMismatch: return "algebra-mismatch";
    case ErrorCode::Io: return "io";
  }
  return "unknown";
}

void fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace bvl
