#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace bvl {

enum class ErrorCode {
  Parse,
  SizeGuard,
  Precondition,
  Invalid,
  AlgebraMismatch,
  Io,
};

std::string_view to_string(ErrorCode code);

/// Every failure raised by the library carries a machine-readable code.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] void fail(ErrorCode code, const std::string& message);

inline void require_size(bool ok, const std::string& message) {
  if (!ok) fail(ErrorCode::SizeGuard, message);
}

}  // namespace bvl
