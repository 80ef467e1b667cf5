#pragma once

#include <stdexcept>
#include <string>

namespace simonls {

enum class ErrorCode {
  kInvalidArgument = 1,
  kDimensionMismatch = 2,
  kCapExceeded = 3,
  kParse = 4,
  kRetryExhausted = 5,
  kInternal = 6,
  kIo = 7,
};

// All library failures are reported through this exception; the C API maps
// code() onto its status enum.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

}  // namespace simonls
