#pragma once

#include <stdexcept>
#include <string>

namespace cwb {

enum class ErrorCode {
  ShapeMismatch,
  IndexOutOfRange,
  GenericityViolation,
  FaithfulnessViolation,
  ConfigTooSmall,
  NonScalar,
  SingularChangeOfBasis,
  BoundExceeded,
  NotInFamilySpan,
  MatrixMismatch,
  ConfigParse,
};

const char* error_name(ErrorCode c);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode c, const std::string& msg)
      : std::runtime_error(std::string(error_name(c)) + ": " + msg), code_(c) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace cwb
