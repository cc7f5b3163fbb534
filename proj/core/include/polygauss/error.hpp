#pragma once

#include <stdexcept>
#include <string>

namespace polygauss {

enum class ErrorCode {
  // Caller supplied something outside an operation's domain.
  DegenerateInput,
  UnsupportedDimension,
  DimensionMismatch,
  DegenerateCone,
  DegenerateTetrahedron,
  NotAnEdge,
  NotATetrahedron,
  NotALatticePolytope,
  EvenModulus,
  EvenInput,
  VolumeNotMinimal,
  MalformedInput,
  // Internal invariant broken; always a bug.
  UndefinedCase,
  InvariantViolation,
};

const char* to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

  bool is_internal() const noexcept {
    return code_ == ErrorCode::UndefinedCase || code_ == ErrorCode::InvariantViolation;
  }

 private:
  ErrorCode code_;
};

}  // namespace polygauss
