#pragma once

#include <stdexcept>
#include <string>

namespace mcat {

enum class ErrorCode {
  invalid_argument,
  not_irreducible,
  singular_system,
  internal,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Raised by Word::parse; carries the index of the first offending character.
class WordParseError : public Error {
 public:
  WordParseError(std::size_t position, const std::string& message)
      : Error(ErrorCode::invalid_argument, message), position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace mcat
