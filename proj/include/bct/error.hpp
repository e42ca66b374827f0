#pragma once

#include <stdexcept>
#include <string>

namespace bct {

enum class Errc {
  MarginMismatch,
  ColumnExceedsRows,
  WrongSubsetSize,
  InsufficientActiveRows,
  TooLarge,
  StateSpaceExceeded,
  DeadState,
  RateDegenerate,
  ParseError,
  GenerationExhausted,
  Overflow,
};

const char* to_string(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

  Errc code() const { return code_; }

 private:
  Errc code_;
};

}  // namespace bct
