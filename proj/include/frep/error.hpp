#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace frep {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed presentation text; carries a 1-based source position.
struct ParseError : Error {
  ParseError(std::size_t line, std::size_t col, const std::string& what)
      : Error("parse error at " + std::to_string(line) + ":" + std::to_string(col) + ": " + what),
        line(line),
        col(col) {}
  std::size_t line = 0;
  std::size_t col = 0;
};

// An evaluation would materialize more matrix rows than the configured cap.
struct CapExceeded : Error {
  using Error::Error;
};

// A resolution or report failed an exactness/consistency check.
struct VerifyFailure : Error {
  using Error::Error;
};

struct InvalidArgument : Error {
  using Error::Error;
};

// A theory-guaranteed assertion failed; indicates a bug, not bad input.
struct InternalError : Error {
  using Error::Error;
};

}  // namespace frep
