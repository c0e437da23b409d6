#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace fatlie {

enum class ErrorCode {
  InvalidArgument,
  Io,
  Parse,
  NotZeroDimensional,
  NonMinimalPresentation,
  ConstantUnitIdeal,
  DimensionBound,
  OracleMismatch,
  Internal,
};

const char* error_code_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Syntax or unknown-identifier error; `position` is a 0-based byte offset.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(ErrorCode::Parse, what), position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// Hilbert values c_0, c_1, ... never stabilized below the degree cap.
class NotZeroDimensional : public Error {
 public:
  NotZeroDimensional(const std::string& what, std::vector<std::size_t> hilbert)
      : Error(ErrorCode::NotZeroDimensional, what), hilbert_(std::move(hilbert)) {}
  const std::vector<std::size_t>& hilbert_sequence() const noexcept { return hilbert_; }

 private:
  std::vector<std::size_t> hilbert_;
};

}  // namespace fatlie
