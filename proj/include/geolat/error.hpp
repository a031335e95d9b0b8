#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace geolat {

enum class ErrorKind {
  Validation,
  DuplicateLabel,
  UnknownPoint,
  NotAFlat,
  TrivialCut,
  NotUpwardClosed,
  NotModularClosed,
  TooLarge,
  BadBase,
  InvalidConstruction,
  IndexOutOfRange,
  NotClosed,
  InadmissiblePermutation,
  Overlap,
  WitnessMismatch,
  NotASubgeometry,
  BadOrdering,
  NotAWitness,
  InvalidCanonicalData,
  Rank,
  NotStrong,
  PreconditionFailed,
  Internal,
  Parse,
  UnknownName,
};

const char* kind_name(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(kind_name(kind)) + ": " + message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& message)
      : Error(ErrorKind::Parse, "line " + std::to_string(line) + ", column " +
                                    std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

// Carries the step position that broke admissibility.
class InadmissiblePermutationError : public Error {
 public:
  InadmissiblePermutationError(std::size_t position, const std::string& message)
      : Error(ErrorKind::InadmissiblePermutation, message), position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace geolat
