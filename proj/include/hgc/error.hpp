#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace hgc {

enum class ErrorKind {
  EmptySource,
  EmptyRange,
  UnknownVertex,
  UnknownEdge,
  DuplicateId,
  InvalidId,
  InfiniteUnsupported,
  BadPartition,
  SourceMismatch,
  RangesOverlap,
  NotASource,
  EmitsNotOne,
  MultipleEmitters,
  RangeNotSingleton,
  SourceNotSingleton,
  IsSink,
  IsSourceVertex,
  EmptyRestriction,
  HypergraphMismatch,
  NotQuasiPerfect,
  InvalidSpanElement,
  BudgetExceeded,
  DimensionMismatch,
  HasCycle,
  NotAGraph,
  PreconditionFailed,
  SyntaxError,
  InvariantBreach,
};

inline std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::EmptySource: return "EmptySource";
    case ErrorKind::EmptyRange: return "EmptyRange";
    case ErrorKind::UnknownVertex: return "UnknownVertex";
    case ErrorKind::UnknownEdge: return "UnknownEdge";
    case ErrorKind::DuplicateId: return "DuplicateId";
    case ErrorKind::InvalidId: return "InvalidId";
    case ErrorKind::InfiniteUnsupported: return "InfiniteUnsupported";
    case ErrorKind::BadPartition: return "BadPartition";
    case ErrorKind::SourceMismatch: return "SourceMismatch";
    case ErrorKind::RangesOverlap: return "RangesOverlap";
    case ErrorKind::NotASource: return "NotASource";
    case ErrorKind::EmitsNotOne: return "EmitsNotOne";
    case ErrorKind::MultipleEmitters: return "MultipleEmitters";
    case ErrorKind::RangeNotSingleton: return "RangeNotSingleton";
    case ErrorKind::SourceNotSingleton: return "SourceNotSingleton";
    case ErrorKind::IsSink: return "IsSink";
    case ErrorKind::IsSourceVertex: return "IsSourceVertex";
    case ErrorKind::EmptyRestriction: return "EmptyRestriction";
    case ErrorKind::HypergraphMismatch: return "HypergraphMismatch";
    case ErrorKind::NotQuasiPerfect: return "NotQuasiPerfect";
    case ErrorKind::InvalidSpanElement: return "InvalidSpanElement";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::HasCycle: return "HasCycle";
    case ErrorKind::NotAGraph: return "NotAGraph";
    case ErrorKind::PreconditionFailed: return "PreconditionFailed";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::InvariantBreach: return "InvariantBreach";
  }
  return "Unknown";
}

/// Every failure raised by the library. `kind()` is stable and machine
/// readable; `what()` carries the human readable detail.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t line, std::size_t column, std::string expected,
              const std::string& found)
      : Error(ErrorKind::SyntaxError,
              "line " + std::to_string(line) + ", column " +
                  std::to_string(column) + ": expected " + expected +
                  ", found " + found),
        line_(line),
        column_(column),
        expected_(std::move(expected)) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }
  const std::string& expected() const noexcept { return expected_; }

 private:
  std::size_t line_;
  std::size_t column_;
  std::string expected_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) {
  throw Error(kind, message);
}

}  // namespace hgc
