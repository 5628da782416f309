#pragma once

#include <stdexcept>
#include <string>

namespace fieldevo {

/// Base class for every data error raised by the library. The CLI maps these
/// to exit status 1.
class DataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Unusable input file layout (missing or duplicated header column).
class FormatError : public DataError {
 public:
  using DataError::DataError;
};

/// A record-level parse failure escalated by strict mode.
class RecordError : public DataError {
 public:
  RecordError(std::size_t line, const std::string& message)
      : DataError("line " + std::to_string(line) + ": " + message), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// A year bucket without any keyword occurrence.
class EmptyVocabulary : public DataError {
 public:
  using DataError::DataError;
};

/// Kulczynski denominator vanished (disjoint supports).
class DivisionByZero : public DataError {
 public:
  using DataError::DataError;
};

class ZeroVarianceColumn : public DataError {
 public:
  ZeroVarianceColumn(int column, const std::string& name)
      : DataError("zero variance in column " + name), column_(column) {}
  int column() const { return column_; }

 private:
  int column_;
};

class ConvergenceFailure : public DataError {
 public:
  using DataError::DataError;
};

/// An evolution window not fully covered by the series.
class MissingPair : public DataError {
 public:
  using DataError::DataError;
};

}  // namespace fieldevo
