#pragma once

#include <stdexcept>
#include <string>

namespace twistkit {

/// Base class for all toolkit errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Two objects live on different charts, or an identifier is not a
/// coordinate of the chart in use.  The message names the offender.
class ChartMismatch : public Error {
 public:
  explicit ChartMismatch(const std::string& what) : Error(what) {}
};

/// Expression text could not be parsed; carries 1-based line/column.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, int line, int column)
      : Error(what + " (line " + std::to_string(line) + ", column " +
              std::to_string(column) + ")"),
        line_(line),
        column_(column) {}
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

/// A 2-form whose coefficient matrix is singular cannot be inverted.
class DegenerateForm : public Error {
 public:
  explicit DegenerateForm(const std::string& what) : Error(what) {}
};

/// Inversion is only supported when the determinant of the coefficient
/// matrix is a nonzero constant; anything else would need rational
/// function coefficients.
class UnsupportedInversion : public Error {
 public:
  explicit UnsupportedInversion(const std::string& what) : Error(what) {}
};

/// A verification stage failed; carries the name of the stage.
class CheckFailed : public Error {
 public:
  CheckFailed(const std::string& stage, const std::string& what)
      : Error("check failed at stage '" + stage + "': " + what), stage_(stage) {}
  const std::string& stage() const { return stage_; }

 private:
  std::string stage_;
};

}  // namespace twistkit
