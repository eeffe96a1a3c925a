#ifndef COMPTEST_ERROR_HPP
#define COMPTEST_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace comptest {

/// Base of every exception thrown by the toolchain.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A malformed sheet cell or structure. `row` is the 1-based CSV record
/// number (the header is row 1); `column` is the header name of the cell,
/// empty when the error concerns the whole row.
class SheetError : public Error {
 public:
  SheetError(std::string sheet, int row, std::string column,
             const std::string& message)
      : Error(sheet + ": row " + std::to_string(row) +
              (column.empty() ? std::string{} : ", column " + column) + ": " +
              message),
        sheet_(std::move(sheet)),
        row_(row),
        column_(std::move(column)) {}

  const std::string& sheet() const noexcept { return sheet_; }
  int row() const noexcept { return row_; }
  const std::string& column() const noexcept { return column_; }

 private:
  std::string sheet_;
  int row_;
  std::string column_;
};

/// Syntax error in an arithmetic expression; `offset` is a 0-based byte
/// position into the parsed text.
class ExprSyntaxError : public Error {
 public:
  ExprSyntaxError(std::size_t offset, const std::string& message)
      : Error("expression error at offset " + std::to_string(offset) + ": " +
              message),
        offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

/// Evaluation failure: unbound variable or division by zero.
class EvalError : public Error {
 public:
  using Error::Error;
};

/// Schema or syntax violation in an XML test script.
class LoadError : public Error {
 public:
  LoadError(long line, const std::string& message)
      : Error("script line " + std::to_string(line) + ": " + message),
        line_(line) {}

  long line() const noexcept { return line_; }

 private:
  long line_;
};

}  // namespace comptest

#endif  // COMPTEST_ERROR_HPP
