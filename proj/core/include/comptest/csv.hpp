#ifndef COMPTEST_CSV_HPP
#define COMPTEST_CSV_HPP

#include <string>
#include <string_view>
#include <vector>

namespace comptest {

/// Separators of a spreadsheet CSV export. The defaults match a
/// decimal-comma locale, which is why fields are split on `;`.
struct CsvDialect {
  char field_separator = ';';
  char decimal_separator = ',';

  /// Throws comptest::Error when the separators collide or are unusable.
  void validate() const;

  static CsvDialect dot_decimal() { return CsvDialect{',', '.'}; }

  friend bool operator==(const CsvDialect&, const CsvDialect&) = default;
};

using CsvRecord = std::vector<std::string>;

/// Splits CSV text into records. Double-quoted fields may contain the
/// separator, newlines and doubled quotes. A UTF-8 BOM and CRLF line ends
/// are accepted. Blank lines become a record with one empty field so that
/// record numbers stay aligned with spreadsheet rows.
std::vector<CsvRecord> read_csv(std::string_view text, char separator);

std::string write_csv(const std::vector<CsvRecord>& records, char separator);

}  // namespace comptest

#endif  // COMPTEST_CSV_HPP
