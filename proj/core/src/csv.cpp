#include "comptest/csv.hpp"

#include "comptest/error.hpp"

namespace comptest {

void CsvDialect::validate() const {
  if (field_separator == decimal_separator) {
    throw Error("field and decimal separators must differ");
  }
  if (decimal_separator != ',' && decimal_separator != '.') {
    throw Error(std::string("unsupported decimal separator '") +
                decimal_separator + "'");
  }
  if (field_separator == '"' || field_separator == '\n' ||
      field_separator == '\r') {
    throw Error("unusable field separator");
  }
}

std::vector<CsvRecord> read_csv(std::string_view text, char separator) {
  if (text.starts_with("\xEF\xBB\xBF")) text.remove_prefix(3);

  std::vector<CsvRecord> records;
  CsvRecord record;
  std::string field;
  bool quoted = false;
  bool field_was_quoted = false;
  int line = 1;

  auto end_record = [&] {
    record.push_back(std::move(field));
    field.clear();
    field_was_quoted = false;
    records.push_back(std::move(record));
    record.clear();
  };

  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < text.size() && text[i + 1] == '"') {
          field += '"';
          ++i;
        } else {
          quoted = false;
        }
      } else {
        if (c == '\n') ++line;
        field += c;
      }
      continue;
    }
    if (c == '"' && field.empty() && !field_was_quoted) {
      quoted = true;
      field_was_quoted = true;
    } else if (c == separator) {
      record.push_back(std::move(field));
      field.clear();
      field_was_quoted = false;
    } else if (c == '\r' && i + 1 < text.size() && text[i + 1] == '\n') {
      continue;
    } else if (c == '\n') {
      end_record();
      ++line;
    } else {
      field += c;
    }
  }
  if (quoted) {
    throw SheetError("csv", static_cast<int>(records.size()) + 1, "",
                     "unterminated quoted field (line " +
                         std::to_string(line) + ")");
  }
  if (!field.empty() || !record.empty() || field_was_quoted) end_record();
  return records;
}

namespace {

bool needs_quotes(const std::string& field, char separator) {
  if (field.empty()) return false;
  if (field.front() == ' ' || field.back() == ' ') return true;
  return field.find_first_of(std::string{separator, '"', '\n', '\r'}) !=
         std::string::npos;
}

}  // namespace

std::string write_csv(const std::vector<CsvRecord>& records, char separator) {
  std::string out;
  for (const CsvRecord& record : records) {
    for (std::size_t i = 0; i < record.size(); ++i) {
      if (i != 0) out += separator;
      const std::string& f = record[i];
      if (needs_quotes(f, separator)) {
        out += '"';
        for (char c : f) {
          if (c == '"') out += '"';
          out += c;
        }
        out += '"';
      } else {
        out += f;
      }
    }
    out += '\n';
  }
  return out;
}

}  // namespace comptest
