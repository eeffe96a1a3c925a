#ifndef COMPTEST_INGEST_HPP
#define COMPTEST_INGEST_HPP

#include <string>
#include <string_view>

#include "comptest/csv.hpp"
#include "comptest/expr.hpp"
#include "comptest/sheet_model.hpp"
#include "comptest/stand.hpp"

namespace comptest {

// Sheet parsers. Each throws SheetError with (row, column) coordinates on
// malformed input. Header names are matched case-insensitively, ignoring
// spaces, parentheses, dots and underscores ("var (x)" == "var_x").

/// Columns: status, method, attribut, var (x), nom, min, max, D 1, D 2, D 3
/// and an optional unit. Method cells are normalized ("put r" -> "put_r").
StatusTable parse_status_sheet(std::string_view text,
                               const CsvDialect& dialect = {});

/// Columns: step index, dt, one column per signal, optional trailing
/// "remarks". Empty cells produce no assignment.
TestSequence parse_test_sheet(std::string_view text,
                              const CsvDialect& dialect = {},
                              std::string name = "test");

/// Columns: name, direction, pins ('|'-separated), initial_status.
SignalTable parse_signal_sheet(std::string_view text,
                               const CsvDialect& dialect = {});

/// Columns: res, method, attribut, min, max, unit.
ResourceTable parse_resource_sheet(std::string_view text,
                                   const CsvDialect& dialect = {});

/// First row: an arbitrary corner label then pin names. Following rows: a
/// resource id then `SwG.P` / `MxG.P` cells; empty means not connected.
ConnectionMatrix parse_connection_sheet(std::string_view text,
                                        const CsvDialect& dialect = {});

/// `key=value` per line, '#' comments, decimal point numbers. Keys are
/// lowercased so they can be referenced from expressions.
Env parse_env_file(std::string_view text);

std::string serialize_status_sheet(const StatusTable& table,
                                   const CsvDialect& dialect = {});
std::string serialize_test_sheet(const TestSequence& test,
                                 const CsvDialect& dialect = {});
std::string serialize_signal_sheet(const SignalTable& table,
                                   const CsvDialect& dialect = {});
std::string serialize_resource_sheet(const ResourceTable& table,
                                     const CsvDialect& dialect = {});
std::string serialize_connection_sheet(const ConnectionMatrix& matrix,
                                       const CsvDialect& dialect = {});

/// "put r" / "Get U" -> "put_r" / "get_u".
std::string normalize_method(std::string_view text);

/// Parses `field=<c>,decimal=<c>` overrides on top of `base`. Values may be
/// a single character or one of: comma, dot, semicolon, tab, pipe.
CsvDialect parse_dialect_spec(std::string_view spec, CsvDialect base = {});

}  // namespace comptest

#endif  // COMPTEST_INGEST_HPP
