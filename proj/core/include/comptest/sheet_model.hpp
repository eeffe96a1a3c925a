#ifndef COMPTEST_SHEET_MODEL_HPP
#define COMPTEST_SHEET_MODEL_HPP

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "comptest/numeric.hpp"

namespace comptest {

/// The `INF` cell value: an open circuit. Kept distinct from floating-point
/// infinity so it serializes back to the same text.
struct OpenCircuit {
  friend bool operator==(OpenCircuit, OpenCircuit) = default;
};

/// A bit-literal payload such as `0001B`, stored verbatim.
struct BitLiteral {
  std::string text;
  friend bool operator==(const BitLiteral&, const BitLiteral&) = default;
};

/// Contents of a value cell in the status table (nom, D1-D3).
using CellValue = std::variant<double, OpenCircuit, BitLiteral>;

bool is_bit_literal(std::string_view text);

enum class Direction { input, output };

std::string_view to_string(Direction d);
std::optional<Direction> parse_direction(std::string_view text);

/// Stimulus methods start with `put_`, measurements with `get_`.
enum class MethodClass { put, get, unknown };

MethodClass method_class(std::string_view method);

struct SignalDef {
  std::string name;
  Direction direction = Direction::input;
  std::vector<std::string> pins;
  std::string initial_status;
  int row = 0;  // CSV record number, header is row 1

  friend bool operator==(const SignalDef&, const SignalDef&) = default;
};

struct SignalTable {
  std::vector<SignalDef> rows;

  const SignalDef* find(std::string_view name) const;
  friend bool operator==(const SignalTable&, const SignalTable&) = default;
};

/// One row of the status table: a named, parameterized method invocation.
/// When `var_x` is set, nom/min/max are multipliers of that variable.
struct StatusDef {
  std::string status;
  std::string method;    // normalized, e.g. "get_u"
  std::string attribut;  // parameter the method targets, e.g. "u"
  std::optional<std::string> var_x;
  std::optional<CellValue> nom;
  std::optional<double> min;
  std::optional<double> max;
  std::optional<CellValue> d1;
  std::optional<CellValue> d2;
  std::optional<CellValue> d3;
  std::optional<std::string> unit;
  int row = 0;

  friend bool operator==(const StatusDef&, const StatusDef&) = default;
};

struct StatusTable {
  std::vector<StatusDef> rows;

  const StatusDef* find(std::string_view status) const;
  friend bool operator==(const StatusTable&, const StatusTable&) = default;
};

struct Assignment {
  std::string signal;
  std::string status;
  friend bool operator==(const Assignment&, const Assignment&) = default;
};

/// A step of the sparse test table. Absent signals hold their previous
/// stimulus (inputs) or are not checked (outputs).
struct TestStep {
  std::size_t index = 0;
  Duration dt{};
  std::vector<Assignment> assignments;  // sheet column order
  std::optional<std::string> remark;
  int row = 0;

  friend bool operator==(const TestStep&, const TestStep&) = default;
};

struct TestSequence {
  std::string name;
  std::vector<std::string> signal_columns;  // header order
  std::vector<TestStep> steps;

  friend bool operator==(const TestSequence&, const TestSequence&) = default;
};

enum class SheetKind { signals, statuses, test };

std::string_view to_string(SheetKind kind);

struct Violation {
  SheetKind sheet = SheetKind::test;
  int row = 0;
  std::string column;
  std::string code;  // stable short identifier, e.g. "unknown status"
  std::string message;

  friend bool operator==(const Violation&, const Violation&) = default;
};

using ValidationReport = std::vector<Violation>;

std::string to_string(const Violation& v);

/// Cross-reference closure over the three sheets. Violations are data; the
/// report is empty iff the sheets can be compiled.
ValidationReport validate_sheets(const SignalTable& signals,
                                 const StatusTable& statuses,
                                 const TestSequence& test);

struct DenseStep {
  std::size_t index = 0;
  Duration dt{};
  std::vector<Assignment> stimuli;  // every input signal, signal-table order
  std::vector<Assignment> checks;   // explicit output assignments only
  std::optional<std::string> remark;

  friend bool operator==(const DenseStep&, const DenseStep&) = default;
};

struct DenseSequence {
  std::string name;
  std::vector<DenseStep> steps;

  friend bool operator==(const DenseSequence&, const DenseSequence&) = default;
};

/// Carry-forward of input statuses seeded by each signal's initial status.
/// Output cells are kept only where explicitly present.
DenseSequence expand_holds(const TestSequence& test,
                           const SignalTable& signals);

/// A fully populated sparse sequence equivalent to `dense`. Expanding the
/// result again yields `dense`.
TestSequence to_sequence(const DenseSequence& dense,
                         const SignalTable& signals);

}  // namespace comptest

#endif  // COMPTEST_SHEET_MODEL_HPP
