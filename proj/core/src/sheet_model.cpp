#include "comptest/sheet_model.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>

namespace comptest {

bool is_bit_literal(std::string_view text) {
  if (text.size() < 2 || text.back() != 'B') return false;
  return std::all_of(text.begin(), text.end() - 1,
                     [](char c) { return c == '0' || c == '1'; });
}

std::string_view to_string(Direction d) {
  return d == Direction::input ? "input" : "output";
}

std::optional<Direction> parse_direction(std::string_view text) {
  std::string lower(text);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  if (lower == "input" || lower == "in") return Direction::input;
  if (lower == "output" || lower == "out") return Direction::output;
  return std::nullopt;
}

MethodClass method_class(std::string_view method) {
  if (method.starts_with("put_")) return MethodClass::put;
  if (method.starts_with("get_")) return MethodClass::get;
  return MethodClass::unknown;
}

const SignalDef* SignalTable::find(std::string_view name) const {
  auto it = std::find_if(rows.begin(), rows.end(),
                         [&](const SignalDef& s) { return s.name == name; });
  return it == rows.end() ? nullptr : &*it;
}

const StatusDef* StatusTable::find(std::string_view status) const {
  auto it = std::find_if(rows.begin(), rows.end(), [&](const StatusDef& s) {
    return s.status == status;
  });
  return it == rows.end() ? nullptr : &*it;
}

std::string_view to_string(SheetKind kind) {
  switch (kind) {
    case SheetKind::signals:
      return "signals";
    case SheetKind::statuses:
      return "statuses";
    case SheetKind::test:
      return "test";
  }
  return "?";
}

std::string to_string(const Violation& v) {
  std::string out(to_string(v.sheet));
  out += ": row " + std::to_string(v.row);
  if (!v.column.empty()) out += ", column " + v.column;
  out += ": " + v.code;
  if (!v.message.empty()) out += " (" + v.message + ")";
  return out;
}

namespace {

bool has_whitespace(std::string_view s) {
  return std::any_of(s.begin(), s.end(),
                     [](unsigned char c) { return std::isspace(c); });
}

class Collector {
 public:
  void add(SheetKind sheet, int row, std::string column, std::string code,
           std::string message) {
    report_.push_back(Violation{sheet, row, std::move(column), std::move(code),
                                std::move(message)});
  }
  ValidationReport take() { return std::move(report_); }

 private:
  ValidationReport report_;
};

// Checks that `status` resolves and that its method class fits the
// direction of the signal it is assigned to.
void check_assignment(Collector& out, SheetKind sheet, int row,
                      const std::string& column, const SignalDef& signal,
                      const std::string& status, const StatusTable& statuses) {
  const StatusDef* def = statuses.find(status);
  if (def == nullptr) {
    out.add(sheet, row, column, "unknown status",
            "'" + status + "' is not defined in the status table");
    return;
  }
  const MethodClass cls = method_class(def->method);
  const MethodClass expected =
      signal.direction == Direction::input ? MethodClass::put : MethodClass::get;
  if (cls != expected) {
    out.add(sheet, row, column, "direction/method mismatch",
            "status '" + status + "' uses " + def->method + " but signal " +
                signal.name + " is an " +
                std::string(to_string(signal.direction)));
  }
}

void validate_signals(Collector& out, const SignalTable& signals,
                      const StatusTable& statuses) {
  std::set<std::string, std::less<>> names;
  std::map<std::string, std::string, std::less<>> pin_owner;
  for (const SignalDef& s : signals.rows) {
    if (s.name.empty() || has_whitespace(s.name)) {
      out.add(SheetKind::signals, s.row, "name", "invalid name",
              "'" + s.name + "'");
    } else if (!names.insert(s.name).second) {
      out.add(SheetKind::signals, s.row, "name", "duplicate signal", s.name);
    }
    if (s.pins.empty()) {
      out.add(SheetKind::signals, s.row, "pins", "no pins", s.name);
    }
    for (const std::string& pin : s.pins) {
      auto [it, inserted] = pin_owner.emplace(pin, s.name);
      if (!inserted) {
        out.add(SheetKind::signals, s.row, "pins", "duplicate pin",
                pin + " already belongs to " + it->second);
      }
    }
    check_assignment(out, SheetKind::signals, s.row, "initial_status", s,
                     s.initial_status, statuses);
  }
}

void validate_statuses(Collector& out, const StatusTable& statuses) {
  std::set<std::string, std::less<>> names;
  for (const StatusDef& s : statuses.rows) {
    if (s.status.empty() || has_whitespace(s.status)) {
      out.add(SheetKind::statuses, s.row, "status", "invalid name",
              "'" + s.status + "'");
    } else if (!names.insert(s.status).second) {
      out.add(SheetKind::statuses, s.row, "status", "duplicate status",
              s.status);
    }
    switch (method_class(s.method)) {
      case MethodClass::get:
        if (!s.min && !s.max) {
          out.add(SheetKind::statuses, s.row, "min", "missing bound",
                  s.status + " measures with " + s.method +
                      " but defines neither min nor max");
        }
        break;
      case MethodClass::put:
        if (!s.nom && !s.d1 && !s.d2 && !s.d3) {
          out.add(SheetKind::statuses, s.row, "nom", "missing value",
                  s.status + " stimulates with " + s.method +
                      " but defines neither nom nor D1-D3");
        }
        break;
      case MethodClass::unknown:
        out.add(SheetKind::statuses, s.row, "method", "unknown method class",
                "'" + s.method + "' is neither put_* nor get_*");
        break;
    }
  }
}

void validate_test(Collector& out, const TestSequence& test,
                   const SignalTable& signals, const StatusTable& statuses) {
  if (test.steps.empty()) {
    out.add(SheetKind::test, 1, "", "empty test", "no steps defined");
  }
  for (std::size_t i = 0; i < test.steps.size(); ++i) {
    const TestStep& step = test.steps[i];
    if (step.index != i) {
      out.add(SheetKind::test, step.row, "test step",
              "non-consecutive step index",
              "expected " + std::to_string(i) + ", found " +
                  std::to_string(step.index));
    }
    if (step.dt <= Duration::zero()) {
      out.add(SheetKind::test, step.row, "dt", "non-positive dt",
              format_seconds(step.dt));
    }
    for (const Assignment& a : step.assignments) {
      const SignalDef* signal = signals.find(a.signal);
      if (signal == nullptr) {
        out.add(SheetKind::test, step.row, a.signal, "unknown signal",
                "'" + a.signal + "' is not defined in the signal table");
        continue;
      }
      check_assignment(out, SheetKind::test, step.row, a.signal, *signal,
                       a.status, statuses);
    }
  }
}

}  // namespace

ValidationReport validate_sheets(const SignalTable& signals,
                                 const StatusTable& statuses,
                                 const TestSequence& test) {
  Collector out;
  validate_signals(out, signals, statuses);
  validate_statuses(out, statuses);
  validate_test(out, test, signals, statuses);
  return out.take();
}

DenseSequence expand_holds(const TestSequence& test,
                           const SignalTable& signals) {
  std::vector<const SignalDef*> inputs;
  std::map<std::string, std::string, std::less<>> held;
  for (const SignalDef& s : signals.rows) {
    if (s.direction == Direction::input) {
      inputs.push_back(&s);
      held[s.name] = s.initial_status;
    }
  }

  DenseSequence dense{test.name, {}};
  dense.steps.reserve(test.steps.size());
  for (const TestStep& step : test.steps) {
    DenseStep row{step.index, step.dt, {}, {}, step.remark};
    for (const Assignment& a : step.assignments) {
      const SignalDef* signal = signals.find(a.signal);
      if (signal == nullptr) continue;
      if (signal->direction == Direction::input) {
        held[a.signal] = a.status;
      } else {
        row.checks.push_back(a);
      }
    }
    row.stimuli.reserve(inputs.size());
    for (const SignalDef* s : inputs) {
      row.stimuli.push_back(Assignment{s->name, held[s->name]});
    }
    dense.steps.push_back(std::move(row));
  }
  return dense;
}

TestSequence to_sequence(const DenseSequence& dense,
                         const SignalTable& signals) {
  TestSequence seq{dense.name, {}, {}};
  for (const SignalDef& s : signals.rows) seq.signal_columns.push_back(s.name);
  for (const DenseStep& d : dense.steps) {
    TestStep step{d.index, d.dt, d.stimuli, d.remark, 0};
    step.assignments.insert(step.assignments.end(), d.checks.begin(),
                            d.checks.end());
    seq.steps.push_back(std::move(step));
  }
  return seq;
}

}  // namespace comptest
