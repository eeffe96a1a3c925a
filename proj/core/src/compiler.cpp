#include "comptest/compiler.hpp"

#include <algorithm>
#include <cctype>
#include <map>

namespace comptest {

namespace {

std::string summarize(const ValidationReport& violations) {
  std::string msg = "cannot compile: " + std::to_string(violations.size()) +
                    " violation(s)";
  if (!violations.empty()) msg += "; first: " + to_string(violations.front());
  return msg;
}

std::string lowercase(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return out;
}

bool is_variable_name(std::string_view s) {
  if (s.empty() || !(std::islower(static_cast<unsigned char>(s[0])) ||
                     s[0] == '_')) {
    return false;
  }
  return std::all_of(s.begin(), s.end(), [](unsigned char c) {
    return std::islower(c) || std::isdigit(c) || c == '_';
  });
}

[[noreturn]] void reject(const StatusDef& s, std::string column,
                         std::string code, std::string message) {
  throw CompileError(ValidationReport{Violation{SheetKind::statuses, s.row,
                                                std::move(column),
                                                std::move(code),
                                                std::move(message)}});
}

ParamValue scaled(double factor, const std::optional<std::string>& var) {
  if (!var) return factor;
  return Expr::group(Expr::binary(Expr::Op::mul, Expr::constant(factor),
                                  Expr::variable(lowercase(*var))));
}

ParamValue cell_param(const CellValue& v, const std::optional<std::string>& var) {
  if (const double* d = std::get_if<double>(&v)) return scaled(*d, var);
  if (std::holds_alternative<OpenCircuit>(v)) return OpenCircuit{};
  return std::get<BitLiteral>(v).text;
}

}  // namespace

CompileError::CompileError(ValidationReport violations)
    : Error(summarize(violations)), violations_(std::move(violations)) {}

MethodInvocation lower_status(const StatusDef& s, Role role) {
  if (s.var_x && !is_variable_name(lowercase(*s.var_x))) {
    reject(s, "var (x)", "invalid variable",
           "'" + *s.var_x + "' is not a valid variable name");
  }
  const std::string attr = lowercase(s.attribut);
  MethodInvocation inv{s.method, {}};

  switch (method_class(s.method)) {
    case MethodClass::get:
      if (role != Role::check) {
        reject(s, "method", "direction/method mismatch",
               s.status + " measures (" + s.method +
                   ") but is used as a stimulus");
      }
      if (!s.min && !s.max) {
        reject(s, "min", "missing bound",
               s.status + " defines neither min nor max");
      }
      if (s.max) inv.params.push_back({attr + "_max", scaled(*s.max, s.var_x)});
      if (s.min) inv.params.push_back({attr + "_min", scaled(*s.min, s.var_x)});
      return inv;

    case MethodClass::put:
      if (role != Role::stimulus) {
        reject(s, "method", "direction/method mismatch",
               s.status + " stimulates (" + s.method +
                   ") but is used as a check");
      }
      if (s.nom) inv.params.push_back({attr, cell_param(*s.nom, s.var_x)});
      if (s.d1) inv.params.push_back({"d1", cell_param(*s.d1, std::nullopt)});
      if (s.d2) inv.params.push_back({"d2", cell_param(*s.d2, std::nullopt)});
      if (s.d3) inv.params.push_back({"d3", cell_param(*s.d3, std::nullopt)});
      if (inv.params.empty()) {
        reject(s, "nom", "missing value",
               s.status + " defines neither nom nor D1-D3");
      }
      return inv;

    case MethodClass::unknown:
      break;
  }
  reject(s, "method", "unknown method class",
         "'" + s.method + "' is neither put_* nor get_*");
}

TestScript compile(const SignalTable& signals, const StatusTable& statuses,
                   const TestSequence& test, const CompileOptions& options) {
  if (auto report = validate_sheets(signals, statuses, test); !report.empty()) {
    throw CompileError(std::move(report));
  }

  TestScript script;
  script.name = test.name;
  script.dut = options.dut;
  script.settle = options.settle;

  std::map<std::string, std::string, std::less<>> script_name;
  std::map<std::string, const SignalDef*, std::less<>> by_lower;
  for (const SignalDef& s : signals.rows) {
    std::string lower = lowercase(s.name);
    if (auto [it, ok] = by_lower.emplace(lower, &s); !ok) {
      throw CompileError(ValidationReport{Violation{
          SheetKind::signals, s.row, "name", "name collision",
          s.name + " and " + it->second->name + " both become '" + lower +
              "' in the script"}});
    }
    script_name[s.name] = lower;
    script.signals.push_back(ScriptSignal{lower, s.direction, s.pins});
  }

  // Lowering is status-local, so each (status, role) is lowered once.
  std::map<std::pair<std::string, Role>, MethodInvocation> lowered;
  auto lower = [&](const std::string& status, Role role) {
    auto key = std::pair{status, role};
    auto it = lowered.find(key);
    if (it == lowered.end()) {
      it = lowered.emplace(key, lower_status(*statuses.find(status), role))
               .first;
    }
    return it->second;
  };

  for (const SignalDef& s : signals.rows) {
    if (s.direction != Direction::input) continue;
    script.init.push_back(Statement{script_name.at(s.name),
                                    lower(s.initial_status, Role::stimulus)});
  }

  for (const TestStep& step : test.steps) {
    ScriptStep out{step.index, step.dt, step.remark, {}};
    for (const Assignment& a : step.assignments) {
      const SignalDef* signal = signals.find(a.signal);
      const Role role =
          signal->direction == Direction::input ? Role::stimulus : Role::check;
      out.statements.push_back(
          Statement{script_name.at(a.signal), lower(a.status, role)});
    }
    script.steps.push_back(std::move(out));
  }
  return script;
}

namespace {

void escape_into(std::string& out, std::string_view text) {
  for (char c : text) {
    switch (c) {
      case '&':
        out += "&amp;";
        break;
      case '<':
        out += "&lt;";
        break;
      case '>':
        out += "&gt;";
        break;
      case '"':
        out += "&quot;";
        break;
      case '\n':
        out += "&#10;";
        break;
      case '\r':
        out += "&#13;";
        break;
      case '\t':
        out += "&#9;";
        break;
      default:
        out += c;
    }
  }
}

using Attributes = std::vector<std::pair<std::string, std::string>>;

class XmlWriter {
 public:
  void open(std::string_view element, const Attributes& attrs,
            bool self_close = false) {
    indent();
    out_ += '<';
    out_ += element;
    for (const auto& [k, v] : attrs) {
      out_ += ' ';
      out_ += k;
      out_ += "=\"";
      escape_into(out_, v);
      out_ += '"';
    }
    out_ += self_close ? " />\n" : ">\n";
    if (!self_close) ++depth_;
  }

  void close(std::string_view element) {
    --depth_;
    indent();
    out_ += "</";
    out_ += element;
    out_ += ">\n";
  }

  std::string take() { return std::move(out_); }

 private:
  void indent() { out_.append(static_cast<std::size_t>(depth_) * 2, ' '); }

  std::string out_ = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  int depth_ = 0;
};

void write_statement(XmlWriter& w, const Statement& st) {
  w.open("signal", {{"name", st.signal}});
  Attributes attrs;
  for (const Param& p : st.invocation.params) {
    attrs.emplace_back(p.name, format_param(p.value));
  }
  w.open(st.invocation.method, attrs, true);
  w.close("signal");
}

std::string join_pins(const std::vector<std::string>& pins) {
  std::string out;
  for (const std::string& p : pins) {
    if (!out.empty()) out += '|';
    out += p;
  }
  return out;
}

}  // namespace

std::string emit_xml(const TestScript& script) {
  XmlWriter w;
  w.open("test", {{"name", script.name},
                  {"dut", script.dut},
                  {"format", std::to_string(script.format)}});

  w.open("header", Attributes{}, script.signals.empty());
  if (!script.signals.empty()) {
    for (const ScriptSignal& s : script.signals) {
      w.open("signal_def",
             {{"name", s.name},
              {"direction", std::string(to_string(s.direction))},
              {"pins", join_pins(s.pins)}},
             true);
    }
    w.close("header");
  }

  const bool empty_init = script.init.empty();
  w.open("init", {{"dt", format_seconds(script.settle)}}, empty_init);
  if (!empty_init) {
    for (const Statement& st : script.init) write_statement(w, st);
    w.close("init");
  }

  for (const ScriptStep& step : script.steps) {
    Attributes attrs{
        {"n", std::to_string(step.index)}, {"dt", format_seconds(step.dt)}};
    if (step.remark) attrs.emplace_back("remark", *step.remark);
    const bool empty = step.statements.empty();
    w.open("step", attrs, empty);
    if (!empty) {
      for (const Statement& st : step.statements) write_statement(w, st);
      w.close("step");
    }
  }
  w.close("test");
  return w.take();
}

}  // namespace comptest
