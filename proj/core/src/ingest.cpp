#include "comptest/ingest.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>
#include <set>

#include "comptest/error.hpp"
#include "comptest/numeric.hpp"

namespace comptest {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
    s.remove_prefix(1);
  }
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
    s.remove_suffix(1);
  }
  return s;
}

std::string lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return out;
}

std::string header_key(std::string_view s) {
  std::string out;
  for (unsigned char c : trim(s)) {
    if (std::isspace(c) || c == '(' || c == ')' || c == '.' || c == '_') {
      continue;
    }
    out += static_cast<char>(std::tolower(c));
  }
  return out;
}

bool has_whitespace(std::string_view s) {
  return std::any_of(s.begin(), s.end(),
                     [](unsigned char c) { return std::isspace(c); });
}

bool is_blank(const CsvRecord& record) {
  return std::all_of(record.begin(), record.end(),
                     [](const std::string& f) { return trim(f).empty(); });
}

// A CSV sheet with a header row and named columns.
class Sheet {
 public:
  Sheet(std::string name, std::string_view text, const CsvDialect& dialect)
      : name_(std::move(name)), dialect_(dialect) {
    dialect_.validate();
    records_ = read_csv(text, dialect_.field_separator);
    if (records_.empty() || is_blank(records_.front())) {
      throw SheetError(name_, 1, "", "missing header row");
    }
    for (const std::string& h : records_.front()) {
      header_.emplace_back(trim(h));
    }
  }

  const std::string& name() const { return name_; }
  const CsvDialect& dialect() const { return dialect_; }
  const std::vector<std::string>& header() const { return header_; }
  std::size_t record_count() const { return records_.size(); }
  const CsvRecord& record(std::size_t i) const { return records_[i]; }

  // 1-based spreadsheet row of record i.
  static int row_of(std::size_t i) { return static_cast<int>(i) + 1; }

  std::string_view cell(std::size_t rec, std::size_t col) const {
    const CsvRecord& r = records_[rec];
    return col < r.size() ? trim(r[col]) : std::string_view{};
  }

  std::string column_name(std::size_t col) const {
    if (col < header_.size() && !header_[col].empty()) return header_[col];
    return "#" + std::to_string(col + 1);
  }

  [[noreturn]] void fail(std::size_t rec, std::size_t col,
                         const std::string& message) const {
    throw SheetError(name_, row_of(rec), column_name(col), message);
  }
  [[noreturn]] void fail_row(std::size_t rec, const std::string& message) const {
    throw SheetError(name_, row_of(rec), "", message);
  }

  // Rejects data in columns that have no header.
  void check_width(std::size_t rec, const std::vector<bool>& used) const {
    const CsvRecord& r = records_[rec];
    for (std::size_t c = 0; c < r.size(); ++c) {
      if ((c >= used.size() || !used[c]) && !trim(r[c]).empty()) {
        fail(rec, c, "value in a column without header");
      }
    }
  }

  // Maps header keys (after header_key normalization) to column indices.
  // `aliases` maps each accepted key to its canonical key.
  std::map<std::string, std::size_t> map_columns(
      const std::map<std::string, std::string>& aliases,
      const std::vector<std::string>& required) const {
    std::map<std::string, std::size_t> out;
    for (std::size_t c = 0; c < header_.size(); ++c) {
      if (header_[c].empty()) continue;
      auto it = aliases.find(header_key(header_[c]));
      if (it == aliases.end()) {
        throw SheetError(name_, 1, header_[c], "unknown column");
      }
      if (!out.emplace(it->second, c).second) {
        throw SheetError(name_, 1, header_[c], "duplicate column");
      }
    }
    for (const std::string& key : required) {
      if (!out.contains(key)) {
        throw SheetError(name_, 1, "",
                         "missing header: no '" + key + "' column");
      }
    }
    return out;
  }

  std::optional<double> number(std::size_t rec, std::size_t col) const {
    std::string_view text = cell(rec, col);
    if (text.empty()) return std::nullopt;
    auto v = parse_number(text, dialect_.decimal_separator);
    if (!v) fail(rec, col, "malformed number '" + std::string(text) + "'");
    return v;
  }

 private:
  std::string name_;
  CsvDialect dialect_;
  std::vector<CsvRecord> records_;
  std::vector<std::string> header_;
};

std::optional<std::size_t> column(const std::map<std::string, std::size_t>& m,
                                  const std::string& key) {
  auto it = m.find(key);
  if (it == m.end()) return std::nullopt;
  return it->second;
}

std::vector<bool> used_columns(const Sheet& sheet) {
  std::vector<bool> used(sheet.header().size());
  for (std::size_t c = 0; c < used.size(); ++c) {
    used[c] = !sheet.header()[c].empty();
  }
  return used;
}

std::optional<CellValue> value_cell(const Sheet& sheet, std::size_t rec,
                                    std::optional<std::size_t> col,
                                    bool allow_bits) {
  if (!col) return std::nullopt;
  std::string_view text = sheet.cell(rec, *col);
  if (text.empty()) return std::nullopt;
  if (lower(text) == "inf") return CellValue{OpenCircuit{}};
  if (allow_bits && is_bit_literal(text)) {
    return CellValue{BitLiteral{std::string(text)}};
  }
  auto v = parse_number(text, sheet.dialect().decimal_separator);
  if (!v) {
    sheet.fail(rec, *col, "malformed value '" + std::string(text) + "'");
  }
  return CellValue{*v};
}

std::string format_cell(const std::optional<CellValue>& v, char decimal) {
  if (!v) return {};
  if (const double* d = std::get_if<double>(&*v)) {
    return format_number(*d, decimal);
  }
  if (std::holds_alternative<OpenCircuit>(*v)) return "INF";
  return std::get<BitLiteral>(*v).text;
}

std::string format_opt(const std::optional<double>& v, char decimal) {
  return v ? format_number(*v, decimal) : std::string{};
}

std::optional<std::size_t> parse_index(std::string_view text) {
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size()) {
    return std::nullopt;
  }
  return value;
}

}  // namespace

std::string normalize_method(std::string_view text) {
  std::string out;
  bool pending_sep = false;
  for (unsigned char c : trim(text)) {
    if (std::isspace(c) || c == '_') {
      pending_sep = !out.empty();
      continue;
    }
    if (pending_sep) out += '_';
    pending_sep = false;
    out += static_cast<char>(std::tolower(c));
  }
  return out;
}

StatusTable parse_status_sheet(std::string_view text,
                               const CsvDialect& dialect) {
  Sheet sheet("statuses", text, dialect);
  const auto cols = sheet.map_columns(
      {{"status", "status"},
       {"method", "method"},
       {"attribut", "attribut"},
       {"attribute", "attribut"},
       {"varx", "varx"},
       {"var", "varx"},
       {"nom", "nom"},
       {"min", "min"},
       {"max", "max"},
       {"d1", "d1"},
       {"d2", "d2"},
       {"d3", "d3"},
       {"unit", "unit"}},
      {"status", "method", "attribut", "varx", "nom", "min", "max", "d1", "d2",
       "d3"});
  const auto used = used_columns(sheet);
  const auto text_of = [&](std::size_t rec, const std::string& key) {
    auto c = column(cols, key);
    return c ? std::string(sheet.cell(rec, *c)) : std::string{};
  };

  StatusTable table;
  std::set<std::string, std::less<>> seen;
  for (std::size_t rec = 1; rec < sheet.record_count(); ++rec) {
    if (is_blank(sheet.record(rec))) continue;
    sheet.check_width(rec, used);

    StatusDef s;
    s.row = Sheet::row_of(rec);
    s.status = text_of(rec, "status");
    const std::size_t status_col = cols.at("status");
    if (s.status.empty()) sheet.fail(rec, status_col, "missing status name");
    if (has_whitespace(s.status)) {
      sheet.fail(rec, status_col, "status names must not contain whitespace");
    }
    if (!seen.insert(s.status).second) {
      sheet.fail(rec, status_col, "duplicate status '" + s.status + "'");
    }
    s.method = normalize_method(text_of(rec, "method"));
    if (s.method.empty()) sheet.fail(rec, cols.at("method"), "missing method");
    s.attribut = lower(text_of(rec, "attribut"));
    if (s.attribut.empty()) {
      sheet.fail(rec, cols.at("attribut"), "missing attribut");
    }
    if (std::string v = text_of(rec, "varx"); !v.empty()) s.var_x = v;
    s.nom = value_cell(sheet, rec, column(cols, "nom"), true);
    s.min = sheet.number(rec, cols.at("min"));
    s.max = sheet.number(rec, cols.at("max"));
    s.d1 = value_cell(sheet, rec, column(cols, "d1"), false);
    s.d2 = value_cell(sheet, rec, column(cols, "d2"), false);
    s.d3 = value_cell(sheet, rec, column(cols, "d3"), false);
    if (std::string u = text_of(rec, "unit"); !u.empty()) s.unit = u;
    table.rows.push_back(std::move(s));
  }
  return table;
}

TestSequence parse_test_sheet(std::string_view text, const CsvDialect& dialect,
                              std::string name) {
  Sheet sheet("test", text, dialect);
  const auto& header = sheet.header();
  if (header.size() < 2) {
    throw SheetError("test", 1, "",
                     "missing header: expected step and dt columns");
  }

  TestSequence test;
  test.name = std::move(name);
  std::optional<std::size_t> remarks_col;
  std::vector<std::size_t> signal_cols;
  std::set<std::string, std::less<>> seen;
  for (std::size_t c = 2; c < header.size(); ++c) {
    if (header[c].empty()) continue;
    const std::string key = header_key(header[c]);
    if (key == "remarks" || key == "remark" || key == "comment") {
      remarks_col = c;
      continue;
    }
    if (has_whitespace(header[c])) {
      throw SheetError("test", 1, header[c],
                       "signal names must not contain whitespace");
    }
    if (!seen.insert(header[c]).second) {
      throw SheetError("test", 1, header[c], "duplicate signal column");
    }
    signal_cols.push_back(c);
    test.signal_columns.push_back(header[c]);
  }

  std::vector<bool> used = used_columns(sheet);
  used[0] = used[1] = true;
  std::size_t expected = 0;
  for (std::size_t rec = 1; rec < sheet.record_count(); ++rec) {
    if (is_blank(sheet.record(rec))) continue;
    sheet.check_width(rec, used);

    TestStep step;
    step.row = Sheet::row_of(rec);
    auto index = parse_index(sheet.cell(rec, 0));
    if (!index) {
      sheet.fail(rec, 0,
                 "malformed step index '" + std::string(sheet.cell(rec, 0)) +
                     "'");
    }
    if (*index != expected) {
      sheet.fail(rec, 0,
                 "non-consecutive step index " + std::to_string(*index));
    }
    step.index = expected++;

    auto dt = sheet.number(rec, 1);
    if (!dt) sheet.fail(rec, 1, "missing dt");
    auto dur = seconds_to_duration(*dt);
    if (*dt <= 0.0 || !dur || *dur <= Duration::zero()) {
      sheet.fail(rec, 1,
                 "dt must be positive, got '" +
                     std::string(sheet.cell(rec, 1)) + "'");
    }
    step.dt = *dur;

    for (std::size_t i = 0; i < signal_cols.size(); ++i) {
      std::string_view v = sheet.cell(rec, signal_cols[i]);
      if (v.empty()) continue;
      step.assignments.push_back(
          Assignment{test.signal_columns[i], std::string(v)});
    }
    if (remarks_col) {
      std::string_view r = sheet.cell(rec, *remarks_col);
      if (!r.empty()) step.remark = std::string(r);
    }
    test.steps.push_back(std::move(step));
  }
  return test;
}

SignalTable parse_signal_sheet(std::string_view text,
                               const CsvDialect& dialect) {
  Sheet sheet("signals", text, dialect);
  const auto cols = sheet.map_columns({{"name", "name"},
                                       {"signal", "name"},
                                       {"direction", "direction"},
                                       {"pins", "pins"},
                                       {"pin", "pins"},
                                       {"initialstatus", "initial_status"},
                                       {"initial", "initial_status"}},
                                      {"name", "direction", "pins",
                                       "initial_status"});
  const auto used = used_columns(sheet);

  SignalTable table;
  std::set<std::string, std::less<>> names;
  std::set<std::string, std::less<>> pins;
  for (std::size_t rec = 1; rec < sheet.record_count(); ++rec) {
    if (is_blank(sheet.record(rec))) continue;
    sheet.check_width(rec, used);

    SignalDef s;
    s.row = Sheet::row_of(rec);
    const std::size_t name_col = cols.at("name");
    s.name = std::string(sheet.cell(rec, name_col));
    if (s.name.empty() || has_whitespace(s.name)) {
      sheet.fail(rec, name_col, "invalid signal name '" + s.name + "'");
    }
    if (!names.insert(s.name).second) {
      sheet.fail(rec, name_col, "duplicate signal '" + s.name + "'");
    }

    const std::size_t dir_col = cols.at("direction");
    auto dir = parse_direction(sheet.cell(rec, dir_col));
    if (!dir) {
      sheet.fail(rec, dir_col,
                 "direction must be input or output, got '" +
                     std::string(sheet.cell(rec, dir_col)) + "'");
    }
    s.direction = *dir;

    const std::size_t pins_col = cols.at("pins");
    std::string_view list = sheet.cell(rec, pins_col);
    if (list.empty()) sheet.fail(rec, pins_col, "missing pins");
    for (;;) {
      const auto bar = list.find('|');
      std::string_view pin = trim(list.substr(0, bar));
      if (pin.empty() || has_whitespace(pin)) {
        sheet.fail(rec, pins_col, "empty or malformed pin in '" +
                                      std::string(sheet.cell(rec, pins_col)) +
                                      "'");
      }
      if (!pins.insert(std::string(pin)).second) {
        sheet.fail(rec, pins_col, "duplicate pin '" + std::string(pin) + "'");
      }
      s.pins.emplace_back(pin);
      if (bar == std::string_view::npos) break;
      list.remove_prefix(bar + 1);
    }

    const std::size_t init_col = cols.at("initial_status");
    s.initial_status = std::string(sheet.cell(rec, init_col));
    if (s.initial_status.empty()) {
      sheet.fail(rec, init_col, "missing initial status");
    }
    table.rows.push_back(std::move(s));
  }
  return table;
}

ResourceTable parse_resource_sheet(std::string_view text,
                                   const CsvDialect& dialect) {
  Sheet sheet("resources", text, dialect);
  const auto cols = sheet.map_columns({{"res", "id"},
                                       {"resource", "id"},
                                       {"id", "id"},
                                       {"method", "method"},
                                       {"attribut", "attribut"},
                                       {"attribute", "attribut"},
                                       {"min", "min"},
                                       {"max", "max"},
                                       {"unit", "unit"}},
                                      {"id", "method", "attribut", "min", "max"});
  const auto used = used_columns(sheet);

  ResourceTable table;
  std::set<std::pair<std::string, std::string>> seen;
  for (std::size_t rec = 1; rec < sheet.record_count(); ++rec) {
    if (is_blank(sheet.record(rec))) continue;
    sheet.check_width(rec, used);

    ResourceDef r;
    r.row = Sheet::row_of(rec);
    r.id = std::string(sheet.cell(rec, cols.at("id")));
    if (r.id.empty() || has_whitespace(r.id)) {
      sheet.fail(rec, cols.at("id"), "invalid resource id '" + r.id + "'");
    }
    r.method = normalize_method(sheet.cell(rec, cols.at("method")));
    if (r.method.empty()) sheet.fail(rec, cols.at("method"), "missing method");
    if (!seen.emplace(r.id, r.method).second) {
      sheet.fail(rec, cols.at("method"),
                 "duplicate method " + r.method + " for " + r.id);
    }
    r.attribut = lower(sheet.cell(rec, cols.at("attribut")));
    if (r.attribut.empty()) {
      sheet.fail(rec, cols.at("attribut"), "missing attribut");
    }
    auto lo = sheet.number(rec, cols.at("min"));
    auto hi = sheet.number(rec, cols.at("max"));
    if (!lo) sheet.fail(rec, cols.at("min"), "missing min");
    if (!hi) sheet.fail(rec, cols.at("max"), "missing max");
    if (*lo > *hi) sheet.fail(rec, cols.at("max"), "max is below min");
    r.min = *lo;
    r.max = *hi;
    if (auto c = column(cols, "unit")) r.unit = std::string(sheet.cell(rec, *c));
    table.rows.push_back(std::move(r));
  }
  return table;
}

ConnectionMatrix parse_connection_sheet(std::string_view text,
                                        const CsvDialect& dialect) {
  Sheet sheet("connections", text, dialect);
  const auto& header = sheet.header();
  std::vector<std::string> pins;
  for (std::size_t c = 1; c < header.size(); ++c) {
    if (header[c].empty()) {
      throw SheetError("connections", 1, sheet.column_name(c),
                       "missing pin name");
    }
    if (std::find(pins.begin(), pins.end(), header[c]) != pins.end()) {
      throw SheetError("connections", 1, header[c], "duplicate pin column");
    }
    pins.push_back(header[c]);
  }
  if (pins.empty()) {
    throw SheetError("connections", 1, "", "missing header: no pin columns");
  }

  ConnectionMatrix matrix({}, pins);
  std::vector<bool> used(header.size(), true);
  std::set<std::string, std::less<>> seen;
  for (std::size_t rec = 1; rec < sheet.record_count(); ++rec) {
    if (is_blank(sheet.record(rec))) continue;
    sheet.check_width(rec, used);
    std::string resource(sheet.cell(rec, 0));
    if (resource.empty() || has_whitespace(resource)) {
      sheet.fail(rec, 0, "invalid resource id '" + resource + "'");
    }
    if (!seen.insert(resource).second) {
      sheet.fail(rec, 0, "duplicate resource row '" + resource + "'");
    }
    matrix.add_resource(resource);
    for (std::size_t c = 1; c < header.size(); ++c) {
      std::string_view cell = sheet.cell(rec, c);
      if (cell.empty()) continue;
      auto connector = parse_connector(cell);
      if (!connector) {
        sheet.fail(rec, c,
                   "unknown connector syntax '" + std::string(cell) +
                       "' (expected SwN.M or MxN.M)");
      }
      matrix.connect(resource, header[c], *connector);
    }
  }
  return matrix;
}

Env parse_env_file(std::string_view text) {
  Env env;
  int line_no = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text.remove_prefix(nl == std::string_view::npos ? text.size() : nl + 1);
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw SheetError("env", line_no, "", "expected key=value");
    }
    const std::string key = lower(trim(line.substr(0, eq)));
    std::string_view value = trim(line.substr(eq + 1));
    if (key.empty() || has_whitespace(key)) {
      throw SheetError("env", line_no, "", "malformed key");
    }
    auto v = parse_number(value, '.');
    if (!v) {
      throw SheetError("env", line_no, key,
                       "malformed number '" + std::string(value) + "'");
    }
    env.bind(key, *v, key == "ubatt" ? "V" : "");
  }
  return env;
}

std::string serialize_status_sheet(const StatusTable& table,
                                   const CsvDialect& dialect) {
  const char dec = dialect.decimal_separator;
  const bool with_unit =
      std::any_of(table.rows.begin(), table.rows.end(),
                  [](const StatusDef& s) { return s.unit.has_value(); });
  std::vector<CsvRecord> out;
  CsvRecord header{"status", "method", "attribut", "var (x)", "nom",
                   "min",    "max",    "D 1",      "D 2",     "D 3"};
  if (with_unit) header.push_back("unit");
  out.push_back(std::move(header));
  for (const StatusDef& s : table.rows) {
    CsvRecord r{s.status,
                s.method,
                s.attribut,
                s.var_x.value_or(""),
                format_cell(s.nom, dec),
                format_opt(s.min, dec),
                format_opt(s.max, dec),
                format_cell(s.d1, dec),
                format_cell(s.d2, dec),
                format_cell(s.d3, dec)};
    if (with_unit) r.push_back(s.unit.value_or(""));
    out.push_back(std::move(r));
  }
  return write_csv(out, dialect.field_separator);
}

std::string serialize_test_sheet(const TestSequence& test,
                                 const CsvDialect& dialect) {
  std::vector<CsvRecord> out;
  CsvRecord header{"test step", "Δt"};
  header.insert(header.end(), test.signal_columns.begin(),
                test.signal_columns.end());
  header.push_back("remarks");
  out.push_back(std::move(header));
  for (const TestStep& step : test.steps) {
    CsvRecord r{std::to_string(step.index),
                format_seconds(step.dt, dialect.decimal_separator)};
    for (const std::string& signal : test.signal_columns) {
      auto it = std::find_if(
          step.assignments.begin(), step.assignments.end(),
          [&](const Assignment& a) { return a.signal == signal; });
      r.push_back(it == step.assignments.end() ? std::string{} : it->status);
    }
    r.push_back(step.remark.value_or(""));
    out.push_back(std::move(r));
  }
  return write_csv(out, dialect.field_separator);
}

std::string serialize_signal_sheet(const SignalTable& table,
                                   const CsvDialect& dialect) {
  std::vector<CsvRecord> out{{"name", "direction", "pins", "initial_status"}};
  for (const SignalDef& s : table.rows) {
    std::string pins;
    for (const std::string& p : s.pins) {
      if (!pins.empty()) pins += '|';
      pins += p;
    }
    out.push_back({s.name, std::string(to_string(s.direction)), pins,
                   s.initial_status});
  }
  return write_csv(out, dialect.field_separator);
}

std::string serialize_resource_sheet(const ResourceTable& table,
                                     const CsvDialect& dialect) {
  const char dec = dialect.decimal_separator;
  std::vector<CsvRecord> out{{"Res.", "Method", "Attribut", "Min", "Max",
                              "Unit"}};
  for (const ResourceDef& r : table.rows) {
    out.push_back({r.id, r.method, r.attribut, format_number(r.min, dec),
                   format_number(r.max, dec), r.unit});
  }
  return write_csv(out, dialect.field_separator);
}

std::string serialize_connection_sheet(const ConnectionMatrix& matrix,
                                       const CsvDialect& dialect) {
  std::vector<CsvRecord> out;
  CsvRecord header{""};
  header.insert(header.end(), matrix.pins().begin(), matrix.pins().end());
  out.push_back(std::move(header));
  for (const std::string& res : matrix.resources()) {
    CsvRecord r{res};
    for (const std::string& pin : matrix.pins()) {
      auto c = matrix.find(res, pin);
      r.push_back(c ? to_string(*c) : std::string{});
    }
    out.push_back(std::move(r));
  }
  return write_csv(out, dialect.field_separator);
}

CsvDialect parse_dialect_spec(std::string_view spec, CsvDialect base) {
  static const std::map<std::string, char, std::less<>> named{
      {"comma", ','}, {"dot", '.'},   {"point", '.'},
      {"semicolon", ';'}, {"tab", '\t'}, {"pipe", '|'}};
  std::size_t pos = 0;
  while (pos < spec.size()) {
    const auto eq = spec.find('=', pos);
    if (eq == std::string_view::npos) {
      throw Error("malformed dialect '" + std::string(spec) +
                  "': expected key=value");
    }
    const std::string key = lower(trim(spec.substr(pos, eq - pos)));
    pos = eq + 1;
    if (pos >= spec.size()) {
      throw Error("malformed dialect '" + std::string(spec) +
                  "': missing value for " + key);
    }
    char value = 0;
    if (std::isalpha(static_cast<unsigned char>(spec[pos]))) {
      std::size_t end = pos;
      while (end < spec.size() &&
             std::isalpha(static_cast<unsigned char>(spec[end]))) {
        ++end;
      }
      auto it = named.find(lower(spec.substr(pos, end - pos)));
      if (it == named.end()) {
        throw Error("unknown separator name '" +
                    std::string(spec.substr(pos, end - pos)) + "'");
      }
      value = it->second;
      pos = end;
    } else {
      value = spec[pos++];
    }
    if (key == "field") {
      base.field_separator = value;
    } else if (key == "decimal") {
      base.decimal_separator = value;
    } else {
      throw Error("unknown dialect key '" + key + "'");
    }
    if (pos < spec.size()) {
      if (spec[pos] != ',') {
        throw Error("malformed dialect '" + std::string(spec) + "'");
      }
      ++pos;
    }
  }
  base.validate();
  return base;
}

}  // namespace comptest
