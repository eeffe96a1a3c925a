#include "cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "comptest/compiler.hpp"
#include "comptest/executor.hpp"
#include "comptest/ingest.hpp"
#include "comptest/script.hpp"

namespace comptest::cli {

namespace {

// Missing or unreadable input; always exit 2.
struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw IoError("cannot read " + path);
  return buf.str();
}

void write_artifact(const std::string& path, const std::string& text,
                    std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw IoError("cannot write " + path);
  file << text;
  if (!file.flush()) throw IoError("cannot write " + path);
}

struct SheetPaths {
  std::string signals;
  std::string statuses;
  std::string test;
};

struct Sheets {
  SignalTable signals;
  StatusTable statuses;
  TestSequence test;
};

std::string stem(const std::string& path) {
  std::string name = path.substr(path.find_last_of("/\\") + 1);
  if (auto dot = name.rfind('.'); dot != std::string::npos && dot != 0) {
    name.erase(dot);
  }
  return name;
}

Sheets load_sheets(const SheetPaths& paths, const CsvDialect& dialect,
                   std::string test_name) {
  const std::string signals = read_file(paths.signals);
  const std::string statuses = read_file(paths.statuses);
  const std::string test = read_file(paths.test);
  if (test_name.empty()) test_name = stem(paths.test);
  return Sheets{parse_signal_sheet(signals, dialect),
                parse_status_sheet(statuses, dialect),
                parse_test_sheet(test, dialect, std::move(test_name))};
}

void add_sheet_options(CLI::App& cmd, SheetPaths& paths) {
  cmd.add_option("--signals", paths.signals, "signal sheet (CSV)")->required();
  cmd.add_option("--statuses", paths.statuses, "status sheet (CSV)")->required();
  cmd.add_option("--test", paths.test, "test table (CSV)")->required();
}

void print_violations(const ValidationReport& report, std::ostream& err) {
  for (const Violation& v : report) err << to_string(v) << "\n";
}

std::string plural(std::size_t n, const char* word) {
  return std::to_string(n) + " " + word + (n == 1 ? "" : "s");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Table-driven component test authoring and execution"};
  app.name("comptest");
  app.require_subcommand(1);

  std::string dialect_spec;
  app.add_option("--dialect", dialect_spec,
                 "CSV dialect, e.g. field=;,decimal=, or decimal=dot")
      ->capture_default_str();

  SheetPaths check_paths;
  CLI::App* check = app.add_subcommand("check", "validate the three sheets");
  add_sheet_options(*check, check_paths);

  SheetPaths compile_paths;
  std::string compile_out;
  std::string dut_name = "interior_illumination";
  std::string test_name;
  double settle_s = 0.1;
  CLI::App* compile_cmd =
      app.add_subcommand("compile", "compile the sheets into an XML script");
  add_sheet_options(*compile_cmd, compile_paths);
  compile_cmd->add_option("-o,--out", compile_out, "script path (default stdout)");
  compile_cmd->add_option("--dut-name", dut_name, "dut attribute of the script")
      ->capture_default_str();
  compile_cmd->add_option("--test-name", test_name,
                          "test name (default: test sheet file name)");
  compile_cmd->add_option("--settle", settle_s, "init settle time in seconds")
      ->capture_default_str()
      ->check(CLI::NonNegativeNumber);

  std::string script_path;
  std::string resources_path;
  std::string connections_path;
  std::string env_path;
  std::string run_dut;
  std::string report_format = "text";
  std::string report_out;
  double timeout_s = 300.0;
  double threshold = 100.0;
  bool first_open_only = false;
  bool realtime = false;
  CLI::App* run = app.add_subcommand("run", "execute a script on a simulated stand");
  run->add_option("--script", script_path, "XML test script")->required();
  run->add_option("--resources", resources_path, "resource table (CSV)")->required();
  run->add_option("--connections", connections_path, "connection matrix (CSV)")
      ->required();
  run->add_option("--env", env_path, "stand environment, key=value per line")
      ->required();
  run->add_option("--dut", run_dut, "DUT model (default: the script's dut)");
  run->add_option("--report", report_format, "report format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  run->add_option("-o,--out", report_out, "report path (default stdout)");
  run->add_option("--timeout", timeout_s, "reference DUT lamp timeout in seconds")
      ->capture_default_str()
      ->check(CLI::NonNegativeNumber);
  run->add_option("--door-threshold", threshold,
                  "reference DUT door-open resistance threshold in ohms")
      ->capture_default_str();
  run->add_flag("--first-open-only", first_open_only,
                "reference DUT: only the first door opening starts the timer");
  run->add_flag("--realtime", realtime, "pace dwell times with the wall clock");

  std::vector<const char*> argv{"comptest"};
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kPass : kError;
  }

  try {
    const CsvDialect dialect = parse_dialect_spec(dialect_spec);

    if (check->parsed()) {
      Sheets sheets;
      try {
        sheets = load_sheets(check_paths, dialect, "");
      } catch (const SheetError& e) {
        err << "error: " << e.what() << "\n";
        return kFail;
      }
      const ValidationReport report =
          validate_sheets(sheets.signals, sheets.statuses, sheets.test);
      print_violations(report, err);
      out << plural(report.size(), "violation") << "\n";
      return report.empty() ? kPass : kFail;
    }

    if (compile_cmd->parsed()) {
      TestScript script;
      try {
        Sheets sheets = load_sheets(compile_paths, dialect, test_name);
        CompileOptions options;
        options.dut = dut_name;
        options.settle = *seconds_to_duration(settle_s);
        script = compile(sheets.signals, sheets.statuses, sheets.test, options);
      } catch (const SheetError& e) {
        err << "error: " << e.what() << "\n";
        return kFail;
      } catch (const CompileError& e) {
        print_violations(e.violations(), err);
        err << "error: " << plural(e.violations().size(), "violation")
            << ", no script written\n";
        return kFail;
      }
      write_artifact(compile_out, emit_xml(script), out);
      return kPass;
    }

    // run
    const TestPlan plan = load_script(read_file(script_path));
    Stand stand;
    stand.resources = parse_resource_sheet(read_file(resources_path), dialect);
    stand.connections =
        parse_connection_sheet(read_file(connections_path), dialect);
    const Env env = parse_env_file(read_file(env_path));

    InteriorIlluminationConfig config;
    config.timeout = *seconds_to_duration(timeout_s);
    config.door_threshold_ohm = threshold;
    config.rearm_on_each_open = !first_open_only;
    if (auto ubatt = env.lookup("ubatt")) config.ubatt = *ubatt;

    const std::string name = run_dut.empty() ? plan.script.dut : run_dut;
    std::unique_ptr<DutModel> dut = make_dut(name, config);
    if (!dut) {
      err << "error: unknown DUT '" << name << "'; available:";
      for (const std::string& n : dut_names()) err << " " << n;
      err << "\n";
      return kError;
    }

    ExecuteOptions options;
    options.pace_wall_clock = realtime;
    const RunReport report = execute(plan, stand, env, *dut, options);
    write_artifact(report_out,
                   report_format == "json" ? report_to_json(report)
                                           : report_to_text(report),
                   out);
    if (report.error) {
      err << "error (" << to_string(report.error->kind) << "): "
          << report.error->message << "\n";
      return kError;
    }
    if (report.verdict != Verdict::pass) {
      err << "FAIL: " << plural(report.checks_failed(), "check")
          << " failed\n";
      return kFail;
    }
    return kPass;
  } catch (const IoError& e) {
    err << "I/O error: " << e.what() << "\n";
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
  }
  return kError;
}

}  // namespace comptest::cli
