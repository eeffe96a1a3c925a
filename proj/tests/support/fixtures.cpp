#include "fixtures.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace comptest::fixtures {

namespace {

Example load(const std::string& dir, const CsvDialect& dialect) {
  Example ex;
  ex.signals = parse_signal_sheet(read_text(data_path(dir + "/signals.csv")), dialect);
  ex.statuses = parse_status_sheet(read_text(data_path(dir + "/statuses.csv")), dialect);
  ex.test = parse_test_sheet(
      read_text(data_path(dir + "/interior_illumination.csv")), dialect,
      "interior_illumination");
  ex.stand.resources =
      parse_resource_sheet(read_text(data_path(dir + "/resources.csv")), dialect);
  ex.stand.connections =
      parse_connection_sheet(read_text(data_path(dir + "/connections.csv")), dialect);
  ex.env = env_with_ubatt(12.0);
  return ex;
}

}  // namespace

std::string data_path(const std::string& relative) {
  return std::string(COMPTEST_DATA_DIR) + "/" + relative;
}

std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Example example() { return load("interior_illumination", CsvDialect{}); }

Example example_dot_decimal() {
  return load("interior_illumination_dot", CsvDialect::dot_decimal());
}

TestScript example_script() {
  const Example ex = example();
  CompileOptions options;
  options.dut = "interior_illumination";
  return compile(ex.signals, ex.statuses, ex.test, options);
}

std::string example_xml() { return emit_xml(example_script()); }

Env env_with_ubatt(double ubatt) {
  Env env;
  env.bind("ubatt", ubatt, "V");
  return env;
}

RunReport run_example(const InteriorIlluminationConfig& config, double ubatt) {
  const Example ex = example();
  const TestPlan plan = load_script(example_xml());
  InteriorIlluminationConfig c = config;
  c.ubatt = ubatt;
  InteriorIlluminationDut dut(c);
  return execute(plan, ex.stand, env_with_ubatt(ubatt), dut);
}

}  // namespace comptest::fixtures
