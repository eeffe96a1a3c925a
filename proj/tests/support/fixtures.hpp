#ifndef COMPTEST_TESTS_FIXTURES_HPP
#define COMPTEST_TESTS_FIXTURES_HPP

#include <string>

#include "comptest/compiler.hpp"
#include "comptest/executor.hpp"
#include "comptest/ingest.hpp"
#include "comptest/script.hpp"

namespace comptest::fixtures {

std::string data_path(const std::string& relative);
std::string read_text(const std::string& path);

/// The worked example shipped in data/interior_illumination.
struct Example {
  SignalTable signals;
  StatusTable statuses;
  TestSequence test;
  Stand stand;
  Env env;
};
Example example();
Example example_dot_decimal();

TestScript example_script();
std::string example_xml();

Env env_with_ubatt(double ubatt);

/// Compiles, loads and runs the example against the reference DUT.
RunReport run_example(const InteriorIlluminationConfig& config = {},
                      double ubatt = 12.0);

}  // namespace comptest::fixtures

#endif  // COMPTEST_TESTS_FIXTURES_HPP
