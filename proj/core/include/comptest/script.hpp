#ifndef COMPTEST_SCRIPT_HPP
#define COMPTEST_SCRIPT_HPP

#include <string_view>
#include <vector>

#include "comptest/test_script.hpp"

namespace comptest {

struct PlanStep {
  std::size_t index = 0;
  Duration dt{};
  /// Stimuli in force during this step after carry-forward from init and
  /// earlier steps, in manifest order.
  std::vector<Statement> active_stimuli;
  /// Statements on output signals, in script order.
  std::vector<Statement> checks;

  friend bool operator==(const PlanStep&, const PlanStep&) = default;
};

/// An immutable, validated script plus derived per-step state.
struct TestPlan {
  TestScript script;
  std::vector<PlanStep> steps;
};

/// Derives the per-step closure. Statements on input signals are stimuli
/// and persist; statements on output signals are checks for one step.
TestPlan make_plan(TestScript script);

/// Parses and validates an XML test script. Throws LoadError (with a line
/// number) on malformed XML, schema violations or bad expressions. Method
/// names are not checked here; the stand decides what it can execute.
TestPlan load_script(std::string_view xml);

}  // namespace comptest

#endif  // COMPTEST_SCRIPT_HPP
