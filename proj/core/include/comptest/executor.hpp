#ifndef COMPTEST_EXECUTOR_HPP
#define COMPTEST_EXECUTOR_HPP

#include <optional>
#include <string>
#include <vector>

#include "comptest/allocator.hpp"
#include "comptest/dut.hpp"
#include "comptest/expr.hpp"
#include "comptest/script.hpp"
#include "comptest/stand.hpp"

namespace comptest {

enum class Verdict { pass, fail, error };

std::string_view to_string(Verdict v);

struct AppliedStimulus {
  std::string signal;
  std::string pin;
  MethodInvocation invocation;
  Route route = Route::resource;
  std::string resource;
  std::optional<Connector> connector;
  bool changed = false;     // sent to the DUT in this step
  bool reassigned = false;  // held stimulus moved to another resource

  friend bool operator==(const AppliedStimulus&, const AppliedStimulus&) = default;
};

struct CheckResult {
  std::string signal;
  std::string pin;
  std::string method;
  std::optional<double> min;
  std::optional<double> max;
  double measured = 0.0;
  bool pass = false;
  std::string resource;
  std::optional<Connector> connector;

  friend bool operator==(const CheckResult&, const CheckResult&) = default;
};

struct StepReport {
  std::size_t index = 0;
  Duration dt{};
  Duration t_end{};  // since the start of step 0
  std::vector<AppliedStimulus> stimuli;
  std::vector<CheckResult> checks;  // one per (check statement, pin)
  Verdict verdict = Verdict::pass;

  friend bool operator==(const StepReport&, const StepReport&) = default;
};

struct RunError {
  enum class Kind { allocation, env, dut };
  Kind kind = Kind::allocation;
  std::optional<std::size_t> step;  // nullopt: during init
  std::string message;
  std::optional<AllocationFailure> allocation;
};

std::string_view to_string(RunError::Kind k);

struct RunReport {
  std::string test;
  std::string dut;
  Env env;
  Duration settle{};
  std::vector<AppliedStimulus> init;
  std::vector<StepReport> steps;  // executed steps only
  std::size_t steps_total = 0;
  Duration virtual_time{};  // settle + executed dwell times
  Verdict verdict = Verdict::pass;
  std::optional<RunError> error;

  std::size_t checks_total() const;
  std::size_t checks_failed() const;
};

struct ExecuteOptions {
  /// Sleep for every dwell so the DUT sees wall-clock pacing.
  bool pace_wall_clock = false;
};

/// Runs a plan on a stand against a DUT. Per step: allocate the effective
/// stimuli and checks, apply changed stimuli, advance by dt, then sample
/// every check pin. Check failures do not stop the run; allocation, env
/// and DUT errors abort it and are recorded in the report.
RunReport execute(const TestPlan& plan, const Stand& stand, const Env& env,
                  DutModel& dut, const ExecuteOptions& options = {});

/// Machine-readable report; deterministic for a deterministic run.
std::string report_to_json(const RunReport& report);
std::string report_to_text(const RunReport& report);

}  // namespace comptest

#endif  // COMPTEST_EXECUTOR_HPP
