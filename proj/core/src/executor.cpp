#include "comptest/executor.hpp"

#include <map>
#include <stdexcept>
#include <thread>

namespace comptest {

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::pass:
      return "pass";
    case Verdict::fail:
      return "fail";
    case Verdict::error:
      return "error";
  }
  return "?";
}

std::string_view to_string(RunError::Kind k) {
  switch (k) {
    case RunError::Kind::allocation:
      return "allocation";
    case RunError::Kind::env:
      return "env";
    case RunError::Kind::dut:
      return "dut";
  }
  return "?";
}

std::size_t RunReport::checks_total() const {
  std::size_t n = 0;
  for (const StepReport& s : steps) n += s.checks.size();
  return n;
}

std::size_t RunReport::checks_failed() const {
  std::size_t n = 0;
  for (const StepReport& s : steps) {
    for (const CheckResult& c : s.checks) n += c.pass ? 0 : 1;
  }
  return n;
}

namespace {

// Anything the DUT model rejects.
struct DutFault : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::optional<double> numeric(const ParamValue& v, const Env& env) {
  if (const double* d = std::get_if<double>(&v)) return *d;
  if (const Expr* e = std::get_if<Expr>(&v)) return eval_expr(*e, env);
  return std::nullopt;
}

PinStimulus to_pin_stimulus(const MethodInvocation& inv, const Env& env) {
  if (inv.params.empty()) {
    throw DutFault(inv.method + " carries no value to apply");
  }
  PinStimulus out{inv.method, OpenCircuit{}, {}};
  const ParamValue& primary = inv.params.front().value;
  if (const std::string* text = std::get_if<std::string>(&primary)) {
    out.value = BitLiteral{*text};
  } else if (std::holds_alternative<OpenCircuit>(primary)) {
    out.value = OpenCircuit{};
  } else {
    out.value = *numeric(primary, env);
  }
  for (std::size_t i = 1; i < inv.params.size(); ++i) {
    out.aux.emplace(inv.params[i].name, format_param(inv.params[i].value));
  }
  return out;
}

class Run {
 public:
  Run(const TestPlan& plan, const Stand& stand, const Env& env, DutModel& dut,
      const ExecuteOptions& options)
      : plan_(plan), stand_(stand), env_(env), dut_(dut), options_(options) {
    report_.test = plan.script.name;
    report_.dut = plan.script.dut;
    report_.env = env;
    report_.settle = plan.script.settle;
    report_.steps_total = plan.steps.size();
  }

  RunReport run() {
    try {
      init();
      for (const PlanStep& step : plan_.steps) {
        current_step_ = step.index;
        execute_step(step);
      }
      report_.verdict = Verdict::pass;
      for (const StepReport& s : report_.steps) {
        if (s.verdict != Verdict::pass) report_.verdict = Verdict::fail;
      }
    } catch (const AllocationError& e) {
      abort(RunError::Kind::allocation, e.what(), e.failure());
    } catch (const EvalError& e) {
      abort(RunError::Kind::env, e.what(), std::nullopt);
    } catch (const DutFault& e) {
      abort(RunError::Kind::dut, e.what(), std::nullopt);
    }
    return std::move(report_);
  }

 private:
  void abort(RunError::Kind kind, std::string message,
             std::optional<AllocationFailure> failure) {
    report_.verdict = Verdict::error;
    report_.error = RunError{kind, current_step_, std::move(message),
                             std::move(failure)};
  }

  void add_requirements(std::vector<Requirement>& out, const Statement& st) {
    const ScriptSignal* signal = plan_.script.signal(st.signal);
    if (signal == nullptr) {
      throw DutFault("signal " + st.signal + " is not in the manifest");
    }
    for (const std::string& pin : signal->pins) {
      out.push_back(Requirement{st.signal, pin, st.invocation});
    }
  }

  // Sends new or changed stimuli to the DUT; returns the trace.
  std::vector<AppliedStimulus> apply(const Allocation& alloc) {
    std::vector<AppliedStimulus> trace;
    Allocation next_held;
    for (const Binding& b : alloc.bindings) {
      if (b.requirement.is_check()) continue;
      const Requirement& req = b.requirement;
      AppliedStimulus a{req.signal, req.pin,  req.invocation, b.route,
                        b.resource, b.connector, false,     b.reassigned};
      auto it = applied_.find(req.pin);
      if (it == applied_.end() || it->second != req.invocation) {
        const PinStimulus stimulus = to_pin_stimulus(req.invocation, env_);
        dut_call([&] { dut_.set_input(req.pin, stimulus); });
        applied_.insert_or_assign(req.pin, req.invocation);
        a.changed = true;
      }
      trace.push_back(std::move(a));
      next_held.bindings.push_back(b);
    }
    held_ = std::move(next_held);
    return trace;
  }

  void dwell(Duration dt) {
    dut_call([&] { dut_.advance(dt); });
    if (options_.pace_wall_clock) std::this_thread::sleep_for(dt);
    report_.virtual_time += dt;
  }

  void init() {
    std::vector<Requirement> reqs;
    for (const Statement& st : plan_.script.init) add_requirements(reqs, st);
    const Allocation alloc = allocate(reqs, stand_, env_, held_);
    report_.init = apply(alloc);
    dwell(plan_.script.settle);
  }

  void execute_step(const PlanStep& step) {
    std::vector<Requirement> reqs;
    for (const Statement& st : step.active_stimuli) add_requirements(reqs, st);
    for (const Statement& st : step.checks) add_requirements(reqs, st);
    const Allocation alloc = allocate(reqs, stand_, env_, held_);

    StepReport out;
    out.index = step.index;
    out.dt = step.dt;
    out.stimuli = apply(alloc);
    dwell(step.dt);
    elapsed_ += step.dt;
    out.t_end = elapsed_;

    for (const Binding& b : alloc.bindings) {
      if (!b.requirement.is_check()) continue;
      out.checks.push_back(sample(b));
    }
    out.verdict = Verdict::pass;
    for (const CheckResult& c : out.checks) {
      if (!c.pass) out.verdict = Verdict::fail;
    }
    report_.steps.push_back(std::move(out));
  }

  CheckResult sample(const Binding& b) {
    const Requirement& req = b.requirement;
    if (req.invocation.method != "get_u") {
      throw DutFault("the DUT cannot measure " + req.invocation.method +
                     " on " + req.pin);
    }
    CheckResult r;
    r.signal = req.signal;
    r.pin = req.pin;
    r.method = req.invocation.method;
    r.resource = b.resource;
    r.connector = b.connector;
    for (const Param& p : req.invocation.params) {
      if (p.name.ends_with("_min")) r.min = numeric(p.value, env_);
      if (p.name.ends_with("_max")) r.max = numeric(p.value, env_);
    }
    dut_call([&] { r.measured = dut_.read_pin(req.pin); });
    r.pass = (!r.min || *r.min <= r.measured) && (!r.max || r.measured <= *r.max);
    return r;
  }

  template <typename F>
  void dut_call(F&& f) {
    try {
      f();
    } catch (const std::invalid_argument& e) {
      throw DutFault(e.what());
    } catch (const std::out_of_range& e) {
      throw DutFault(e.what());
    }
  }

  const TestPlan& plan_;
  const Stand& stand_;
  const Env& env_;
  DutModel& dut_;
  ExecuteOptions options_;

  RunReport report_;
  Allocation held_;
  std::map<std::string, MethodInvocation, std::less<>> applied_;
  Duration elapsed_{};
  std::optional<std::size_t> current_step_;
};

}  // namespace

RunReport execute(const TestPlan& plan, const Stand& stand, const Env& env,
                  DutModel& dut, const ExecuteOptions& options) {
  return Run(plan, stand, env, dut, options).run();
}

}  // namespace comptest
