#include <cctype>
#include <sstream>

#include "comptest/executor.hpp"
#include "json.hpp"

namespace comptest {

namespace {

using Json = nlohmann::ordered_json;

Json optional_number(const std::optional<double>& v) {
  return v ? Json(*v) : Json(nullptr);
}

Json connector_json(const std::optional<Connector>& c) {
  return c ? Json(to_string(*c)) : Json(nullptr);
}

Json stimulus_json(const AppliedStimulus& s) {
  Json params = Json::object();
  for (const Param& p : s.invocation.params) {
    params[p.name] = format_param(p.value);
  }
  return Json{{"signal", s.signal},
              {"pin", s.pin},
              {"method", s.invocation.method},
              {"params", std::move(params)},
              {"route", std::string(to_string(s.route))},
              {"resource", s.resource.empty() ? Json(nullptr) : Json(s.resource)},
              {"connector", connector_json(s.connector)},
              {"changed", s.changed},
              {"reassigned", s.reassigned}};
}

Json check_json(const CheckResult& c) {
  return Json{{"signal", c.signal},
              {"pin", c.pin},
              {"method", c.method},
              {"min", optional_number(c.min)},
              {"max", optional_number(c.max)},
              {"measured", c.measured},
              {"pass", c.pass},
              {"resource", c.resource.empty() ? Json(nullptr) : Json(c.resource)},
              {"connector", connector_json(c.connector)}};
}

std::string describe(const AppliedStimulus& s) {
  std::string out = s.signal + "/" + s.pin + " " + s.invocation.method + "(";
  for (std::size_t i = 0; i < s.invocation.params.size(); ++i) {
    if (i != 0) out += ", ";
    out += s.invocation.params[i].name + "=" +
           format_param(s.invocation.params[i].value);
  }
  out += ") ";
  switch (s.route) {
    case Route::resource:
      out += "via " + s.resource + " " + to_string(*s.connector);
      break;
    case Route::open_circuit:
      out += "open circuit, no resource";
      break;
    case Route::bus:
      out += "via bus";
      break;
  }
  if (s.reassigned) out += " (reassigned)";
  return out;
}

std::string upper(std::string_view s) {
  std::string out(s);
  for (char& c : out) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  return out;
}

}  // namespace

std::string report_to_json(const RunReport& report) {
  Json env = Json::object();
  for (const auto& [name, entry] : report.env.entries()) env[name] = entry.value;

  std::size_t passed = 0;
  for (const StepReport& s : report.steps) passed += s.verdict == Verdict::pass;

  Json init = Json::array();
  for (const AppliedStimulus& s : report.init) init.push_back(stimulus_json(s));

  Json steps = Json::array();
  for (const StepReport& s : report.steps) {
    Json stimuli = Json::array();
    for (const AppliedStimulus& a : s.stimuli) stimuli.push_back(stimulus_json(a));
    Json checks = Json::array();
    for (const CheckResult& c : s.checks) checks.push_back(check_json(c));
    steps.push_back(Json{{"n", s.index},
                         {"dt_us", s.dt.count()},
                         {"dt_s", to_seconds(s.dt)},
                         {"t_end_us", s.t_end.count()},
                         {"t_end_s", to_seconds(s.t_end)},
                         {"verdict", std::string(to_string(s.verdict))},
                         {"stimuli", std::move(stimuli)},
                         {"checks", std::move(checks)}});
  }

  Json error = nullptr;
  if (report.error) {
    const RunError& e = *report.error;
    error = Json{{"kind", std::string(to_string(e.kind))},
                 {"step", e.step ? Json(*e.step) : Json(nullptr)},
                 {"message", e.message}};
    if (e.allocation) {
      Json rejections = Json::array();
      for (const Rejection& r : e.allocation->rejections) {
        rejections.push_back(Json{{"resource", r.resource},
                                  {"reason", std::string(to_string(r.reason))},
                                  {"detail", r.detail}});
      }
      error["allocation"] = Json{{"signal", e.allocation->signal},
                                 {"pin", e.allocation->pin},
                                 {"method", e.allocation->method},
                                 {"parameter", e.allocation->parameter},
                                 {"rejections", std::move(rejections)}};
    }
  }

  Json doc{{"format", 1},
           {"test", report.test},
           {"dut", report.dut},
           {"env", std::move(env)},
           {"verdict", std::string(to_string(report.verdict))},
           {"summary",
            Json{{"steps_total", report.steps_total},
                 {"steps_executed", report.steps.size()},
                 {"steps_passed", passed},
                 {"checks_total", report.checks_total()},
                 {"checks_failed", report.checks_failed()},
                 {"virtual_time_us", report.virtual_time.count()},
                 {"virtual_time_s", to_seconds(report.virtual_time)}}},
           {"init", Json{{"settle_us", report.settle.count()},
                         {"stimuli", std::move(init)}}},
           {"steps", std::move(steps)},
           {"error", std::move(error)}};
  return doc.dump(2) + "\n";
}

std::string report_to_text(const RunReport& report) {
  std::ostringstream out;
  out << "test " << report.test << " on " << report.dut;
  for (const auto& [name, entry] : report.env.entries()) {
    out << ", " << name << "=" << format_number(entry.value);
  }
  out << "\n";
  out << "init (settle " << format_seconds(report.settle) << " s)\n";
  for (const AppliedStimulus& s : report.init) out << "  " << describe(s) << "\n";

  std::size_t passed = 0;
  for (const StepReport& s : report.steps) {
    passed += s.verdict == Verdict::pass;
    out << "step " << s.index << "  dt " << format_seconds(s.dt) << " s  t "
        << format_seconds(s.t_end) << " s  " << upper(to_string(s.verdict))
        << "\n";
    for (const AppliedStimulus& a : s.stimuli) {
      if (a.changed || a.reassigned) out << "  set   " << describe(a) << "\n";
    }
    for (const CheckResult& c : s.checks) {
      out << "  check " << c.signal << "/" << c.pin << " " << c.method << " "
          << format_number(c.measured) << " in ["
          << (c.min ? format_number(*c.min) : std::string("-inf")) << ", "
          << (c.max ? format_number(*c.max) : std::string("inf")) << "] "
          << (c.pass ? "ok" : "FAILED") << " via " << c.resource << " "
          << (c.connector ? to_string(*c.connector) : std::string("-")) << "\n";
    }
  }
  if (report.error) {
    out << "error (" << to_string(report.error->kind) << ")";
    if (report.error->step) out << " in step " << *report.error->step;
    else out << " during init";
    out << ": " << report.error->message << "\n";
  }
  out << "result: " << upper(to_string(report.verdict)) << "  "
      << report.steps.size() << "/" << report.steps_total
      << " steps executed, " << passed << " passed, "
      << report.checks_total() << " checks, " << report.checks_failed()
      << " failed, virtual time " << format_seconds(report.virtual_time)
      << " s\n";
  return out.str();
}

}  // namespace comptest
