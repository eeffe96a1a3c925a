#ifndef COMPTEST_COMPILER_HPP
#define COMPTEST_COMPILER_HPP

#include <string>

#include "comptest/error.hpp"
#include "comptest/sheet_model.hpp"
#include "comptest/test_script.hpp"

namespace comptest {

/// Raised when sheets cannot be compiled; carries every violation found.
class CompileError : public Error {
 public:
  explicit CompileError(ValidationReport violations);
  const ValidationReport& violations() const noexcept { return violations_; }

 private:
  ValidationReport violations_;
};

enum class Role { stimulus, check };

/// Turns a status row into the method statement that applies it.
///
/// get_* rows become `<attr>_max` / `<attr>_min` bounds (in that order);
/// with a scale variable they are symbolic, `(0.7*ubatt)`. put_* rows map
/// nom to the attribut parameter and pass D1-D3 through as d1..d3.
/// Throws CompileError when the row has nothing to lower or the method
/// class does not fit `role`.
MethodInvocation lower_status(const StatusDef& status, Role role);

struct CompileOptions {
  std::string dut = "dut";
  Duration settle = Duration{100'000};
};

/// Binds validated sheets into a script. Steps stay sparse; holding
/// stimuli between steps is the interpreter's job. Throws CompileError.
TestScript compile(const SignalTable& signals, const StatusTable& statuses,
                   const TestSequence& test, const CompileOptions& options = {});

/// Renders the script as UTF-8 XML with two-space indentation. Output is a
/// pure function of the script.
std::string emit_xml(const TestScript& script);

}  // namespace comptest

#endif  // COMPTEST_COMPILER_HPP
