#ifndef COMPTEST_TESTS_ORACLES_HPP
#define COMPTEST_TESTS_ORACLES_HPP

// Reference implementations used to cross-check the library. Written
// against the documented rules, not against the library's internals.

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "comptest/allocator.hpp"
#include "comptest/sheet_model.hpp"
#include "comptest/stand.hpp"

namespace comptest::oracle {

/// Every rule an allocation must satisfy. Returns one line per broken rule,
/// empty when the allocation is sound.
std::vector<std::string> check_allocation(std::span<const Requirement> reqs,
                                          const Stand& stand, const Env& env,
                                          const Allocation& alloc);

/// Exhaustive search over every (resource row, connector) choice per
/// requirement. Returns a feasible allocation if one exists.
std::optional<Allocation> enumerate_allocation(std::span<const Requirement> reqs,
                                               const Stand& stand,
                                               const Env& env);

/// Infix evaluator (shunting-yard) over expression text. nullopt on a
/// division by zero or an unbound variable.
std::optional<double> evaluate_text(const std::string& text,
                                    const std::map<std::string, double>& vars);

/// Status each input signal holds in step `k`, by scanning the sparse
/// sheet backwards.
std::map<std::string, std::string> held_at(const TestSequence& test,
                                           const SignalTable& signals,
                                           std::size_t k);

}  // namespace comptest::oracle

#endif  // COMPTEST_TESTS_ORACLES_HPP
