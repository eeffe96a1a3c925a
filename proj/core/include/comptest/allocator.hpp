#ifndef COMPTEST_ALLOCATOR_HPP
#define COMPTEST_ALLOCATOR_HPP

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "comptest/error.hpp"
#include "comptest/expr.hpp"
#include "comptest/stand.hpp"
#include "comptest/test_script.hpp"

namespace comptest {

/// One method to carry out on one pin during a step.
struct Requirement {
  std::string signal;
  std::string pin;
  MethodInvocation invocation;

  /// get_* requirements are sampled sequentially at the end of the dwell
  /// and may time-share a resource and a connector group.
  bool is_check() const;
  friend bool operator==(const Requirement&, const Requirement&) = default;
};

enum class Route {
  resource,      // through a resource and a matrix connector
  open_circuit,  // INF: the pin's connectors are disengaged
  bus,           // stand bus interface, no switched resource
};

std::string_view to_string(Route r);

struct Binding {
  Requirement requirement;
  Route route = Route::resource;
  std::optional<std::size_t> resource_row;  // index into ResourceTable::rows
  std::string resource;                     // id, empty unless routed
  std::optional<Connector> connector;
  bool reassigned = false;  // held stimulus moved to another resource

  friend bool operator==(const Binding&, const Binding&) = default;
};

/// Bindings in requirement order.
struct Allocation {
  std::vector<Binding> bindings;

  const Binding* find(std::string_view pin) const;
  friend bool operator==(const Allocation&, const Allocation&) = default;
};

enum class RejectReason { no_method, no_connection, range, resource_busy, group_busy };

std::string_view to_string(RejectReason r);

struct Rejection {
  std::string resource;
  RejectReason reason = RejectReason::no_method;
  std::string detail;
  friend bool operator==(const Rejection&, const Rejection&) = default;
};

struct AllocationFailure {
  std::string signal;
  std::string pin;
  std::string method;
  std::string parameter;  // "name=value" of the offending parameter
  std::vector<Rejection> rejections;  // one per resource row, table order
};

class AllocationError : public Error {
 public:
  explicit AllocationError(AllocationFailure failure);
  const AllocationFailure& failure() const noexcept { return failure_; }

 private:
  AllocationFailure failure_;
};

/// Finds a conflict-free binding of every requirement to a resource.
///
/// Search is deterministic backtracking: requirements in the given order,
/// candidate resources in table row order. Open-circuit and bus
/// requirements take no resource. Stimuli held from `held` with an
/// unchanged invocation first keep their binding; only if that leaves no
/// solution are they searched afresh (and flagged `reassigned` if moved).
///
/// Throws AllocationError naming the unsatisfiable requirement and why each
/// resource was rejected, or EvalError if a symbolic bound references an
/// unbound variable.
Allocation allocate(std::span<const Requirement> requirements,
                    const Stand& stand, const Env& env,
                    const Allocation& held = {});

}  // namespace comptest

#endif  // COMPTEST_ALLOCATOR_HPP
