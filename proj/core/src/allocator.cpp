#include "comptest/allocator.hpp"

#include <algorithm>
#include <map>

#include "comptest/sheet_model.hpp"

namespace comptest {

bool Requirement::is_check() const {
  return method_class(invocation.method) == MethodClass::get;
}

std::string_view to_string(Route r) {
  switch (r) {
    case Route::resource:
      return "resource";
    case Route::open_circuit:
      return "open_circuit";
    case Route::bus:
      return "bus";
  }
  return "?";
}

std::string_view to_string(RejectReason r) {
  switch (r) {
    case RejectReason::no_method:
      return "no method";
    case RejectReason::no_connection:
      return "no connection";
    case RejectReason::range:
      return "range";
    case RejectReason::resource_busy:
      return "resource busy";
    case RejectReason::group_busy:
      return "group busy";
  }
  return "?";
}

const Binding* Allocation::find(std::string_view pin) const {
  for (const Binding& b : bindings) {
    if (b.requirement.pin == pin) return &b;
  }
  return nullptr;
}

namespace {

std::string describe(const AllocationFailure& f) {
  std::string msg = "no resource for " + f.method;
  if (!f.parameter.empty()) msg += " " + f.parameter;
  msg += " on pin " + f.pin;
  if (!f.signal.empty()) msg += " (signal " + f.signal + ")";
  if (!f.rejections.empty()) msg += ":";
  for (std::size_t i = 0; i < f.rejections.size(); ++i) {
    const Rejection& r = f.rejections[i];
    msg += (i == 0 ? " " : "; ") + r.resource + " rejected, " +
           std::string(to_string(r.reason));
    if (!r.detail.empty()) msg += " (" + r.detail + ")";
  }
  if (f.rejections.empty()) msg += ": the stand has no resources";
  return msg;
}

std::string primary_parameter(const MethodInvocation& inv) {
  if (inv.params.empty()) return {};
  return inv.params.front().name + "=" + format_param(inv.params.front().value);
}

struct Candidate {
  std::size_t row;
  Connector connector;
};

// Static feasibility of one requirement against every resource row.
struct Analysis {
  Route route = Route::resource;
  std::vector<Candidate> candidates;
  std::vector<Rejection> rejections;  // rows that can never serve it
  std::string range_parameter;        // first out-of-range "name=value"
};

Analysis analyze(const Requirement& req, const Stand& stand, const Env& env) {
  Analysis a;
  if (stand.bus_methods.contains(req.invocation.method)) {
    a.route = Route::bus;
    return a;
  }
  if (is_open_circuit(req.invocation)) {
    a.route = Route::open_circuit;
    return a;
  }

  // Numeric parameters, with symbolic bounds evaluated in this stand's env.
  std::vector<std::pair<std::string, double>> values;
  for (const Param& p : req.invocation.params) {
    if (const double* d = std::get_if<double>(&p.value)) {
      values.emplace_back(p.name, *d);
    } else if (const Expr* e = std::get_if<Expr>(&p.value)) {
      values.emplace_back(p.name, eval_expr(*e, env));
    }
  }

  const auto& rows = stand.resources.rows;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const ResourceDef& r = rows[i];
    if (r.method != req.invocation.method) {
      a.rejections.push_back({r.id, RejectReason::no_method,
                              "supports " + r.method});
      continue;
    }
    auto connector = stand.connections.find(r.id, req.pin);
    if (!connector) {
      a.rejections.push_back({r.id, RejectReason::no_connection,
                              "not wired to " + req.pin});
      continue;
    }
    auto out_of_range =
        std::find_if(values.begin(), values.end(), [&](const auto& v) {
          return v.second < r.min || v.second > r.max;
        });
    if (out_of_range != values.end()) {
      const std::string param =
          out_of_range->first + "=" + format_number(out_of_range->second);
      if (a.range_parameter.empty()) a.range_parameter = param;
      a.rejections.push_back(
          {r.id, RejectReason::range,
           param + " outside [" + format_number(r.min) + ", " +
               format_number(r.max) + "]" +
               (r.unit.empty() ? std::string{} : " " + r.unit)});
      continue;
    }
    a.candidates.push_back({i, *connector});
  }
  return a;
}

AllocationFailure make_failure(const Requirement& req, const Analysis& a,
                               std::vector<Rejection> rejections) {
  AllocationFailure f;
  f.signal = req.signal;
  f.pin = req.pin;
  f.method = req.invocation.method;
  f.parameter = a.range_parameter.empty() ? primary_parameter(req.invocation)
                                          : a.range_parameter;
  f.rejections = std::move(rejections);
  return f;
}

// Backtracking over the requirements that need a resource.
class Search {
 public:
  Search(std::span<const Requirement> reqs, const std::vector<Analysis>& info,
         const Stand& stand, std::vector<std::size_t> order,
         std::vector<std::optional<Candidate>> pinned)
      : reqs_(reqs),
        info_(info),
        stand_(stand),
        order_(std::move(order)),
        pinned_(std::move(pinned)),
        chosen_(reqs.size()) {}

  bool run() { return step(0); }

  const std::vector<std::optional<Candidate>>& chosen() const { return chosen_; }

  // Requirement (by index) at which the deepest failure happened, with the
  // per-row reasons observed there.
  std::size_t failed_requirement() const { return order_[deepest_]; }
  const std::vector<Rejection>& failed_rejections() const {
    return deepest_rejections_;
  }

 private:
  const std::string& id(const Candidate& c) const {
    return stand_.resources.rows[c.row].id;
  }

  std::optional<Rejection> conflict(std::size_t req, const Candidate& c) const {
    const bool check = reqs_[req].is_check();
    const std::string& res = id(c);
    for (std::size_t other = 0; other < chosen_.size(); ++other) {
      if (!chosen_[other] || other == req) continue;
      const bool other_check = reqs_[other].is_check();
      if (check && other_check) continue;  // sequential sampling
      const Candidate& o = *chosen_[other];
      if (id(o) == res) {
        return Rejection{res, RejectReason::resource_busy,
                         "in use on " + reqs_[other].pin};
      }
      if (o.connector.group_key() == c.connector.group_key()) {
        return Rejection{res, RejectReason::group_busy,
                         to_string(c.connector) + " conflicts with " +
                             to_string(o.connector) + " on " +
                             reqs_[other].pin};
      }
    }
    return std::nullopt;
  }

  bool step(std::size_t depth) {
    if (depth == order_.size()) return true;
    const std::size_t req = order_[depth];
    std::vector<Rejection> seen;
    auto try_candidate = [&](const Candidate& c) {
      if (auto clash = conflict(req, c)) {
        seen.push_back(*clash);
        return false;
      }
      chosen_[req] = c;
      if (step(depth + 1)) return true;
      chosen_[req].reset();
      return false;
    };

    if (pinned_[req]) {
      if (try_candidate(*pinned_[req])) return true;
    } else {
      for (const Candidate& c : info_[req].candidates) {
        if (try_candidate(c)) return true;
      }
    }

    if (!have_failure_ || depth > deepest_) {
      have_failure_ = true;
      deepest_ = depth;
      deepest_rejections_ = merge(req, seen);
    }
    return false;
  }

  // Static and dynamic rejections in resource table order.
  std::vector<Rejection> merge(std::size_t req,
                               const std::vector<Rejection>& dynamic) const {
    std::vector<Rejection> all = info_[req].rejections;
    all.insert(all.end(), dynamic.begin(), dynamic.end());
    auto row_of = [this](const std::string& resource) {
      const auto& rows = stand_.resources.rows;
      return std::find_if(rows.begin(), rows.end(),
                          [&](const ResourceDef& r) { return r.id == resource; }) -
             rows.begin();
    };
    std::stable_sort(all.begin(), all.end(),
                     [&](const Rejection& a, const Rejection& b) {
                       return row_of(a.resource) < row_of(b.resource);
                     });
    return all;
  }

  std::span<const Requirement> reqs_;
  const std::vector<Analysis>& info_;
  const Stand& stand_;
  std::vector<std::size_t> order_;
  std::vector<std::optional<Candidate>> pinned_;
  std::vector<std::optional<Candidate>> chosen_;
  bool have_failure_ = false;
  std::size_t deepest_ = 0;
  std::vector<Rejection> deepest_rejections_;
};

}  // namespace

AllocationError::AllocationError(AllocationFailure failure)
    : Error(describe(failure)), failure_(std::move(failure)) {}

Allocation allocate(std::span<const Requirement> requirements,
                    const Stand& stand, const Env& env,
                    const Allocation& held) {
  std::vector<Analysis> info;
  info.reserve(requirements.size());
  std::vector<std::size_t> order;
  for (std::size_t i = 0; i < requirements.size(); ++i) {
    info.push_back(analyze(requirements[i], stand, env));
    if (info.back().route != Route::resource) continue;
    if (info.back().candidates.empty()) {
      throw AllocationError(
          make_failure(requirements[i], info.back(), info.back().rejections));
    }
    order.push_back(i);
  }

  // Unchanged held stimuli keep their resource when that still works.
  std::vector<std::optional<Candidate>> pinned(requirements.size());
  bool any_pinned = false;
  for (std::size_t i : order) {
    const Requirement& req = requirements[i];
    if (req.is_check()) continue;
    const Binding* prev = held.find(req.pin);
    if (prev == nullptr || prev->route != Route::resource ||
        !prev->resource_row || prev->requirement.invocation != req.invocation) {
      continue;
    }
    for (const Candidate& c : info[i].candidates) {
      if (c.row == *prev->resource_row && c.connector == prev->connector) {
        pinned[i] = c;
        any_pinned = true;
      }
    }
  }

  Search pinned_search(requirements, info, stand, order, pinned);
  const Search* found = nullptr;
  std::optional<Search> free_search;
  if (any_pinned && pinned_search.run()) {
    found = &pinned_search;
  } else {
    free_search.emplace(requirements, info, stand, order,
                        std::vector<std::optional<Candidate>>(requirements.size()));
    if (!free_search->run()) {
      const std::size_t bad = free_search->failed_requirement();
      throw AllocationError(make_failure(requirements[bad], info[bad],
                                         free_search->failed_rejections()));
    }
    found = &*free_search;
  }

  Allocation out;
  out.bindings.reserve(requirements.size());
  for (std::size_t i = 0; i < requirements.size(); ++i) {
    Binding b{requirements[i], info[i].route, std::nullopt, {}, std::nullopt,
              false};
    if (const auto& c = found->chosen()[i]) {
      const ResourceDef& r = stand.resources.rows[c->row];
      b.resource_row = c->row;
      b.resource = r.id;
      b.connector = c->connector;
      if (!requirements[i].is_check()) {
        const Binding* prev = held.find(requirements[i].pin);
        b.reassigned = prev != nullptr && prev->route == Route::resource &&
                       prev->requirement.invocation == requirements[i].invocation &&
                       (prev->resource != r.id || prev->connector != c->connector);
      }
    }
    out.bindings.push_back(std::move(b));
  }
  return out;
}

}  // namespace comptest
