#ifndef COMPTEST_EXPR_HPP
#define COMPTEST_EXPR_HPP

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace comptest {

/// Immutable arithmetic expression tree over decimal constants, lowercase
/// variables and the four binary operators. Copies share nodes.
///
/// Grammar (whitespace between tokens is ignored):
///
///     expr   := term (('+' | '-') term)*
///     term   := factor (('*' | '/') factor)*
///     factor := number | ident | '(' expr ')'
///     number := '-'? digit+ ('.' digit+)?
///     ident  := [a-z_][a-z0-9_]*
///
/// Parentheses are kept as `group` nodes so a tree remembers how it was
/// written, but equality (`==`) is structural and looks through them.
class Expr {
 public:
  enum class Kind { constant, variable, binary, group };
  enum class Op : char { add = '+', sub = '-', mul = '*', div = '/' };

  static Expr constant(double value);
  static Expr variable(std::string name);
  static Expr binary(Op op, Expr lhs, Expr rhs);
  static Expr group(Expr inner);

  Kind kind() const;
  double value() const;             // constant
  const std::string& name() const;  // variable
  Op op() const;                    // binary
  const Expr& lhs() const;          // binary
  const Expr& rhs() const;          // binary
  const Expr& inner() const;        // group

  /// Equality modulo grouping.
  friend bool operator==(const Expr& a, const Expr& b);
  /// Exact equality, grouping included.
  bool identical(const Expr& other) const;

  /// Collects referenced variable names in first-use order.
  std::vector<std::string> variables() const;

 private:
  struct Node;
  explicit Expr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

/// Variable bindings for evaluation, e.g. ubatt = 12 V.
class Env {
 public:
  struct Entry {
    double value = 0.0;
    std::string unit;
    friend bool operator==(const Entry&, const Entry&) = default;
  };

  Env() = default;

  void bind(std::string name, double value, std::string unit = {});
  std::optional<double> lookup(std::string_view name) const;
  const std::map<std::string, Entry, std::less<>>& entries() const {
    return entries_;
  }

  friend bool operator==(const Env&, const Env&) = default;

 private:
  std::map<std::string, Entry, std::less<>> entries_;
};

/// Throws ExprSyntaxError carrying the byte offset of the failure.
Expr parse_expr(std::string_view text);

/// Throws EvalError on an unbound variable or a division by zero.
double eval_expr(const Expr& e, const Env& env);

/// Canonical text: decimal point, no spaces, every binary operation wrapped
/// in exactly one pair of parentheses, constants in shortest fixed form.
std::string render_expr(const Expr& e);

}  // namespace comptest

#endif  // COMPTEST_EXPR_HPP
