#include "comptest/expr.hpp"

#include <algorithm>
#include <charconv>
#include <variant>

#include "comptest/error.hpp"
#include "comptest/numeric.hpp"

namespace comptest {

struct Expr::Node {
  struct Binary {
    Op op;
    Expr lhs;
    Expr rhs;
  };
  struct Group {
    Expr inner;
  };
  std::variant<double, std::string, Binary, Group> data;
};

Expr Expr::constant(double value) {
  return Expr(std::make_shared<const Node>(Node{value}));
}

Expr Expr::variable(std::string name) {
  return Expr(std::make_shared<const Node>(Node{std::move(name)}));
}

Expr Expr::binary(Op op, Expr lhs, Expr rhs) {
  return Expr(std::make_shared<const Node>(
      Node{Node::Binary{op, std::move(lhs), std::move(rhs)}}));
}

Expr Expr::group(Expr inner) {
  return Expr(std::make_shared<const Node>(Node{Node::Group{std::move(inner)}}));
}

Expr::Kind Expr::kind() const { return static_cast<Kind>(node_->data.index()); }
double Expr::value() const { return std::get<double>(node_->data); }
const std::string& Expr::name() const {
  return std::get<std::string>(node_->data);
}
Expr::Op Expr::op() const { return std::get<Node::Binary>(node_->data).op; }
const Expr& Expr::lhs() const { return std::get<Node::Binary>(node_->data).lhs; }
const Expr& Expr::rhs() const { return std::get<Node::Binary>(node_->data).rhs; }
const Expr& Expr::inner() const {
  return std::get<Node::Group>(node_->data).inner;
}

namespace {

const Expr& strip_groups(const Expr& e) {
  const Expr* p = &e;
  while (p->kind() == Expr::Kind::group) p = &p->inner();
  return *p;
}

}  // namespace

bool operator==(const Expr& a_in, const Expr& b_in) {
  const Expr& a = strip_groups(a_in);
  const Expr& b = strip_groups(b_in);
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case Expr::Kind::constant:
      return a.value() == b.value();
    case Expr::Kind::variable:
      return a.name() == b.name();
    case Expr::Kind::binary:
      return a.op() == b.op() && a.lhs() == b.lhs() && a.rhs() == b.rhs();
    case Expr::Kind::group:
      break;
  }
  return false;
}

bool Expr::identical(const Expr& other) const {
  if (node_ == other.node_) return true;
  if (kind() != other.kind()) return false;
  switch (kind()) {
    case Kind::constant:
      return value() == other.value();
    case Kind::variable:
      return name() == other.name();
    case Kind::binary:
      return op() == other.op() && lhs().identical(other.lhs()) &&
             rhs().identical(other.rhs());
    case Kind::group:
      return inner().identical(other.inner());
  }
  return false;
}

std::vector<std::string> Expr::variables() const {
  std::vector<std::string> out;
  auto walk = [&out](const Expr& e, auto& self) -> void {
    switch (e.kind()) {
      case Kind::constant:
        break;
      case Kind::variable:
        if (std::find(out.begin(), out.end(), e.name()) == out.end()) {
          out.push_back(e.name());
        }
        break;
      case Kind::binary:
        self(e.lhs(), self);
        self(e.rhs(), self);
        break;
      case Kind::group:
        self(e.inner(), self);
        break;
    }
  };
  walk(*this, walk);
  return out;
}

void Env::bind(std::string name, double value, std::string unit) {
  entries_[std::move(name)] = Entry{value, std::move(unit)};
}

std::optional<double> Env::lookup(std::string_view name) const {
  auto it = entries_.find(name);
  if (it == entries_.end()) return std::nullopt;
  return it->second.value;
}

namespace {

bool is_digit(char c) { return c >= '0' && c <= '9'; }
bool is_ident_start(char c) { return (c >= 'a' && c <= 'z') || c == '_'; }
bool is_ident_char(char c) { return is_ident_start(c) || is_digit(c); }
bool is_upper(char c) { return c >= 'A' && c <= 'Z'; }

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Expr parse() {
    skip_space();
    if (at_end()) fail("empty expression");
    Expr e = expr();
    skip_space();
    if (!at_end()) {
      if (peek() == ')') fail("unbalanced ')'");
      fail(std::string("unexpected '") + peek() + "'");
    }
    return e;
  }

 private:
  Expr expr() {
    Expr lhs = term();
    for (;;) {
      skip_space();
      if (at_end() || (peek() != '+' && peek() != '-')) return lhs;
      const auto op = static_cast<Expr::Op>(text_[pos_++]);
      lhs = Expr::binary(op, std::move(lhs), term());
    }
  }

  Expr term() {
    Expr lhs = factor();
    for (;;) {
      skip_space();
      if (at_end() || (peek() != '*' && peek() != '/')) return lhs;
      const auto op = static_cast<Expr::Op>(text_[pos_++]);
      lhs = Expr::binary(op, std::move(lhs), factor());
    }
  }

  Expr factor() {
    skip_space();
    if (at_end()) fail("expected a number, variable or '('");
    const char c = peek();
    if (c == '(') {
      ++pos_;
      Expr inner = expr();
      skip_space();
      if (at_end() || peek() != ')') fail("expected ')'");
      ++pos_;
      return Expr::group(std::move(inner));
    }
    if (is_digit(c) ||
        (c == '-' && pos_ + 1 < text_.size() && is_digit(text_[pos_ + 1]))) {
      return number();
    }
    if (is_ident_start(c)) {
      const std::size_t start = pos_;
      while (!at_end() && is_ident_char(peek())) ++pos_;
      if (!at_end() && is_upper(peek())) {
        fail("variables must be lowercase identifiers");
      }
      return Expr::variable(std::string(text_.substr(start, pos_ - start)));
    }
    if (is_upper(c)) fail("variables must be lowercase identifiers");
    fail(std::string("unexpected '") + c + "'");
  }

  Expr number() {
    const std::size_t start = pos_;
    if (peek() == '-') ++pos_;
    while (!at_end() && is_digit(peek())) ++pos_;
    if (!at_end() && peek() == '.') {
      ++pos_;
      if (at_end() || !is_digit(peek())) fail("expected digit after '.'");
      while (!at_end() && is_digit(peek())) ++pos_;
    }
    double value = 0.0;
    const char* first = text_.data() + start;
    const char* last = text_.data() + pos_;
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last) {
      pos_ = start;
      fail("number out of range");
    }
    return Expr::constant(value);
  }

  void skip_space() {
    while (!at_end() && (peek() == ' ' || peek() == '\t')) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }

  [[noreturn]] void fail(const std::string& message) const {
    throw ExprSyntaxError(pos_, message);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

void render_into(const Expr& e, std::string& out) {
  switch (e.kind()) {
    case Expr::Kind::constant:
      out += format_number(e.value());
      break;
    case Expr::Kind::variable:
      out += e.name();
      break;
    case Expr::Kind::binary:
      out += '(';
      render_into(e.lhs(), out);
      out += static_cast<char>(e.op());
      render_into(e.rhs(), out);
      out += ')';
      break;
    case Expr::Kind::group:
      render_into(e.inner(), out);
      break;
  }
}

}  // namespace

Expr parse_expr(std::string_view text) { return Parser(text).parse(); }

double eval_expr(const Expr& e, const Env& env) {
  switch (e.kind()) {
    case Expr::Kind::constant:
      return e.value();
    case Expr::Kind::variable: {
      auto v = env.lookup(e.name());
      if (!v) throw EvalError("unbound variable " + e.name());
      return *v;
    }
    case Expr::Kind::group:
      return eval_expr(e.inner(), env);
    case Expr::Kind::binary: {
      const double a = eval_expr(e.lhs(), env);
      const double b = eval_expr(e.rhs(), env);
      switch (e.op()) {
        case Expr::Op::add:
          return a + b;
        case Expr::Op::sub:
          return a - b;
        case Expr::Op::mul:
          return a * b;
        case Expr::Op::div:
          if (b == 0.0) throw EvalError("division by zero");
          return a / b;
      }
    }
  }
  throw EvalError("malformed expression");
}

std::string render_expr(const Expr& e) {
  std::string out;
  render_into(e, out);
  return out;
}

}  // namespace comptest
