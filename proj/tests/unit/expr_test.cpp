#include <gtest/gtest.h>

#include <map>

#include "comptest/error.hpp"
#include "comptest/expr.hpp"
#include "generators.hpp"
#include "oracles.hpp"

namespace comptest {
namespace {

Env env12() {
  Env env;
  env.bind("ubatt", 12.0, "V");
  return env;
}

TEST(ExprParse, ExampleBound) {
  const Expr e = parse_expr("(1.1*ubatt)");
  ASSERT_EQ(e.kind(), Expr::Kind::group);
  const Expr& mul = e.inner();
  ASSERT_EQ(mul.kind(), Expr::Kind::binary);
  EXPECT_EQ(mul.op(), Expr::Op::mul);
  EXPECT_EQ(mul.lhs().value(), 1.1);
  EXPECT_EQ(mul.rhs().name(), "ubatt");
  EXPECT_TRUE(e.identical(Expr::group(Expr::binary(
      Expr::Op::mul, Expr::constant(1.1), Expr::variable("ubatt")))));
}

TEST(ExprParse, Constant) {
  const Expr e = parse_expr("5");
  ASSERT_EQ(e.kind(), Expr::Kind::constant);
  EXPECT_EQ(e.value(), 5.0);
}

TEST(ExprParse, IncompleteProductionReportsOffset) {
  try {
    parse_expr("1.1*");
    FAIL() << "expected a syntax error";
  } catch (const ExprSyntaxError& e) {
    EXPECT_EQ(e.offset(), 4u);
  }
}

TEST(ExprParse, Errors) {
  EXPECT_THROW(parse_expr("(1.1*ubat"), ExprSyntaxError);
  EXPECT_THROW(parse_expr(""), ExprSyntaxError);
  EXPECT_THROW(parse_expr("1.1*UBATT"), ExprSyntaxError);
  EXPECT_THROW(parse_expr("1 2"), ExprSyntaxError);
  EXPECT_THROW(parse_expr("1,5"), ExprSyntaxError);
  EXPECT_THROW(parse_expr("-x"), ExprSyntaxError);
  EXPECT_THROW(parse_expr("2^3"), ExprSyntaxError);
}

TEST(ExprParse, WhitespaceAndNegativeLiterals) {
  EXPECT_EQ(parse_expr(" ( 0.7 * ubatt ) "), parse_expr("(0.7*ubatt)"));
  EXPECT_EQ(eval_expr(parse_expr("2*-3"), env12()), -6.0);
  EXPECT_EQ(eval_expr(parse_expr("1--3"), env12()), 4.0);
}

TEST(ExprEval, ExampleBounds) {
  EXPECT_DOUBLE_EQ(eval_expr(parse_expr("(1.1*ubatt)"), env12()), 13.2);
  EXPECT_DOUBLE_EQ(eval_expr(parse_expr("(0.7*ubatt)"), env12()), 8.4);
}

TEST(ExprEval, Precedence) {
  EXPECT_EQ(eval_expr(parse_expr("1+2*3"), {}), 7.0);
  EXPECT_EQ(eval_expr(parse_expr("(1+2)*3"), {}), 9.0);
  EXPECT_EQ(eval_expr(parse_expr("8-4-2"), {}), 2.0);
  EXPECT_EQ(eval_expr(parse_expr("8/4/2"), {}), 1.0);
}

TEST(ExprEval, Errors) {
  EXPECT_THROW(eval_expr(parse_expr("ubatt/0"), env12()), EvalError);
  try {
    eval_expr(parse_expr("(0.7*vref)"), env12());
    FAIL();
  } catch (const EvalError& e) {
    EXPECT_NE(std::string(e.what()).find("unbound variable vref"), std::string::npos);
  }
}

TEST(ExprRender, Canonical) {
  EXPECT_EQ(render_expr(parse_expr("(1.1*ubatt)")), "(1.1*ubatt)");
  EXPECT_EQ(render_expr(parse_expr("5000")), "5000");
  EXPECT_EQ(render_expr(parse_expr("(a+b)*c")), "((a+b)*c)");
  EXPECT_EQ(render_expr(parse_expr("a + b * c")), "(a+(b*c))");
  EXPECT_EQ(render_expr(parse_expr("((x))")), "x");
}

TEST(ExprEquality, StructuralIgnoresGroups) {
  EXPECT_EQ(parse_expr("(a)+b"), parse_expr("a+b"));
  EXPECT_FALSE(parse_expr("(a)+b").identical(parse_expr("a+b")));
  EXPECT_NE(parse_expr("a+b"), parse_expr("b+a"));
  EXPECT_NE(parse_expr("(a+b)*c"), parse_expr("a+b*c"));
}

TEST(ExprVariables, FirstUseOrder) {
  EXPECT_EQ(parse_expr("b*a+b+ubatt").variables(),
            (std::vector<std::string>{"b", "a", "ubatt"}));
}

// Random text against an independent shunting-yard evaluator.
TEST(ExprProperty, AgreesWithReferenceEvaluator) {
  gen::Rng rng(11);
  const std::map<std::string, double> vars{
      {"a", 1.5}, {"b", -4.0}, {"ubatt", 12.0}, {"x_1", 0.25}};
  Env env;
  for (const auto& [k, v] : vars) env.bind(k, v);
  int evaluated = 0;
  for (int i = 0; i < 1000; ++i) {
    const std::string text = gen::expression_text(rng);
    SCOPED_TRACE(text);
    const Expr e = parse_expr(text);
    const auto expected = oracle::evaluate_text(text, vars);
    if (!expected) {
      EXPECT_THROW(eval_expr(e, env), EvalError);
      continue;
    }
    EXPECT_EQ(eval_expr(e, env), *expected);
    ++evaluated;
  }
  EXPECT_GT(evaluated, 800);
}

TEST(ExprProperty, RenderParseRoundTrip) {
  gen::Rng rng(12);
  for (int i = 0; i < 1000; ++i) {
    const Expr e = gen::expression_tree(rng);
    const std::string text = render_expr(e);
    SCOPED_TRACE(text);
    const Expr back = parse_expr(text);
    EXPECT_EQ(back, e);
    EXPECT_EQ(render_expr(back), text);
  }
}

TEST(ExprProperty, ParsedTextRoundTrip) {
  gen::Rng rng(13);
  for (int i = 0; i < 1000; ++i) {
    const Expr e = parse_expr(gen::expression_text(rng));
    EXPECT_EQ(parse_expr(render_expr(e)), e);
  }
}

}  // namespace
}  // namespace comptest
