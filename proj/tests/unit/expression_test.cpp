#include <gtest/gtest.h>

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <cmath>
#include <random>

#include "revroot/expr/evaluate.hpp"
#include "revroot/expr/expression.hpp"

namespace {

using namespace revroot::expr;
using mp = boost::multiprecision::cpp_bin_float_50;

std::size_t error_offset(const std::string& text) {
  try {
    parse(text);
  } catch (const ParseError& e) {
    return e.offset();
  }
  ADD_FAILURE() << "no parse error for \"" << text << "\"";
  return std::string::npos;
}

TEST(Parse, SingleCall) {
  const auto e = parse("atan(x)");
  const auto* call = std::get_if<Call>(&e.root().kind);
  ASSERT_NE(call, nullptr);
  EXPECT_EQ(call->function, Function::Atan);
  EXPECT_TRUE(std::holds_alternative<Variable>(call->argument->kind));
}

TEST(Parse, NestedCallMinusConstant) {
  const auto e = parse("sqrt(abs(x))-4");
  const auto* sub = std::get_if<Binary>(&e.root().kind);
  ASSERT_NE(sub, nullptr);
  EXPECT_EQ(sub->op, BinaryOp::Sub);
  const auto* outer = std::get_if<Call>(&sub->lhs->kind);
  ASSERT_NE(outer, nullptr);
  EXPECT_EQ(outer->function, Function::Sqrt);
  const auto* inner = std::get_if<Call>(&outer->argument->kind);
  ASSERT_NE(inner, nullptr);
  EXPECT_EQ(inner->function, Function::Abs);
  const auto* four = std::get_if<Constant>(&sub->rhs->kind);
  ASSERT_NE(four, nullptr);
  EXPECT_EQ(four->value, 4.0);
}

TEST(Parse, Precedence) {
  EXPECT_EQ(evaluate(parse("-x^2"), 3.0), -9.0);
  EXPECT_EQ(evaluate(parse("2^3^2"), 0.0), 512.0);
  EXPECT_EQ(evaluate(parse("1 - 2 - 3"), 0.0), -4.0);
  EXPECT_EQ(evaluate(parse("12 / 3 / 2"), 0.0), 2.0);
  EXPECT_EQ(evaluate(parse("1 + 2 * x"), 5.0), 11.0);
  EXPECT_EQ(evaluate(parse("x^-1"), 4.0), 0.25);
  EXPECT_EQ(evaluate(parse(" ( x+1 ) * ( x-1 ) "), 3.0), 8.0);
  EXPECT_DOUBLE_EQ(evaluate(parse("2.5e-1 * x"), 4.0), 1.0);
}

TEST(Parse, ErrorOffsets) {
  EXPECT_EQ(error_offset("1+*2"), 2u);
  EXPECT_EQ(error_offset("foo(x)"), 0u);
  EXPECT_EQ(error_offset("x + y"), 4u);
  EXPECT_EQ(error_offset("atan(x"), 6u);
  EXPECT_EQ(error_offset(""), 0u);
  EXPECT_EQ(error_offset("x 2"), 2u);
  EXPECT_NE(error_offset("x^x"), std::string::npos);
}

TEST(Parse, ErrorMessageNamesOffset) {
  try {
    parse("1+*2");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("offset 2"), std::string::npos) << e.what();
  }
}

std::string random_expression(std::mt19937_64& rng, int depth) {
  std::uniform_int_distribution<int> pick(0, depth <= 0 ? 1 : 6);
  static const char* fns[] = {"sin", "cos", "tan", "atan", "exp", "ln", "sqrt", "abs"};
  static const char* ops[] = {"+", "-", "*", "/"};
  std::uniform_int_distribution<int> fn(0, 7), op(0, 3), small(-3, 5);
  std::uniform_real_distribution<double> num(0.0, 10.0);
  switch (pick(rng)) {
    case 0: return "x";
    case 1: return std::to_string(num(rng));
    case 2: return "-" + random_expression(rng, depth - 1);
    case 3: return std::string(fns[fn(rng)]) + "(" + random_expression(rng, depth - 1) + ")";
    case 4: return "(" + random_expression(rng, depth - 1) + ")^" + std::to_string(small(rng));
    default:
      return "(" + random_expression(rng, depth - 1) + ops[op(rng)] + random_expression(rng, depth - 1) + ")";
  }
}

TEST(ParseProperty, PrintParseRoundTrip) {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 500; ++i) {
    const std::string text = random_expression(rng, 4);
    const auto first = to_string(parse(text));
    const auto second = to_string(parse(first));
    EXPECT_EQ(first, second) << "from " << text;
    const double at = 0.7;
    const double a = evaluate(parse(text), at);
    const double b = evaluate(parse(first), at);
    if (std::isfinite(a)) EXPECT_EQ(a, b) << text << " vs " << first;
  }
}

TEST(EvalJet, Examples) {
  const auto a = eval_jet(parse("atan(x)"), 0.0, 3);
  EXPECT_EQ(a[0], 0.0);
  EXPECT_EQ(a[1], 1.0);
  EXPECT_EQ(a[2], 0.0);
  EXPECT_DOUBLE_EQ(a[3], -1.0 / 3.0);

  const auto x = eval_jet(parse("x"), 2.25, 2);
  EXPECT_EQ(x[0], 2.25);
  EXPECT_EQ(x[1], 1.0);
  EXPECT_EQ(x[2], 0.0);

  const auto s = eval_jet(parse("sqrt(abs(x))-4"), 16.0, 2);
  EXPECT_EQ(s[0], 0.0);
  EXPECT_DOUBLE_EQ(s[1], 1.0 / 8.0);
  EXPECT_DOUBLE_EQ(s[2], -1.0 / 512.0);
}

TEST(EvalJet, SingularPointNamesNode) {
  try {
    eval_jet(parse("sqrt(abs(x)) - 4"), 0.0, 2);
    FAIL();
  } catch (const EvaluationError& e) {
    EXPECT_EQ(e.node(), "abs(x)");
  }
  EXPECT_THROW(eval_jet(parse("ln(x - 3)"), 1.0, 1), EvaluationError);
  EXPECT_THROW(eval_jet(parse("sqrt(x)"), -1.0, 0), EvaluationError);
  EXPECT_THROW(eval_jet(parse("1 / x"), 0.0, 1), EvaluationError);
  EXPECT_THROW(eval_jet(parse("x^0.5"), -2.0, 1), EvaluationError);
  EXPECT_THROW(eval_jet(parse("x"), 0.0, -1), std::invalid_argument);
}

TEST(Evaluate, DomainViolationsAreNotExceptions) {
  EXPECT_TRUE(std::isnan(evaluate(parse("sqrt(x)"), -1.0)));
  EXPECT_TRUE(std::isinf(evaluate(parse("1/x"), 0.0)));
  EXPECT_TRUE(std::isinf(evaluate(parse("ln(x)"), 0.0)));
}

TEST(EvalJetProperty, DegreeZeroEqualsScalar) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> at(-3.0, 3.0);
  int compared = 0;
  for (int i = 0; i < 500; ++i) {
    const auto e = parse(random_expression(rng, 4));
    const double x = at(rng);
    const double scalar = evaluate(e, x);
    if (!std::isfinite(scalar)) continue;
    try {
      EXPECT_EQ(eval_jet(e, x, 0)[0], scalar) << to_string(e) << " at " << x;
      ++compared;
    } catch (const EvaluationError&) {
    }
  }
  EXPECT_GT(compared, 200);
}

// k-th derivative by a central difference of the scalar evaluator, run in
// 50-digit arithmetic so the difference quotient is not rounding-limited.
double central_difference(const Expression& e, double x, int k) {
  const mp h("1e-6");
  mp sum = 0;
  mp binom = 1;
  for (int i = 0; i <= k; ++i) {
    const mp point = mp(x) + (mp(k) / 2 - i) * h;
    sum += (i % 2 ? -binom : binom) * evaluate<mp>(e, point);
    binom = binom * (k - i) / (i + 1);
  }
  return static_cast<double>(sum / pow(h, k));
}

struct DomainCase {
  const char* expr;
  double lo, hi;
};

class JetVersusFiniteDifference : public ::testing::TestWithParam<DomainCase> {};

TEST_P(JetVersusFiniteDifference, OrdersOneToFour) {
  const auto [text, lo, hi] = GetParam();
  const auto e = parse(text);
  std::mt19937_64 rng(std::hash<std::string>{}(text));
  std::uniform_real_distribution<double> at(lo, hi);
  for (int i = 0; i < 100; ++i) {
    const double x = at(rng);
    const auto jet = eval_jet(e, x, 4);
    for (int k = 1; k <= 4; ++k) {
      const double fd = central_difference(e, x, k);
      EXPECT_NEAR(jet.derivative(k), fd, 1e-6 * std::abs(fd) + 1e-12) << text << " order " << k << " at " << x;
    }
  }
}

INSTANTIATE_TEST_SUITE_P(
    ElementaryFunctions, JetVersusFiniteDifference,
    ::testing::Values(DomainCase{"sin(x)", -4, 4}, DomainCase{"cos(x)", -4, 4}, DomainCase{"tan(x)", -1.4, 1.4},
                      DomainCase{"atan(x)", -5, 5}, DomainCase{"exp(x)", -3, 3}, DomainCase{"ln(x)", 0.1, 10},
                      DomainCase{"sqrt(x)", 0.1, 10}, DomainCase{"abs(x)", -5, -0.1}, DomainCase{"abs(x)", 0.1, 5},
                      DomainCase{"x^3 - 2*x + 2", -3, 3}, DomainCase{"x^2.5 / (1 + x^2)", 0.1, 4},
                      DomainCase{"sqrt(abs(x)) - 4", 1, 30}, DomainCase{"exp(sin(x)) * atan(x/2)", -3, 3}));

}  // namespace
