#include <gtest/gtest.h>

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <cmath>

#include "revroot/expr/expression.hpp"
#include "revroot/solver/iterate.hpp"
#include "revroot/solver/steps.hpp"

namespace {

using namespace revroot;
using mp = boost::multiprecision::cpp_bin_float_50;

MethodCoefficients coeffs(std::vector<double> c) {
  const int n = static_cast<int>(c.size()) + 1;
  return MethodCoefficients(n, std::move(c));
}

TEST(ProposedStep, AtanOrderTwoFromMinusPointNine) {
  const double x = -0.9;
  const auto next = proposed_step(x, std::atan(x), coeffs({1.0}));
  ASSERT_TRUE(next);
  const mp oracle = mp("-0.9") + atan(mp("0.9"));
  EXPECT_NEAR(*next, static_cast<double>(oracle), 1e-16);
  EXPECT_NEAR(*next, -0.16718, 1e-5);
}

TEST(ProposedStep, ExactOnLinear) {
  for (const double x : {-100.0, -1.5, 0.0, 2.0, 7.25, 1e6}) {
    const auto next = proposed_step(x, 3 * x - 6, coeffs({1.0 / 3.0}));
    ASSERT_TRUE(next);
    EXPECT_NEAR(*next, 2.0, 1e-15 * std::max(1.0, std::abs(x))) << "from " << x;
  }
}

TEST(ProposedStep, AtanOrderFourFarOut) {
  const double x = -1e6;
  const auto next = proposed_step(x, std::atan(x), coeffs({1.0, 0.0, 1.0 / 3.0}));
  ASSERT_TRUE(next);
  const mp a = atan(mp(1e6));
  const mp oracle = mp(x) + a + a * a * a / 3;
  EXPECT_NEAR(*next, static_cast<double>(oracle), 1e-9);
  EXPECT_NEAR(*next, -999997.1373, 1e-4);
}

TEST(ProposedStep, NonFiniteIsFailure) {
  EXPECT_FALSE(proposed_step(1.0, 1e200, coeffs({1.0, 0.0, 1.0})).has_value());
  EXPECT_FALSE(proposed_step(1.0, std::nan(""), coeffs({1.0})).has_value());
}

struct Counted {
  Objective objective;
  CountingObjective<double> counter;
  explicit Counted(const std::string& text) : objective(make_objective(expr::parse(text))), counter(objective) {}
};

TEST(BaselineSteps, NewtonHandChecked) {
  Counted f("x^2 - 4");
  const auto next = newton_step(3.0, 5.0, f.counter);
  ASSERT_TRUE(next);
  EXPECT_DOUBLE_EQ(*next, 13.0 / 6.0);
  EXPECT_EQ(f.counter.g_evals(), 0);
  EXPECT_EQ(f.counter.derivative_evals(), 1);
}

TEST(BaselineSteps, NewtonOnAtanMovesOutwardBeyondThreshold) {
  Counted f("atan(x)");
  const auto next = newton_step(1.5, std::atan(1.5), f.counter);
  ASSERT_TRUE(next);
  EXPECT_NEAR(*next, 1.5 - std::atan(1.5) * (1 + 1.5 * 1.5), 1e-15);
  EXPECT_NEAR(*next, -1.694, 1e-3);
  EXPECT_GT(std::abs(*next), 1.5);
}

TEST(BaselineSteps, CountersPerStep) {
  {
    Counted f("atan(x)");
    ASSERT_TRUE(halley_step(0.5, std::atan(0.5), f.counter));
    EXPECT_EQ(f.counter.g_evals(), 0);
    EXPECT_EQ(f.counter.derivative_evals(), 2);
  }
  {
    Counted f("atan(x)");
    ASSERT_TRUE(chebyshev_step(0.5, std::atan(0.5), f.counter));
    EXPECT_EQ(f.counter.g_evals(), 0);
    EXPECT_EQ(f.counter.derivative_evals(), 2);
  }
  {
    Counted f("atan(x)");
    ASSERT_TRUE(two_step_newton_step(0.5, std::atan(0.5), f.counter));
    EXPECT_EQ(f.counter.g_evals(), 1);
    EXPECT_EQ(f.counter.derivative_evals(), 1);
  }
  {
    Counted f("atan(x)");
    ASSERT_TRUE(df4_step(0.5, std::atan(0.5), f.counter));
    EXPECT_EQ(f.counter.g_evals(), 2);
    EXPECT_EQ(f.counter.derivative_evals(), 0);
  }
  {
    Counted f("atan(x)");
    ASSERT_TRUE(df8_step(0.5, std::atan(0.5), f.counter));
    EXPECT_EQ(f.counter.g_evals(), 3);
    EXPECT_EQ(f.counter.derivative_evals(), 0);
  }
}

TEST(BaselineSteps, FormulasMatchTextbook) {
  Counted f("exp(x) - 2");
  const double x = 1.1, g = std::exp(x) - 2, d1 = std::exp(x), d2 = std::exp(x);
  EXPECT_NEAR(*halley_step(x, g, f.counter), x - 2 * g * d1 / (2 * d1 * d1 - g * d2), 1e-15);
  EXPECT_NEAR(*chebyshev_step(x, g, f.counter), x - g / d1 - g * g * d2 / (2 * d1 * d1 * d1), 1e-15);
  const double y = x - g / d1;
  EXPECT_NEAR(*two_step_newton_step(x, g, f.counter), y - (std::exp(y) - 2) / d1, 1e-15);
}

TEST(BaselineSteps, ExactOnLinear) {
  for (const auto b : {Baseline::Newton, Baseline::TwoStepNewton, Baseline::Halley, Baseline::Chebyshev,
                       Baseline::KungTraubDF4, Baseline::KungTraubDF8}) {
    Counted f("x - 7");
    const auto next = method_step(MethodKind{b}, 0.0, -7.0, f.counter);
    ASSERT_TRUE(next) << baseline_id(b);
    EXPECT_DOUBLE_EQ(*next, 7.0) << baseline_id(b);
  }
}

TEST(BaselineSteps, ZeroDerivativeIsFailure) {
  Counted f("x^2 - 4");
  EXPECT_FALSE(newton_step(0.0, -4.0, f.counter).has_value());
  EXPECT_FALSE(chebyshev_step(0.0, -4.0, f.counter).has_value());
}

TEST(BaselineSteps, MissingDerivativeIsFailure) {
  Counted f("abs(x) - 1");
  EXPECT_FALSE(newton_step(0.0, -1.0, f.counter).has_value());
}

// Order of a derivative-free step near a simple root, in 50-digit arithmetic.
TEST(BaselineSteps, DerivativeFreeOrders) {
  BasicObjective<mp> g{[](const mp& x) { return mp(exp(x) - 2); }, {}};
  const mp root = log(mp(2));
  for (const auto [b, order] : {std::pair{Baseline::KungTraubDF4, 4}, std::pair{Baseline::KungTraubDF8, 8}}) {
    CountingObjective<mp> f(g);
    const mp e1("1e-3"), e2("1e-4");
    const auto x1 = method_step(BasicMethodKind<mp>{b}, mp(root + e1), g.value(root + e1), f);
    const auto x2 = method_step(BasicMethodKind<mp>{b}, mp(root + e2), g.value(root + e2), f);
    ASSERT_TRUE(x1 && x2);
    const double slope = static_cast<double>(log(abs(*x2 - root) / abs(*x1 - root)) / log(e2 / e1));
    EXPECT_NEAR(slope, order, 0.3) << baseline_id(b);
  }
}

TEST(MethodNames, IdsAndLabels) {
  EXPECT_EQ(baseline_id(Baseline::TwoStepNewton), "two-step");
  EXPECT_EQ(baseline_from_id("df8"), Baseline::KungTraubDF8);
  EXPECT_FALSE(baseline_from_id("secant").has_value());
  EXPECT_EQ(proposed_id(3), "order3");
  EXPECT_EQ(proposed_label(2), "Second order");
  EXPECT_EQ(baseline_label(Baseline::Newton), "Newton-Raphson");
}

}  // namespace
