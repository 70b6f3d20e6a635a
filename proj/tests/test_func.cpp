#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "ibcq/errors.hpp"
#include "ibcq/func.hpp"
#include "ibcq/instances.hpp"
#include "oracles.hpp"

using namespace ibcq;

namespace {

FunctionSpec identity() { return FunctionSpec::piecewise_linear({{0, 0}, {1, 1}}); }
FunctionSpec hat() { return FunctionSpec::piecewise_linear({{0, 0}, {0.5, 0.5}, {1, 0}}); }

}  // namespace

TEST(Eval, ConstantIsConstant) { EXPECT_EQ(eval(FunctionSpec::constant(0.0), 0.3), 0.0); }

TEST(Eval, LinearInterpolation) { EXPECT_DOUBLE_EQ(eval(identity(), 0.25), 0.25); }

TEST(Eval, HatOnDescendingSegment) { EXPECT_DOUBLE_EQ(eval(hat(), 0.75), 0.25); }

TEST(Eval, BreakpointsReturnStoredValuesExactly) {
  const auto f = FunctionSpec::piecewise_linear({{0, 0.1}, {0.3, 0.7}, {1.0 / 3.0, -0.2}, {1, 0.9}});
  EXPECT_EQ(eval(f, 0.3), 0.7);
  EXPECT_EQ(eval(f, 1.0 / 3.0), -0.2);
  EXPECT_EQ(eval(f, 1.0), 0.9);
}

TEST(Eval, RejectsPointsOutsideUnitInterval) {
  EXPECT_THROW(eval(identity(), -0.01), DomainError);
  EXPECT_THROW(eval(identity(), 1.0000001), DomainError);
  EXPECT_THROW(eval(FunctionSpec::constant(1.0), std::nan("")), DomainError);
}

TEST(Eval, TrigPolynomialMatchesDefinition) {
  const auto f = FunctionSpec::trigonometric({0.5, 0.2, -0.1, 0.05});
  const double x = 0.37;
  const double w = 2 * std::numbers::pi;
  EXPECT_NEAR(eval(f, x), 0.5 + 0.2 * std::cos(w * x) - 0.1 * std::sin(w * x) + 0.05 * std::cos(2 * w * x), 1e-15);
}

TEST(FunctionSpec, RejectsMalformedBreakpoints) {
  EXPECT_THROW(FunctionSpec::piecewise_linear({{0, 0}}), ValidationError);
  EXPECT_THROW(FunctionSpec::piecewise_linear({{0.1, 0}, {1, 0}}), ValidationError);
  EXPECT_THROW(FunctionSpec::piecewise_linear({{0, 0}, {0.9, 0}}), ValidationError);
  EXPECT_THROW(FunctionSpec::piecewise_linear({{0, 0}, {0.5, 0}, {0.5, 1}, {1, 0}}), ValidationError);
  EXPECT_THROW(FunctionSpec::piecewise_linear({{0, 0}, {1, INFINITY}}), ValidationError);
}

TEST(ExactIntegral, ClosedForms) {
  EXPECT_EQ(exact_integral(FunctionSpec::constant(0.0)), 0.0);
  EXPECT_EQ(exact_integral(identity()), 0.5);
  EXPECT_EQ(exact_integral(FunctionSpec::trigonometric({0.3, 1.0, 2.0})), 0.3);
}

TEST(ExactIntegral, HatAgreesWithRiemannOracle) {
  const auto f = hat();
  const double oracle = oracle::riemann([&](double x) { return 0.5 - std::abs(x - 0.5); });
  EXPECT_NEAR(oracle, 0.25, 1e-9);
  EXPECT_NEAR(exact_integral(f), oracle, 1e-9);
}

TEST(ExactIntegral, RandomPiecewiseLinearAgreesWithRiemannOracle) {
  Rng rng(11);
  for (int trial = 0; trial < 5; ++trial) {
    const auto f = random_lipschitz_pwl(3.0, 1 + rng.below(20), rng);
    // Interpolate independently of eval().
    const auto& pts = f.as_piecewise_linear()->points;
    auto interp = [&](double x) {
      for (std::size_t i = 1; i < pts.size(); ++i) {
        if (x <= pts[i].x) {
          const double w = (x - pts[i - 1].x) / (pts[i].x - pts[i - 1].x);
          return (1 - w) * pts[i - 1].y + w * pts[i].y;
        }
      }
      return pts.back().y;
    };
    EXPECT_NEAR(exact_integral(f), oracle::riemann(interp), 1e-9) << "trial " << trial;
  }
}

TEST(CheckPromise, SlopeBound) {
  EXPECT_TRUE(check_promise(identity(), Promise(1.0, -1.0, 1.0), 16));
  EXPECT_FALSE(check_promise(identity(), Promise(0.5, -1.0, 1.0), 16));
}

TEST(CheckPromise, HatWithUnitBound) { EXPECT_TRUE(check_promise(hat(), Promise(1.0, -1.0, 1.0), 2)); }

TEST(CheckPromise, RangeViolation) {
  EXPECT_FALSE(check_promise(hat(), Promise(1.0, -1.0, 0.4), 2));
  EXPECT_FALSE(check_promise(FunctionSpec::constant(2.0), Promise(0.0, -1.0, 1.0), 2));
  EXPECT_TRUE(check_promise(FunctionSpec::constant(0.5), Promise(0.0, -1.0, 1.0), 2));
}

TEST(CheckPromise, PiecewiseLinearIgnoresGridResolution) {
  // A narrow spike between grid points is still caught: the check reads slopes.
  const auto spike = FunctionSpec::piecewise_linear({{0, 0}, {0.5001, 0}, {0.50015, 0.01}, {0.5002, 0}, {1, 0}});
  EXPECT_FALSE(check_promise(spike, Promise(1.0, -1.0, 1.0), 2));
  EXPECT_FALSE(check_promise(spike, Promise(1.0, -1.0, 1.0), 10));
}

TEST(CheckPromise, RejectsDegenerateGrid) {
  EXPECT_THROW(check_promise(identity(), Promise(1.0, 0.0, 1.0), 1), ValidationError);
}

TEST(CheckPromise, TrigPolynomialOnGrid) {
  // sin(2 pi x) / (2 pi) has sup |f'| = 1.
  const auto f = FunctionSpec::trigonometric({0.0, 0.0, 1.0 / (2 * std::numbers::pi)});
  EXPECT_TRUE(check_promise(f, Promise(1.0, -0.2, 0.2), 2));
  EXPECT_FALSE(check_promise(f, Promise(0.9, -0.2, 0.2), 2));
  EXPECT_FALSE(check_promise(f, Promise(1.0, -0.1, 0.1), 2));
  // High frequency: sup|f'| = 20 pi * 0.01 ~ 0.628.
  const auto g = FunctionSpec::trigonometric({0.0, 0.0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0.01});
  EXPECT_TRUE(check_promise(g, Promise(0.63, -1, 1), 2));
  EXPECT_FALSE(check_promise(g, Promise(0.6, -1, 1), 2));
}

TEST(Promise, RejectsInvalidBounds) {
  EXPECT_THROW(Promise(-1.0, 0.0, 1.0), ValidationError);
  EXPECT_THROW(Promise(1.0, 1.0, 1.0), ValidationError);
  EXPECT_THROW(Promise(1.0, 2.0, 1.0), ValidationError);
}

TEST(Negated, MirrorsValuesAndPromise) {
  const auto f = hat().with_promise(Promise(1.0, -0.1, 0.6));
  const auto g = negated(f);
  EXPECT_EQ(eval(g, 0.5), -0.5);
  EXPECT_EQ(exact_integral(g), -exact_integral(f));
  ASSERT_TRUE(g.promise());
  EXPECT_EQ(g.promise()->range_lo, -0.6);
  EXPECT_EQ(g.promise()->range_hi, 0.1);
}
