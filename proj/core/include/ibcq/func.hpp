#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <variant>
#include <vector>

namespace ibcq {

struct Point {
  double x = 0.0;
  double y = 0.0;
  friend bool operator==(const Point&, const Point&) = default;
};

// Linear interpolation through breakpoints. x strictly increasing, first
// breakpoint at 0 and last at 1.
struct PiecewiseLinear {
  std::vector<Point> points;
  friend bool operator==(const PiecewiseLinear&, const PiecewiseLinear&) = default;
};

struct Constant {
  double value = 0.0;
  friend bool operator==(const Constant&, const Constant&) = default;
};

// f(x) = a0 + sum_k a_k cos(2 pi k x) + b_k sin(2 pi k x), stored as
// [a0, a1, b1, a2, b2, ...]. A missing trailing b_k is zero.
struct TrigPolynomial {
  std::vector<double> coefficients;
  friend bool operator==(const TrigPolynomial&, const TrigPolynomial&) = default;
};

// The promise class: |f(x) - f(x')| <= lipschitz * |x - x'| and
// range_lo <= f(x) <= range_hi on [0,1].
struct Promise {
  double lipschitz = 0.0;
  double range_lo = 0.0;
  double range_hi = 0.0;

  Promise() = default;
  Promise(double lipschitz_bound, double lo, double hi);
  friend bool operator==(const Promise&, const Promise&) = default;
};

class FunctionSpec {
public:
  using Family = std::variant<PiecewiseLinear, Constant, TrigPolynomial>;

  static FunctionSpec piecewise_linear(std::vector<Point> points);
  static FunctionSpec constant(double value);
  static FunctionSpec trigonometric(std::vector<double> coefficients);

  const Family& family() const noexcept { return family_; }
  std::string_view family_name() const noexcept;

  // Null when the family is not piecewise-linear.
  const PiecewiseLinear* as_piecewise_linear() const noexcept {
    return std::get_if<PiecewiseLinear>(&family_);
  }

  const std::optional<Promise>& promise() const noexcept { return promise_; }
  FunctionSpec with_promise(Promise p) const;
  FunctionSpec without_promise() const;

  friend bool operator==(const FunctionSpec&, const FunctionSpec&) = default;

private:
  explicit FunctionSpec(Family family) : family_(std::move(family)) {}

  Family family_;
  std::optional<Promise> promise_;
};

// Throws DomainError when x is outside [0,1].
double eval(const FunctionSpec& f, double x);

// Integral over [0,1] in closed form.
double exact_integral(const FunctionSpec& f);

// Grid size used for the trigonometric Lipschitz check, and the slack factor
// applied to the bound there. Secant slopes on a grid under-estimate sup|f'|,
// so that check is approximate.
inline constexpr std::size_t kTrigCheckGrid = 4096;
inline constexpr double kTrigLipschitzSlack = 1.01;

// Piecewise-linear and constant inputs are checked exactly (segment slopes
// and breakpoint values). Trigonometric inputs are checked on a uniform grid
// of max(grid_size, kTrigCheckGrid) points.
bool check_promise(const FunctionSpec& f, const Promise& p, std::size_t grid_size);

// -f, keeping the family. A promise, if present, is mirrored.
FunctionSpec negated(const FunctionSpec& f);

}  // namespace ibcq
