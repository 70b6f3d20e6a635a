#include "ibcq/func.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>
#include <type_traits>

#include "ibcq/errors.hpp"
#include "ibcq/format.hpp"

namespace ibcq {
namespace {

constexpr double kRelSlopeTol = 1e-12;
constexpr double kRangeTol = 1e-12;
// Rounding slack on a segment's rise, in units of the values involved.
constexpr double kRiseUlps = 8.0 * std::numeric_limits<double>::epsilon();

void require_finite(double v, const char* what) {
  if (!std::isfinite(v)) {
    throw ValidationError(std::string(what) + " must be finite");
  }
}

double eval_pwl(const PiecewiseLinear& f, double x) {
  const auto& pts = f.points;
  auto it = std::lower_bound(pts.begin(), pts.end(), x,
                             [](const Point& p, double v) { return p.x < v; });
  if (it != pts.end() && it->x == x) {
    return it->y;
  }
  // x lies strictly inside (prev.x, it->x).
  const Point& hi = *it;
  const Point& lo = *(it - 1);
  return lo.y + (hi.y - lo.y) * ((x - lo.x) / (hi.x - lo.x));
}

double eval_trig(const TrigPolynomial& f, double x) {
  const auto& c = f.coefficients;
  if (c.empty()) {
    return 0.0;
  }
  double sum = c[0];
  for (std::size_t i = 1; i < c.size(); ++i) {
    const auto k = static_cast<double>((i + 1) / 2);
    const double arg = 2.0 * std::numbers::pi * k * x;
    sum += c[i] * ((i % 2 == 1) ? std::cos(arg) : std::sin(arg));
  }
  return sum;
}

bool check_pwl(const PiecewiseLinear& f, const Promise& p) {
  const auto& pts = f.points;
  for (const Point& pt : pts) {
    if (pt.y < p.range_lo - kRangeTol || pt.y > p.range_hi + kRangeTol) {
      return false;
    }
  }
  for (std::size_t i = 1; i < pts.size(); ++i) {
    const double rise = std::abs(pts[i].y - pts[i - 1].y);
    const double run = pts[i].x - pts[i - 1].x;
    const double scale = std::max({1.0, p.lipschitz, std::abs(pts[i].y), std::abs(pts[i - 1].y)});
    if (rise > p.lipschitz * run * (1.0 + kRelSlopeTol) + kRiseUlps * scale) {
      return false;
    }
  }
  return true;
}

bool check_on_grid(const FunctionSpec& f, const Promise& p, std::size_t grid_size, double slack) {
  const std::size_t n = std::max(grid_size, kTrigCheckGrid);
  const double h = 1.0 / static_cast<double>(n - 1);
  double prev = eval(f, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    const double x = (i + 1 == n) ? 1.0 : static_cast<double>(i) * h;
    const double v = eval(f, x);
    if (v < p.range_lo - kRangeTol || v > p.range_hi + kRangeTol) {
      return false;
    }
    if (i > 0 && std::abs(v - prev) > slack * p.lipschitz * h * (1.0 + kRelSlopeTol)) {
      return false;
    }
    prev = v;
  }
  return true;
}

}  // namespace

Promise::Promise(double lipschitz_bound, double lo, double hi)
    : lipschitz(lipschitz_bound), range_lo(lo), range_hi(hi) {
  require_finite(lipschitz_bound, "Lipschitz bound");
  require_finite(lo, "range_lo");
  require_finite(hi, "range_hi");
  if (lipschitz_bound < 0.0) {
    throw ValidationError("Lipschitz bound must be nonnegative");
  }
  if (!(lo < hi)) {
    throw ValidationError("promise range requires range_lo < range_hi");
  }
}

FunctionSpec FunctionSpec::piecewise_linear(std::vector<Point> points) {
  if (points.size() < 2) {
    throw ValidationError("piecewise-linear function needs at least two breakpoints");
  }
  for (const Point& p : points) {
    require_finite(p.x, "breakpoint abscissa");
    require_finite(p.y, "breakpoint value");
  }
  if (points.front().x != 0.0 || points.back().x != 1.0) {
    throw ValidationError("piecewise-linear breakpoints must start at x=0 and end at x=1");
  }
  for (std::size_t i = 1; i < points.size(); ++i) {
    if (!(points[i].x > points[i - 1].x)) {
      throw ValidationError("piecewise-linear breakpoints must be strictly increasing, violated at x=" +
                            format_real(points[i].x));
    }
  }
  return FunctionSpec(PiecewiseLinear{std::move(points)});
}

FunctionSpec FunctionSpec::constant(double value) {
  require_finite(value, "constant value");
  return FunctionSpec(Constant{value});
}

FunctionSpec FunctionSpec::trigonometric(std::vector<double> coefficients) {
  for (double c : coefficients) {
    require_finite(c, "trigonometric coefficient");
  }
  return FunctionSpec(TrigPolynomial{std::move(coefficients)});
}

std::string_view FunctionSpec::family_name() const noexcept {
  switch (family_.index()) {
    case 0:
      return "pwl";
    case 1:
      return "constant";
    default:
      return "trig";
  }
}

FunctionSpec FunctionSpec::with_promise(Promise p) const {
  FunctionSpec out = *this;
  out.promise_ = p;
  return out;
}

FunctionSpec FunctionSpec::without_promise() const {
  FunctionSpec out = *this;
  out.promise_.reset();
  return out;
}

double eval(const FunctionSpec& f, double x) {
  if (!(x >= 0.0 && x <= 1.0)) {
    throw DomainError("evaluation point " + format_real(x) + " outside [0,1]");
  }
  return std::visit(
      [x](const auto& fam) -> double {
        using T = std::decay_t<decltype(fam)>;
        if constexpr (std::is_same_v<T, PiecewiseLinear>) {
          return eval_pwl(fam, x);
        } else if constexpr (std::is_same_v<T, Constant>) {
          return fam.value;
        } else {
          return eval_trig(fam, x);
        }
      },
      f.family());
}

double exact_integral(const FunctionSpec& f) {
  return std::visit(
      [](const auto& fam) -> double {
        using T = std::decay_t<decltype(fam)>;
        if constexpr (std::is_same_v<T, PiecewiseLinear>) {
          // Neumaier-compensated sum of the trapezoids.
          double sum = 0.0;
          double carry = 0.0;
          for (std::size_t i = 1; i < fam.points.size(); ++i) {
            const Point& a = fam.points[i - 1];
            const Point& b = fam.points[i];
            const double term = 0.5 * (b.x - a.x) * (a.y + b.y);
            const double next = sum + term;
            carry += std::abs(sum) >= std::abs(term) ? (sum - next) + term : (term - next) + sum;
            sum = next;
          }
          return sum + carry;
        } else if constexpr (std::is_same_v<T, Constant>) {
          return fam.value;
        } else {
          // Every nonconstant harmonic integrates to zero over a full period.
          return fam.coefficients.empty() ? 0.0 : fam.coefficients[0];
        }
      },
      f.family());
}

bool check_promise(const FunctionSpec& f, const Promise& p, std::size_t grid_size) {
  if (grid_size < 2) {
    throw ValidationError("promise check grid needs at least two points");
  }
  return std::visit(
      [&](const auto& fam) -> bool {
        using T = std::decay_t<decltype(fam)>;
        if constexpr (std::is_same_v<T, PiecewiseLinear>) {
          return check_pwl(fam, p);
        } else if constexpr (std::is_same_v<T, Constant>) {
          return fam.value >= p.range_lo - kRangeTol && fam.value <= p.range_hi + kRangeTol;
        } else {
          return check_on_grid(f, p, grid_size, kTrigLipschitzSlack);
        }
      },
      f.family());
}

FunctionSpec negated(const FunctionSpec& f) {
  FunctionSpec out = std::visit(
      [](const auto& fam) -> FunctionSpec {
        using T = std::decay_t<decltype(fam)>;
        if constexpr (std::is_same_v<T, PiecewiseLinear>) {
          std::vector<Point> pts = fam.points;
          for (Point& p : pts) {
            p.y = -p.y;
          }
          return FunctionSpec::piecewise_linear(std::move(pts));
        } else if constexpr (std::is_same_v<T, Constant>) {
          return FunctionSpec::constant(-fam.value);
        } else {
          std::vector<double> c = fam.coefficients;
          for (double& v : c) {
            v = -v;
          }
          return FunctionSpec::trigonometric(std::move(c));
        }
      },
      f.family());
  if (const auto& p = f.promise()) {
    out = out.with_promise(Promise(p->lipschitz, -p->range_hi, -p->range_lo));
  }
  return out;
}

}  // namespace ibcq
