#include "ibcq/info.hpp"

#include <cmath>
#include <string>

#include "ibcq/errors.hpp"
#include "ibcq/format.hpp"

namespace ibcq {
namespace {

void require_lipschitz(double lipschitz) {
  if (!std::isfinite(lipschitz) || lipschitz < 0.0) {
    throw ValidationError("Lipschitz bound must be finite and nonnegative");
  }
}

void require_sizes(const Design& d, std::span<const double> y) {
  if (y.size() != d.size()) {
    throw ValidationError("data vector has " + std::to_string(y.size()) + " values for a design of " +
                          std::to_string(d.size()) + " points");
  }
  for (double v : y) {
    if (!std::isfinite(v)) {
      throw ValidationError("data values must be finite");
    }
  }
}

// min_i (y_i + L |x - t_i|) for consistent data. Between adjacent design
// points only the two neighbouring cones can be active.
std::vector<Point> upper_breakpoints(const Design& d, std::span<const double> y, double lipschitz) {
  const auto t = d.points();
  const std::size_t n = t.size();
  std::vector<Point> pts;
  pts.reserve(2 * n + 2);

  if (t.front() > 0.0) {
    pts.push_back({0.0, y[0] + lipschitz * t.front()});
  }
  for (std::size_t i = 0; i < n; ++i) {
    pts.push_back({t[i], y[i]});
    if (i + 1 < n && lipschitz > 0.0) {
      const double cross = (y[i + 1] - y[i] + lipschitz * (t[i] + t[i + 1])) / (2.0 * lipschitz);
      if (cross > t[i] && cross < t[i + 1]) {
        pts.push_back({cross, y[i] + lipschitz * (cross - t[i])});
      }
    }
  }
  if (t.back() < 1.0) {
    pts.push_back({1.0, y[n - 1] + lipschitz * (1.0 - t.back())});
  }
  return pts;
}

}  // namespace

Design::Design(std::vector<double> points) : points_(std::move(points)) {
  if (points_.empty()) {
    throw ValidationError("design needs at least one point");
  }
  for (std::size_t i = 0; i < points_.size(); ++i) {
    const double t = points_[i];
    if (!(t >= 0.0 && t <= 1.0)) {
      throw ValidationError("design point " + format_real(t) + " outside [0,1]");
    }
    if (i > 0 && !(t > points_[i - 1])) {
      throw ValidationError("design points must be strictly increasing");
    }
  }
}

DataVector observe(const FunctionSpec& f, const Design& d) {
  DataVector y;
  y.reserve(d.size());
  for (double t : d.points()) {
    y.push_back(eval(f, t));
  }
  return y;
}

void check_consistent(const Design& d, std::span<const double> y, double lipschitz) {
  require_lipschitz(lipschitz);
  require_sizes(d, y);
  const auto t = d.points();
  for (std::size_t i = 0; i < t.size(); ++i) {
    for (std::size_t j = i + 1; j < t.size(); ++j) {
      if (std::abs(y[j] - y[i]) > lipschitz * (t[j] - t[i]) + kConsistencyTol) {
        throw InfeasibleDataError("data at t=" + format_real(t[i]) + " and t=" + format_real(t[j]) +
                                  " is not consistent with Lipschitz bound " + format_real(lipschitz));
      }
    }
  }
}

Envelope envelopes(const Design& d, std::span<const double> y, double lipschitz) {
  check_consistent(d, y, lipschitz);

  auto upper = upper_breakpoints(d, y, lipschitz);

  // max_i (y_i - L|x - t_i|) = -min_i (-y_i + L|x - t_i|)
  std::vector<double> neg(y.begin(), y.end());
  for (double& v : neg) {
    v = -v;
  }
  auto lower = upper_breakpoints(d, neg, lipschitz);
  for (Point& p : lower) {
    p.y = -p.y;
  }

  return Envelope{FunctionSpec::piecewise_linear(std::move(upper)),
                  FunctionSpec::piecewise_linear(std::move(lower))};
}

RadiusReport interval_h(const Envelope& e) {
  RadiusReport r;
  r.h_lo = exact_integral(e.lower);
  r.h_hi = exact_integral(e.upper);
  r.radius = 0.5 * (r.h_hi - r.h_lo);
  r.center = 0.5 * (r.h_hi + r.h_lo);
  return r;
}

double worst_radius(const Design& d, double lipschitz) {
  const DataVector zeros(d.size(), 0.0);
  return interval_h(envelopes(d, zeros, lipschitz)).radius;
}

Design optimal_design(std::size_t n) {
  if (n == 0) {
    throw ValidationError("optimal design needs n >= 1");
  }
  std::vector<double> t(n);
  const double denom = 2.0 * static_cast<double>(n);
  for (std::size_t i = 0; i < n; ++i) {
    t[i] = static_cast<double>(2 * i + 1) / denom;
  }
  return Design(std::move(t));
}

std::int64_t m_eps(double lipschitz, double eps) {
  if (!std::isfinite(lipschitz) || !(lipschitz > 0.0)) {
    throw ValidationError("m(eps) needs L > 0");
  }
  if (!std::isfinite(eps) || !(eps > 0.0)) {
    throw ValidationError("m(eps) needs eps > 0");
  }
  const double ratio = lipschitz / (4.0 * eps * (1.0 + kEpsRelTol));
  if (ratio > 0x1p62) {
    throw CapacityError("m(eps) exceeds the 64-bit range for L=" + format_real(lipschitz) +
                        ", eps=" + format_real(eps));
  }
  const auto n = static_cast<std::int64_t>(std::ceil(ratio));
  return n < 1 ? 1 : n;
}

double query_complexity(double lipschitz, double eps, double cost) {
  if (!std::isfinite(cost) || !(cost > 0.0)) {
    throw ValidationError("query cost c must be positive");
  }
  return cost * static_cast<double>(m_eps(lipschitz, eps));
}

}  // namespace ibcq
