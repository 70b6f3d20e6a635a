#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "ibcq/func.hpp"

namespace ibcq {

// Nonadaptive sample points 0 <= t_1 < ... < t_n <= 1, n >= 1.
class Design {
public:
  explicit Design(std::vector<double> points);

  std::span<const double> points() const noexcept { return points_; }
  std::size_t size() const noexcept { return points_.size(); }
  double operator[](std::size_t i) const { return points_[i]; }

  friend bool operator==(const Design&, const Design&) = default;

private:
  std::vector<double> points_;
};

// y_f = [f(t_1), ..., f(t_n)]; always paired with the Design it came from.
using DataVector = std::vector<double>;

// Pointwise extremes of the Lipschitz-L functions that interpolate the data.
// Both are exact piecewise-linear functions with breakpoints at design points
// and at the crossing of adjacent cones.
struct Envelope {
  FunctionSpec upper;
  FunctionSpec lower;
};

// H = [h_lo, h_hi] is the set of integrals consistent with the data.
struct RadiusReport {
  double h_lo = 0.0;
  double h_hi = 0.0;
  double radius = 0.0;
  double center = 0.0;
};

// Absolute tolerance on the pairwise consistency check |y_i - y_j| <= L |t_i - t_j|.
inline constexpr double kConsistencyTol = 1e-12;

DataVector observe(const FunctionSpec& f, const Design& d);

// Throws InfeasibleDataError when no Lipschitz-L function interpolates y.
void check_consistent(const Design& d, std::span<const double> y, double lipschitz);

Envelope envelopes(const Design& d, std::span<const double> y, double lipschitz);

RadiusReport interval_h(const Envelope& e);

// Supremum of the radius over all data, attained at y = 0:
// L * integral of min_i |x - t_i|, integrated exactly through the envelope.
double worst_radius(const Design& d, double lipschitz);

// Midpoint design t_i = (2i - 1) / (2n), which minimizes worst_radius.
Design optimal_design(std::size_t n);

// Relative slack used when comparing L/(4n) against eps, so that an eps
// produced by float arithmetic (3 * (1/1200) vs 1/400) does not shift m by one.
inline constexpr double kEpsRelTol = 1e-12;

// Smallest n >= 1 with L / (4n) <= eps.
std::int64_t m_eps(double lipschitz, double eps);

// Classical query complexity: cost per query times m_eps.
double query_complexity(double lipschitz, double eps, double cost = 1.0);

}  // namespace ibcq
