#pragma once

#include <span>
#include <vector>

#include "ibcq/func.hpp"
#include "ibcq/info.hpp"

namespace ibcq {

// Two Lipschitz-L functions that vanish on every design point and whose
// integrals differ by twice the worst-case radius. No algorithm using only
// the values at the design can tell them apart.
struct FoolingPair {
  FunctionSpec plus;   // L * min_i |x - t_i|
  FunctionSpec minus;  // -plus
  double gap = 0.0;    // I(plus) - I(minus)
};

// phi(f) = sum_j weights[j] * f(design[j]).
struct Quadrature {
  Design design;
  std::vector<double> weights;

  Quadrature(Design d, std::vector<double> w);

  double apply(std::span<const double> data) const;
};

FoolingPair fooling_pair(const Design& d, double lipschitz);

// Certified lower bound on the worst-case error of q over the Lipschitz-L
// class: the larger of q's errors on the two members of the fooling pair.
double foil(const Quadrature& q, double lipschitz);

}  // namespace ibcq
