#include "ibcq/adversary.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "ibcq/errors.hpp"

namespace ibcq {

Quadrature::Quadrature(Design d, std::vector<double> w) : design(std::move(d)), weights(std::move(w)) {
  if (weights.size() != design.size()) {
    throw ValidationError("quadrature has " + std::to_string(weights.size()) + " weights for " +
                          std::to_string(design.size()) + " points");
  }
  for (double a : weights) {
    if (!std::isfinite(a)) {
      throw ValidationError("quadrature weights must be finite");
    }
  }
}

double Quadrature::apply(std::span<const double> data) const {
  if (data.size() != weights.size()) {
    throw ValidationError("quadrature applied to data of the wrong length");
  }
  double sum = 0.0;
  for (std::size_t j = 0; j < weights.size(); ++j) {
    sum += weights[j] * data[j];
  }
  return sum;
}

FoolingPair fooling_pair(const Design& d, double lipschitz) {
  if (!std::isfinite(lipschitz) || !(lipschitz > 0.0)) {
    throw ValidationError("fooling pair needs L > 0");
  }
  const DataVector zeros(d.size(), 0.0);
  Envelope e = envelopes(d, zeros, lipschitz);
  const RadiusReport r = interval_h(e);
  return FoolingPair{std::move(e.upper), std::move(e.lower), r.h_hi - r.h_lo};
}

double foil(const Quadrature& q, double lipschitz) {
  const FoolingPair pair = fooling_pair(q.design, lipschitz);
  const double est_plus = q.apply(observe(pair.plus, q.design));
  const double est_minus = q.apply(observe(pair.minus, q.design));
  return std::max(std::abs(exact_integral(pair.plus) - est_plus),
                  std::abs(exact_integral(pair.minus) - est_minus));
}

}  // namespace ibcq
