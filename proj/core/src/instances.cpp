#include "ibcq/instances.hpp"

#include <algorithm>
#include <cmath>

#include "ibcq/errors.hpp"

namespace ibcq {
namespace {

std::vector<double> random_weights(std::size_t n, Rng& rng, double zero_chance) {
  std::vector<double> w(n);
  double total = 0.0;
  for (double& v : w) {
    v = rng.coin(zero_chance) ? 0.0 : rng.uniform(0.01, 1.0);
    total += v;
  }
  if (total == 0.0) {
    w[rng.below(n)] = 1.0;
    total = 1.0;
  }
  for (double& v : w) v /= total;
  return w;
}

}  // namespace

Design random_design(std::size_t n, Rng& rng) {
  if (n == 0) {
    throw ValidationError("random design needs n >= 1");
  }
  while (true) {
    std::vector<double> t(n);
    for (double& v : t) v = rng.uniform();
    std::sort(t.begin(), t.end());
    if (std::adjacent_find(t.begin(), t.end()) == t.end()) {
      return Design(std::move(t));
    }
  }
}

FunctionSpec random_lipschitz_pwl(double lipschitz, std::size_t interior, Rng& rng) {
  std::vector<double> xs{0.0, 1.0};
  for (std::size_t i = 0; i < interior; ++i) xs.push_back(rng.uniform());
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());

  std::vector<Point> pts;
  double y = rng.uniform(-1.0, 1.0);
  pts.push_back({xs[0], y});
  for (std::size_t i = 1; i < xs.size(); ++i) {
    y += rng.uniform(-lipschitz, lipschitz) * (xs[i] - xs[i - 1]);
    pts.push_back({xs[i], y});
  }
  return FunctionSpec::piecewise_linear(std::move(pts));
}

Quadrature random_quadrature(const Design& d, Rng& rng) {
  std::vector<double> w(d.size());
  for (double& v : w) v = rng.uniform(-2.0, 2.0);
  return Quadrature(d, std::move(w));
}

OutcomeDistribution random_distribution(std::size_t outcomes, Rng& rng) {
  if (outcomes == 0) {
    throw ValidationError("random distribution needs at least one outcome");
  }
  const std::vector<double> p = random_weights(outcomes, rng, 0.1);
  const bool lattice = rng.coin();
  OutcomeDistribution d;
  for (std::size_t j = 0; j < outcomes; ++j) {
    const double phi = lattice ? 0.25 * static_cast<double>(rng.below(9)) - 1.0 : rng.uniform(-1.0, 1.0);
    d.entries.push_back({j, p[j], phi});
  }
  return d;
}

PlantedInstance planted_instance(Rng& rng, std::size_t max_outcomes) {
  while (true) {
    PlantedInstance inst;
    inst.eps = std::exp(rng.uniform(std::log(1e-4), std::log(1.0)));
    inst.truth = rng.uniform(-4.0, 4.0);
    const std::size_t m = 1 + rng.below(max_outcomes);
    const std::size_t inside = 1 + rng.below(m);
    const double inside_mass = (inside == m) ? 1.0 : rng.uniform(0.75, 1.0);

    const std::vector<double> w_in = random_weights(inside, rng, 0.05);
    const std::vector<double> w_out = (inside < m) ? random_weights(m - inside, rng, 0.05) : std::vector<double>{};

    for (std::size_t j = 0; j < m; ++j) {
      double phi = 0.0;
      double p = 0.0;
      if (j < inside) {
        const double r = rng.uniform();
        const double offset = r < 0.15 ? -inst.eps : (r < 0.3 ? inst.eps : rng.uniform(-inst.eps, inst.eps));
        phi = inst.truth + offset;
        p = inside_mass * w_in[j];
      } else {
        const double side = rng.coin() ? 1.0 : -1.0;
        phi = inst.truth + side * inst.eps * rng.uniform(1.0, 6.0);
        p = (1.0 - inside_mass) * w_out[j - inside];
      }
      inst.dist.entries.push_back({j, p, phi});
    }
    // Shuffle outcome labels so position carries no information.
    for (std::size_t j = m; j > 1; --j) {
      Outcome& a = inst.dist.entries[j - 1];
      Outcome& b = inst.dist.entries[rng.below(j)];
      std::swap(a.p, b.p);
      std::swap(a.phi, b.phi);
    }

    double mass = 0.0;
    double total = 0.0;
    for (const Outcome& o : inst.dist.entries) {
      total += o.p;
      if (std::abs(inst.truth - o.phi) <= inst.eps) mass += o.p;
    }
    if (mass >= 0.75 && std::abs(total - 1.0) <= kDistributionTol) {
      return inst;
    }
  }
}

}  // namespace ibcq
