#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "ibcq/adversary.hpp"
#include "ibcq/func.hpp"
#include "ibcq/info.hpp"
#include "ibcq/qsim.hpp"

// Seeded generators for randomized property checks. Uniform reals are
// built from the top 53 bits of mt19937_64, so a seed reproduces the same
// instances on every platform.
namespace ibcq {

class Rng {
public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  // Integer in [0, n).
  std::uint64_t below(std::uint64_t n) { return static_cast<std::uint64_t>(uniform() * static_cast<double>(n)); }
  bool coin(double p_true = 0.5) { return uniform() < p_true; }

private:
  std::mt19937_64 engine_;
};

Design random_design(std::size_t n, Rng& rng);

// Breakpoints at 0, 1 and `interior` random abscissae; slopes uniform in [-L, L].
FunctionSpec random_lipschitz_pwl(double lipschitz, std::size_t interior, Rng& rng);

Quadrature random_quadrature(const Design& d, Rng& rng);

// M outcomes with random masses (some exactly zero) and values drawn from a
// coarse lattice so that ties occur.
OutcomeDistribution random_distribution(std::size_t outcomes, Rng& rng);

struct PlantedInstance {
  OutcomeDistribution dist;
  double truth = 0.0;
  double eps = 0.0;
};

// Outcomes within eps of a planted truth carry mass >= 3/4, so the local
// error against the truth is at most eps. Some values sit exactly on the
// eps boundary.
PlantedInstance planted_instance(Rng& rng, std::size_t max_outcomes = 12);

}  // namespace ibcq
