#include "ibcq/perr.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "ibcq/errors.hpp"
#include "ibcq/format.hpp"
#include "ibcq/info.hpp"

namespace ibcq {
namespace {

constexpr double kBoundTol = 1e-12;
constexpr double kPremiseTol = 1e-12;

bool reaches_threshold(double mass) { return mass >= kSuccessMass - kMassTol; }

void require_positive(double v, const char* what) {
  if (!std::isfinite(v) || !(v > 0.0)) {
    throw ValidationError(std::string(what) + " must be positive");
  }
}

// phi values within a 2 eps window, with slack for rounding in phi itself.
bool within_width(double lo, double hi, double eps) {
  const double scale = std::max({1.0, std::abs(lo), std::abs(hi)});
  return hi - lo <= 2.0 * eps + 1e-12 * scale;
}

}  // namespace

double local_error(const OutcomeDistribution& dist, double truth) {
  validate_distribution(dist);
  std::vector<std::pair<double, double>> by_distance;  // (|truth - phi|, p)
  by_distance.reserve(dist.entries.size());
  for (const Outcome& o : dist.entries) {
    by_distance.emplace_back(std::abs(truth - o.phi), o.p);
  }
  std::stable_sort(by_distance.begin(), by_distance.end(),
                   [](const auto& a, const auto& b) { return a.first < b.first; });
  double mass = 0.0;
  for (const auto& [distance, p] : by_distance) {
    mass += p;
    if (reaches_threshold(mass)) {
      return distance;
    }
  }
  // Unreachable for a validated distribution.
  return by_distance.back().first;
}

double local_error_setform(const OutcomeDistribution& dist, double truth) {
  validate_distribution(dist);
  const std::size_t m = dist.entries.size();
  if (m > kMaxSetformOutcomes) {
    throw CapacityError("subset enumeration supports at most " + std::to_string(kMaxSetformOutcomes) +
                        " outcomes, got " + std::to_string(m));
  }
  double best = std::numeric_limits<double>::infinity();
  for (std::uint32_t subset = 1; subset < (std::uint32_t{1} << m); ++subset) {
    double mass = 0.0;
    double worst = 0.0;
    for (std::size_t k = 0; k < m; ++k) {
      if ((subset >> k) & 1U) {
        mass += dist.entries[k].p;
        worst = std::max(worst, std::abs(truth - dist.entries[k].phi));
      }
    }
    if (reaches_threshold(mass)) {
      best = std::min(best, worst);
    }
  }
  return best;
}

std::vector<FamilyMember> integration_family(std::span<const FunctionSpec> functions,
                                             std::span<const std::string> names) {
  std::vector<FamilyMember> family;
  family.reserve(functions.size());
  for (std::size_t i = 0; i < functions.size(); ++i) {
    std::string name = i < names.size() ? names[i] : "f" + std::to_string(i);
    family.push_back({std::move(name), functions[i], exact_integral(functions[i])});
  }
  return family;
}

double worst_prob_error(const AlgorithmSpec& a, std::span<const FamilyMember> family, int max_qubits) {
  if (family.empty()) {
    throw ValidationError("worst probabilistic error needs a nonempty family");
  }
  double worst = 0.0;
  for (const FamilyMember& member : family) {
    const RunResult r = run(a, member.f, max_qubits);
    worst = std::max(worst, local_error(measure(r.state, a), member.truth));
  }
  return worst;
}

double wor_error_lower(const Quadrature& q, double lipschitz) { return foil(q, lipschitz); }

Extraction extract(const OutcomeDistribution& dist, double eps) {
  validate_distribution(dist);
  require_positive(eps, "eps");

  std::vector<Outcome> sorted = dist.entries;
  std::stable_sort(sorted.begin(), sorted.end(), [](const Outcome& a, const Outcome& b) {
    return a.phi < b.phi || (a.phi == b.phi && a.j < b.j);
  });
  std::vector<double> prefix(sorted.size() + 1, 0.0);
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    prefix[i + 1] = prefix[i] + sorted[i].p;
  }

  bool found = false;
  std::size_t best_lo = 0;
  std::size_t best_hi = 0;  // exclusive
  double best_mass = 0.0;
  std::size_t hi = 0;
  for (std::size_t lo = 0; lo < sorted.size(); ++lo) {
    hi = std::max(hi, lo + 1);
    while (hi < sorted.size() && within_width(sorted[lo].phi, sorted[hi].phi, eps)) {
      ++hi;
    }
    const double mass = prefix[hi] - prefix[lo];
    if (reaches_threshold(mass) && (!found || mass > best_mass)) {
      found = true;
      best_lo = lo;
      best_hi = hi;
      best_mass = mass;
    }
  }
  if (!found) {
    throw PremiseViolation("no outcome window of width 2*eps=" + format_real(2.0 * eps) +
                           " carries probability 3/4");
  }

  Extraction ex;
  ex.cluster.mass = best_mass;
  ex.cluster.phi_lo = sorted[best_lo].phi;
  ex.cluster.phi_hi = sorted[best_hi - 1].phi;
  std::size_t rep = best_lo;
  for (std::size_t i = best_lo; i < best_hi; ++i) {
    ex.cluster.members.push_back(sorted[i].j);
    if (sorted[i].p > sorted[rep].p) {
      rep = i;
    }
  }
  ex.value = sorted[rep].phi;
  ex.representative = sorted[rep].j;
  return ex;
}

double qubit_lower_bound(double lipschitz, double eps, double cost) {
  require_positive(eps, "eps");
  return std::log2(query_complexity(lipschitz, 3.0 * eps, cost)) - 1.0;
}

BoundReport verify_bound(const AlgorithmSpec& a, std::span<const FamilyMember> family, double lipschitz,
                         double eps, double cost, std::uint64_t classical_evals, int max_qubits) {
  require_positive(lipschitz, "L");
  require_positive(eps, "eps");
  require_positive(cost, "c");
  validate_algorithm(a, max_qubits);
  if (family.empty()) {
    throw ValidationError("bound verification needs a nonempty family");
  }

  BoundReport report;
  report.nu = a.nu;
  report.eps = eps;
  report.lipschitz = lipschitz;
  report.cost = cost;

  double worst = 0.0;
  std::size_t evaluations = 0;
  for (const FamilyMember& member : family) {
    const RunResult r = run(a, member.f, max_qubits);
    evaluations = std::max(evaluations, r.evaluations);
    worst = std::max(worst, local_error(measure(r.state, a), member.truth));
  }
  report.worst_prob_error = worst;
  report.n_eps = evaluations;
  if (classical_evals > report.n_eps) {
    throw ValidationError("classical components may use at most n(eps)=" + std::to_string(report.n_eps) +
                          " function evaluations, got " + std::to_string(classical_evals));
  }
  report.classical_evals = classical_evals;

  report.rhs = qubit_lower_bound(lipschitz, eps, cost);
  report.m_3eps = m_eps(lipschitz, 3.0 * eps);
  report.evals_cover_3eps =
      2.0 * static_cast<double>(report.n_eps) >= query_complexity(lipschitz, 3.0 * eps, cost) / cost;
  report.satisfied = static_cast<double>(report.nu) >= report.rhs - kBoundTol;
  report.status = (worst <= eps + kPremiseTol) ? BoundStatus::Ok : BoundStatus::NotApplicable;
  return report;
}

}  // namespace ibcq
