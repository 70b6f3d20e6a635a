#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "ibcq/adversary.hpp"
#include "ibcq/func.hpp"
#include "ibcq/qsim.hpp"

namespace ibcq {

// Success probability the error functionals are defined against.
inline constexpr double kSuccessMass = 0.75;
// Additive slack on comparisons against kSuccessMass.
inline constexpr double kMassTol = 1e-12;

// Smallest alpha such that outcomes within alpha of `truth` carry mass >= 3/4.
// Greedy over outcomes sorted by distance to the truth.
double local_error(const OutcomeDistribution& dist, double truth);

// Largest distribution local_error_setform will enumerate subsets of.
inline constexpr std::size_t kMaxSetformOutcomes = 16;

// min over outcome sets A with mass(A) >= 3/4 of max_{j in A} |truth - phi(j)|,
// by enumerating all 2^M subsets. CapacityError above kMaxSetformOutcomes.
double local_error_setform(const OutcomeDistribution& dist, double truth);

struct FamilyMember {
  std::string name;
  FunctionSpec f;
  double truth = 0.0;  // S(f); the integral for the built-in problem.
};

// Members whose truth is the exact integral.
std::vector<FamilyMember> integration_family(std::span<const FunctionSpec> functions,
                                             std::span<const std::string> names = {});

// max over the family of local_error(measure(run(a, f)), truth).
double worst_prob_error(const AlgorithmSpec& a, std::span<const FamilyMember> family,
                        int max_qubits = kDefaultMaxQubits);

// Certified lower bound on the worst-case deterministic error of q.
double wor_error_lower(const Quadrature& q, double lipschitz);

// Outcomes whose values lie in [phi_lo, phi_hi], a window of width <= 2 eps.
struct OutcomeCluster {
  std::vector<std::uint64_t> members;
  double mass = 0.0;
  double phi_lo = 0.0;
  double phi_hi = 0.0;
};

struct Extraction {
  double value = 0.0;
  std::uint64_t representative = 0;
  OutcomeCluster cluster;
};

// Deterministic 3 eps-accurate value from a distribution whose local error
// is at most eps. Among maximal windows of width 2 eps (in phi order) with
// mass >= 3/4, takes the heaviest (ties: leftmost) and returns the value of
// its most probable outcome (ties: smallest phi). Throws PremiseViolation
// when no window qualifies.
Extraction extract(const OutcomeDistribution& dist, double eps);

// log2(comp_query(3 eps)) - 1.
double qubit_lower_bound(double lipschitz, double eps, double cost = 1.0);

enum class BoundStatus { Ok, NotApplicable };

struct BoundReport {
  BoundStatus status = BoundStatus::Ok;
  int nu = 0;
  std::uint64_t n_eps = 0;            // function evaluations encoded by the query
  std::uint64_t classical_evals = 0;  // allowed to the classical components, <= n_eps
  double rhs = 0.0;                   // log2(comp_query(3 eps)) - 1
  double worst_prob_error = 0.0;
  double eps = 0.0;
  double lipschitz = 0.0;
  double cost = 1.0;
  std::int64_t m_3eps = 0;
  bool evals_cover_3eps = false;  // 2 n_eps >= comp_query(3 eps) / c
  bool satisfied = false;  // nu >= rhs
};

// Runs the algorithm over the family; status is NotApplicable when the
// worst probabilistic error exceeds eps.
BoundReport verify_bound(const AlgorithmSpec& a, std::span<const FamilyMember> family, double lipschitz,
                         double eps, double cost = 1.0, std::uint64_t classical_evals = 0,
                         int max_qubits = kDefaultMaxQubits);

}  // namespace ibcq
