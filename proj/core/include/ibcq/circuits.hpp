#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "ibcq/func.hpp"
#include "ibcq/qsim.hpp"

namespace ibcq {

// QFT on the register whose k-th qubit carries bit k of the integer:
// |x> -> 2^{-t/2} sum_y exp(2 pi i x y / 2^t) |y>.
std::vector<GateOp> qft(std::span<const int> reg);
std::vector<GateOp> inverse_qft(std::span<const int> reg);

// Deterministic classical-in-quantum midpoint rule. For each index j the
// circuit flips the index register to j, queries, adds the value register
// into an accumulator of m' + m'' qubits, and queries again to clear the
// value register. The accumulator holds S = sum_j beta(f(tau(j))) and is
// decoded as range_lo + S * delta / 2^m' with delta = span / 2^m''.
//
// Layout: index [0, m'), value [m', m' + m''), accumulator after that;
// nu = 2 (m' + m''), T = 2^{m'+1} queries.
AlgorithmSpec reversible_midpoint_circuit(int m_prime, int m_double_prime, double range_lo, double range_hi);

struct MidpointRun {
  AlgorithmSpec algorithm;
  OutcomeDistribution distribution;
};

MidpointRun build_reversible_midpoint(int m_prime, int m_double_prime, const FunctionSpec& f, double range_lo,
                                      double range_hi, int max_qubits = kDefaultMaxQubits);

// Phase estimation on the Grover iterate -A S_0 A^dagger S_chi, where
// A = H^{m'} and chi marks indices with beta(f(tau(j))) = 1 (m'' = 1, so
// the threshold is the midpoint of [range_lo, range_hi]). Readout qubit k
// controls 2^k iterates; decode is sin^2(pi j / 2^t).
//
// Layout: index [0, m'), value qubit m', readout [m' + 1, m' + 1 + t).
// The value qubit is held in |+> and toggled to |-> by a CZ with the
// active readout qubit, so the uncontrolled query kicks back (-1)^chi only
// when that readout qubit is set.
AlgorithmSpec build_ae_mean(int m_prime, int readout_bits, double range_lo, double range_hi,
                            int max_qubits = kDefaultMaxQubits);

// Fraction of grid indices whose one-bit code is 1: what build_ae_mean estimates.
double discretized_mean(const FunctionSpec& f, const QuerySpec& q);

struct NamedFunction {
  std::string name;
  FunctionSpec f;
};

// A midpoint circuit sized for accuracy eps on the Lipschitz-L class,
// bundled with the finite test family it is verified against.
struct MidpointExample {
  AlgorithmSpec algorithm;
  std::vector<NamedFunction> family;
};

// m' = ceil(log2 m(eps)), range [-R, R] with R = L / 2^{m'+1} (the height
// of the fooling pair on the 2^m' grid), m'' = max(1, 8 - m'). The family
// is the fooling pair for the grid, the zero function, and the ramp
// R (2x - 1), each carrying the promise (L, -R, R).
MidpointExample midpoint_example(double eps, double lipschitz);

}  // namespace ibcq
