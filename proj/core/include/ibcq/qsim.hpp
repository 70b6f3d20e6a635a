#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "ibcq/func.hpp"

namespace ibcq {

using Amplitude = std::complex<double>;

// Dense simulation allocates 2^nu amplitudes; 20 qubits is 16 MiB.
inline constexpr int kDefaultMaxQubits = 20;

// Qubit q is bit q of the basis index (little-endian).
class QState {
public:
  // |0...0> on nu qubits. Throws CapacityError above max_qubits.
  explicit QState(int nu, int max_qubits = kDefaultMaxQubits);

  static QState basis(int nu, std::uint64_t index, int max_qubits = kDefaultMaxQubits);

  int qubits() const noexcept { return nu_; }
  std::size_t dimension() const noexcept { return amps_.size(); }

  std::span<const Amplitude> amplitudes() const noexcept { return amps_; }
  std::span<Amplitude> amplitudes() noexcept { return amps_; }

  double norm_squared() const noexcept;

private:
  int nu_;
  std::vector<Amplitude> amps_;
};

enum class GateKind { X, H, Phase, ControlledPhase, Swap, Unitary };

// One gate with optional extra control qubits. ControlledPhase(theta) on
// targets {a, b} applies diag(1, e^{i theta}) to b when a is set, and is
// symmetric in a and b. Explicit matrices are row-major; for a two-qubit
// matrix the local index is bit(targets[0]) + 2 * bit(targets[1]).
struct GateOp {
  GateKind kind = GateKind::X;
  std::vector<int> targets;
  std::vector<int> controls;
  double theta = 0.0;
  std::vector<Amplitude> matrix;

  static GateOp x(int q);
  static GateOp h(int q);
  static GateOp phase(int q, double theta);
  static GateOp cphase(int a, int b, double theta);
  static GateOp swap(int a, int b);
  static GateOp unitary(std::vector<int> targets, std::vector<Amplitude> matrix);

  GateOp controlled_by(std::vector<int> extra) const;
};

// Throws ValidationError on out-of-range or repeated qubits, wrong arity,
// or an explicit matrix that is not unitary to 1e-10.
void validate_gate(const GateOp& g, int nu);

void apply_gate(QState& s, const GateOp& g);

enum class TauRule { Midpoint, LeftEndpoint };

// Bit query Q_f |j>|k> = |j>|k xor beta(f(tau(j)))>. The index register is
// qubits [0, m_prime), the value register [m_prime, m_prime + m_double_prime).
struct QuerySpec {
  int m_prime = 1;
  int m_double_prime = 1;
  double range_lo = 0.0;
  double range_hi = 1.0;
  TauRule tau_rule = TauRule::Midpoint;

  std::uint64_t grid_size() const noexcept { return std::uint64_t{1} << m_prime; }
  std::uint64_t code_count() const noexcept { return std::uint64_t{1} << m_double_prime; }
};

void validate_query(const QuerySpec& q, int nu);

// Sample point for index j: (j + 1/2) / 2^m' or j / 2^m'.
double tau(const QuerySpec& q, std::uint64_t j);

// clamp(floor((y - lo) / (hi - lo) * 2^m''), 0, 2^m'' - 1).
std::uint64_t beta(const QuerySpec& q, double y);

// beta(f(tau(j))) for every index, plus the number of distinct sample points
// the table was built from.
struct QueryTable {
  std::vector<std::uint64_t> codes;
  std::size_t evaluations = 0;
};

QueryTable build_query_table(const FunctionSpec& f, const QuerySpec& q);

void bit_query(QState& s, const QuerySpec& q, const QueryTable& table);
void bit_query(QState& s, const FunctionSpec& f, const QuerySpec& q);

// Classical post-processing phi(j) of a measured outcome.
struct Decode {
  enum class Kind { Affine, SineSquared };

  Kind kind = Kind::Affine;
  double scale = 1.0;
  double offset = 0.0;
  int bits = 0;  // SineSquared: phi(j) = sin^2(pi j / 2^bits)

  static Decode affine(double scale, double offset);
  static Decode sine_squared(int bits);

  double operator()(std::uint64_t j) const;
};

using Layer = std::vector<GateOp>;

// |psi> = U_T Q_f U_{T-1} Q_f ... U_1 Q_f U_0 |0...0>, with layers = U_0..U_T.
// Outcome j has bit k equal to the measured value of qubit measured[k].
struct AlgorithmSpec {
  int nu = 1;
  QuerySpec query;
  std::vector<Layer> layers;
  std::vector<int> measured;
  Decode decode;

  std::size_t query_count() const noexcept { return layers.empty() ? 0 : layers.size() - 1; }
  std::uint64_t outcome_count() const noexcept { return std::uint64_t{1} << measured.size(); }
};

// Capacity is checked first (CapacityError), then structure (ValidationError).
void validate_algorithm(const AlgorithmSpec& a, int max_qubits = kDefaultMaxQubits);

struct RunResult {
  QState state;
  std::size_t queries = 0;
  // Distinct grid points the query reads: n = 2^m'.
  std::size_t evaluations = 0;
};

RunResult run(const AlgorithmSpec& a, const FunctionSpec& f, int max_qubits = kDefaultMaxQubits);

struct Outcome {
  std::uint64_t j = 0;
  double p = 0.0;
  double phi = 0.0;
};

struct OutcomeDistribution {
  std::vector<Outcome> entries;

  double total_mass() const noexcept;
};

inline constexpr double kDistributionTol = 1e-12;

// p >= 0, distinct outcomes, total mass 1 within kDistributionTol.
void validate_distribution(const OutcomeDistribution& d);

// Exact distribution over all 2^|measured| outcomes, ordered by j.
OutcomeDistribution measure(const QState& s, const AlgorithmSpec& a);

}  // namespace ibcq
