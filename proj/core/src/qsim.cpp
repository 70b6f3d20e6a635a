#include "ibcq/qsim.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>
#include <string>

#include "ibcq/errors.hpp"
#include "ibcq/format.hpp"

namespace ibcq {
namespace {

using Index = std::uint64_t;

constexpr double kUnitaryTol = 1e-10;

Index bit(int q) { return Index{1} << q; }

Index mask_of(const std::vector<int>& qubits) {
  Index m = 0;
  for (int q : qubits) {
    m |= bit(q);
  }
  return m;
}

void require_qubit_count(int nu, int max_qubits) {
  if (nu > max_qubits) {
    throw CapacityError("state needs " + std::to_string(nu) + " qubits, cap is " + std::to_string(max_qubits));
  }
  if (nu < 1) {
    throw ValidationError("qubit count must be at least 1");
  }
}

std::size_t expected_arity(GateKind k) {
  switch (k) {
    case GateKind::ControlledPhase:
    case GateKind::Swap:
      return 2;
    default:
      return 1;
  }
}

// 2x2 row-major matrix applied to `target` wherever all control bits are set.
void apply_single(std::span<Amplitude> a, int target, Index controls, const Amplitude m[4]) {
  const Index t = bit(target);
  for (Index i = 0; i < a.size(); ++i) {
    if ((i & t) != 0 || (i & controls) != controls) {
      continue;
    }
    const Amplitude a0 = a[i];
    const Amplitude a1 = a[i | t];
    a[i] = m[0] * a0 + m[1] * a1;
    a[i | t] = m[2] * a0 + m[3] * a1;
  }
}

void apply_x(std::span<Amplitude> a, int target, Index controls) {
  const Index t = bit(target);
  for (Index i = 0; i < a.size(); ++i) {
    if ((i & t) == 0 && (i & controls) == controls) {
      std::swap(a[i], a[i | t]);
    }
  }
}

// Multiplies by `factor` every amplitude whose `mask` bits are all set.
void apply_diagonal(std::span<Amplitude> a, Index mask, Amplitude factor) {
  for (Index i = 0; i < a.size(); ++i) {
    if ((i & mask) == mask) {
      a[i] *= factor;
    }
  }
}

void apply_swap(std::span<Amplitude> a, int qa, int qb, Index controls) {
  const Index ba = bit(qa);
  const Index bb = bit(qb);
  for (Index i = 0; i < a.size(); ++i) {
    if ((i & ba) != 0 && (i & bb) == 0 && (i & controls) == controls) {
      std::swap(a[i], a[(i ^ ba) | bb]);
    }
  }
}

void apply_two(std::span<Amplitude> a, int q0, int q1, Index controls, const std::vector<Amplitude>& m) {
  const Index b0 = bit(q0);
  const Index b1 = bit(q1);
  for (Index i = 0; i < a.size(); ++i) {
    if ((i & (b0 | b1)) != 0 || (i & controls) != controls) {
      continue;
    }
    const Index idx[4] = {i, i | b0, i | b1, i | b0 | b1};
    Amplitude in[4];
    for (int r = 0; r < 4; ++r) {
      in[r] = a[idx[r]];
    }
    for (int r = 0; r < 4; ++r) {
      Amplitude acc = 0.0;
      for (int c = 0; c < 4; ++c) {
        acc += m[4 * r + c] * in[c];
      }
      a[idx[r]] = acc;
    }
  }
}

bool is_unitary(const std::vector<Amplitude>& m, std::size_t dim) {
  for (std::size_t r = 0; r < dim; ++r) {
    for (std::size_t c = 0; c < dim; ++c) {
      Amplitude dot = 0.0;
      for (std::size_t k = 0; k < dim; ++k) {
        dot += std::conj(m[k * dim + r]) * m[k * dim + c];
      }
      const Amplitude expect = (r == c) ? 1.0 : 0.0;
      if (std::abs(dot - expect) > kUnitaryTol) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace

QState::QState(int nu, int max_qubits) : nu_(nu) {
  require_qubit_count(nu, max_qubits);
  amps_.assign(std::size_t{1} << nu, Amplitude{0.0, 0.0});
  amps_[0] = 1.0;
}

QState QState::basis(int nu, std::uint64_t index, int max_qubits) {
  QState s(nu, max_qubits);
  if (index >= s.dimension()) {
    throw ValidationError("basis index out of range");
  }
  s.amps_[0] = 0.0;
  s.amps_[index] = 1.0;
  return s;
}

double QState::norm_squared() const noexcept {
  double sum = 0.0;
  for (const Amplitude& a : amps_) {
    sum += std::norm(a);
  }
  return sum;
}

GateOp GateOp::x(int q) { return GateOp{GateKind::X, {q}, {}, 0.0, {}}; }
GateOp GateOp::h(int q) { return GateOp{GateKind::H, {q}, {}, 0.0, {}}; }
GateOp GateOp::phase(int q, double theta) { return GateOp{GateKind::Phase, {q}, {}, theta, {}}; }
GateOp GateOp::cphase(int a, int b, double theta) {
  return GateOp{GateKind::ControlledPhase, {a, b}, {}, theta, {}};
}
GateOp GateOp::swap(int a, int b) { return GateOp{GateKind::Swap, {a, b}, {}, 0.0, {}}; }
GateOp GateOp::unitary(std::vector<int> targets, std::vector<Amplitude> matrix) {
  return GateOp{GateKind::Unitary, std::move(targets), {}, 0.0, std::move(matrix)};
}

GateOp GateOp::controlled_by(std::vector<int> extra) const {
  GateOp g = *this;
  g.controls.insert(g.controls.end(), extra.begin(), extra.end());
  return g;
}

void validate_gate(const GateOp& g, int nu) {
  std::set<int> seen;
  auto check = [&](int q) {
    if (q < 0 || q >= nu) {
      throw ValidationError("gate qubit " + std::to_string(q) + " outside register of " + std::to_string(nu));
    }
    if (!seen.insert(q).second) {
      throw ValidationError("gate uses qubit " + std::to_string(q) + " more than once");
    }
  };
  for (int q : g.targets) check(q);
  for (int q : g.controls) check(q);

  if (g.kind == GateKind::Unitary) {
    const std::size_t arity = g.targets.size();
    if (arity != 1 && arity != 2) {
      throw ValidationError("explicit unitary must act on one or two qubits");
    }
    const std::size_t dim = std::size_t{1} << arity;
    if (g.matrix.size() != dim * dim) {
      throw ValidationError("explicit unitary has " + std::to_string(g.matrix.size()) + " entries, expected " +
                            std::to_string(dim * dim));
    }
    if (!is_unitary(g.matrix, dim)) {
      throw ValidationError("explicit matrix is not unitary to 1e-10");
    }
  } else if (g.targets.size() != expected_arity(g.kind)) {
    throw ValidationError("gate has " + std::to_string(g.targets.size()) + " targets, expected " +
                          std::to_string(expected_arity(g.kind)));
  }
  if (!std::isfinite(g.theta)) {
    throw ValidationError("gate angle must be finite");
  }
}

void apply_gate(QState& s, const GateOp& g) {
  validate_gate(g, s.qubits());
  auto a = s.amplitudes();
  const Index controls = mask_of(g.controls);
  switch (g.kind) {
    case GateKind::X:
      apply_x(a, g.targets[0], controls);
      break;
    case GateKind::H: {
      const double r = std::numbers::sqrt2 / 2.0;
      const Amplitude m[4] = {r, r, r, -r};
      apply_single(a, g.targets[0], controls, m);
      break;
    }
    case GateKind::Phase:
      apply_diagonal(a, controls | bit(g.targets[0]), std::polar(1.0, g.theta));
      break;
    case GateKind::ControlledPhase:
      apply_diagonal(a, controls | bit(g.targets[0]) | bit(g.targets[1]), std::polar(1.0, g.theta));
      break;
    case GateKind::Swap:
      apply_swap(a, g.targets[0], g.targets[1], controls);
      break;
    case GateKind::Unitary:
      if (g.targets.size() == 1) {
        const Amplitude m[4] = {g.matrix[0], g.matrix[1], g.matrix[2], g.matrix[3]};
        apply_single(a, g.targets[0], controls, m);
      } else {
        apply_two(a, g.targets[0], g.targets[1], controls, g.matrix);
      }
      break;
  }
}

void validate_query(const QuerySpec& q, int nu) {
  if (q.m_prime < 1 || q.m_double_prime < 1) {
    throw ValidationError("query registers need m' >= 1 and m'' >= 1");
  }
  if (q.m_prime + q.m_double_prime > nu) {
    throw ValidationError("query registers (" + std::to_string(q.m_prime + q.m_double_prime) +
                          " qubits) do not fit in nu=" + std::to_string(nu));
  }
  if (!std::isfinite(q.range_lo) || !std::isfinite(q.range_hi) || !(q.range_lo < q.range_hi)) {
    throw ValidationError("query range requires finite range_lo < range_hi");
  }
}

double tau(const QuerySpec& q, std::uint64_t j) {
  const double n = static_cast<double>(q.grid_size());
  const double x = static_cast<double>(j);
  return q.tau_rule == TauRule::Midpoint ? (x + 0.5) / n : x / n;
}

std::uint64_t beta(const QuerySpec& q, double y) {
  const double codes = static_cast<double>(q.code_count());
  const double scaled = std::floor((y - q.range_lo) / (q.range_hi - q.range_lo) * codes);
  if (!(scaled > 0.0)) {
    return 0;
  }
  if (scaled >= codes - 1.0) {
    return q.code_count() - 1;
  }
  return static_cast<std::uint64_t>(scaled);
}

QueryTable build_query_table(const FunctionSpec& f, const QuerySpec& q) {
  QueryTable table;
  table.codes.resize(q.grid_size());
  std::set<double> points;
  for (std::uint64_t j = 0; j < q.grid_size(); ++j) {
    const double t = tau(q, j);
    points.insert(t);
    table.codes[j] = beta(q, eval(f, t));
  }
  table.evaluations = points.size();
  return table;
}

void bit_query(QState& s, const QuerySpec& q, const QueryTable& table) {
  validate_query(q, s.qubits());
  if (table.codes.size() != q.grid_size()) {
    throw ValidationError("query table size does not match 2^m'");
  }
  auto a = s.amplitudes();
  const Index index_mask = q.grid_size() - 1;
  const int shift = q.m_prime;
  for (Index i = 0; i < a.size(); ++i) {
    const Index partner = i ^ (table.codes[i & index_mask] << shift);
    if (partner > i) {
      std::swap(a[i], a[partner]);
    }
  }
}

void bit_query(QState& s, const FunctionSpec& f, const QuerySpec& q) {
  validate_query(q, s.qubits());
  bit_query(s, q, build_query_table(f, q));
}

Decode Decode::affine(double scale, double offset) {
  Decode d;
  d.kind = Kind::Affine;
  d.scale = scale;
  d.offset = offset;
  return d;
}

Decode Decode::sine_squared(int bits) {
  Decode d;
  d.kind = Kind::SineSquared;
  d.bits = bits;
  return d;
}

double Decode::operator()(std::uint64_t j) const {
  if (kind == Kind::Affine) {
    return scale * static_cast<double>(j) + offset;
  }
  const double s = std::sin(std::numbers::pi * static_cast<double>(j) / std::ldexp(1.0, bits));
  return s * s;
}

void validate_algorithm(const AlgorithmSpec& a, int max_qubits) {
  require_qubit_count(a.nu, max_qubits);
  validate_query(a.query, a.nu);
  if (a.layers.empty()) {
    throw ValidationError("algorithm needs at least one unitary layer (U_0)");
  }
  for (const Layer& layer : a.layers) {
    for (const GateOp& g : layer) {
      validate_gate(g, a.nu);
    }
  }
  if (a.measured.empty()) {
    throw ValidationError("algorithm measures no qubits");
  }
  std::set<int> seen;
  for (int q : a.measured) {
    if (q < 0 || q >= a.nu || !seen.insert(q).second) {
      throw ValidationError("measured qubits must be distinct and below nu");
    }
  }
  if (a.decode.kind == Decode::Kind::Affine) {
    if (!std::isfinite(a.decode.scale) || !std::isfinite(a.decode.offset)) {
      throw ValidationError("affine decode needs finite scale and offset");
    }
  } else if (a.decode.bits < 1 || a.decode.bits > 62) {
    throw ValidationError("sine-squared decode needs 1 <= bits <= 62");
  }
}

RunResult run(const AlgorithmSpec& a, const FunctionSpec& f, int max_qubits) {
  validate_algorithm(a, max_qubits);
  const QueryTable table = build_query_table(f, a.query);
  RunResult result{QState(a.nu, max_qubits), 0, table.evaluations};
  for (std::size_t i = 0; i < a.layers.size(); ++i) {
    if (i > 0) {
      bit_query(result.state, a.query, table);
      ++result.queries;
    }
    for (const GateOp& g : a.layers[i]) {
      apply_gate(result.state, g);
    }
  }
  return result;
}

double OutcomeDistribution::total_mass() const noexcept {
  double sum = 0.0;
  for (const Outcome& o : entries) {
    sum += o.p;
  }
  return sum;
}

void validate_distribution(const OutcomeDistribution& d) {
  if (d.entries.empty()) {
    throw ValidationError("distribution has no outcomes");
  }
  std::set<std::uint64_t> seen;
  for (const Outcome& o : d.entries) {
    if (!std::isfinite(o.p) || o.p < 0.0) {
      throw ValidationError("outcome " + std::to_string(o.j) + " has invalid probability " + format_real(o.p));
    }
    if (!std::isfinite(o.phi)) {
      throw ValidationError("outcome " + std::to_string(o.j) + " has non-finite value");
    }
    if (!seen.insert(o.j).second) {
      throw ValidationError("outcome " + std::to_string(o.j) + " listed twice");
    }
  }
  const double total = d.total_mass();
  if (std::abs(total - 1.0) > kDistributionTol) {
    throw ValidationError("probabilities sum to " + format_real(total) + ", not 1");
  }
}

OutcomeDistribution measure(const QState& s, const AlgorithmSpec& a) {
  if (s.qubits() != a.nu) {
    throw ValidationError("state and algorithm disagree on qubit count");
  }
  std::vector<double> mass(a.outcome_count(), 0.0);
  const auto amps = s.amplitudes();
  for (Index i = 0; i < amps.size(); ++i) {
    const double p = std::norm(amps[i]);
    if (p == 0.0) {
      continue;
    }
    Index j = 0;
    for (std::size_t k = 0; k < a.measured.size(); ++k) {
      j |= ((i >> a.measured[k]) & 1U) << k;
    }
    mass[j] += p;
  }
  OutcomeDistribution d;
  d.entries.reserve(mass.size());
  for (Index j = 0; j < mass.size(); ++j) {
    d.entries.push_back({j, mass[j], a.decode(j)});
  }
  return d;
}

}  // namespace ibcq
