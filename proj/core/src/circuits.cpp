#include "ibcq/circuits.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <string>

#include "ibcq/adversary.hpp"
#include "ibcq/errors.hpp"
#include "ibcq/info.hpp"

namespace ibcq {
namespace {

// Adds the integer held in `addend` into `acc` (mod 2^|acc|) using
// multi-controlled X gates: for each addend bit b, increment acc starting
// at bit b, flipping higher bits first.
void append_adder(Layer& layer, std::span<const int> addend, std::span<const int> acc) {
  const std::size_t w = acc.size();
  for (std::size_t b = 0; b < addend.size() && b < w; ++b) {
    for (std::size_t i = w; i-- > b;) {
      std::vector<int> controls{addend[b]};
      for (std::size_t k = b; k < i; ++k) {
        controls.push_back(acc[k]);
      }
      layer.push_back(GateOp::x(acc[i]).controlled_by(std::move(controls)));
    }
  }
}

void append_index_change(Layer& layer, std::uint64_t from, std::uint64_t to, int m_prime) {
  const std::uint64_t diff = from ^ to;
  for (int q = 0; q < m_prime; ++q) {
    if ((diff >> q) & 1U) {
      layer.push_back(GateOp::x(q));
    }
  }
}

std::vector<int> iota_qubits(int first, int count) {
  std::vector<int> out(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) {
    out[static_cast<std::size_t>(i)] = first + i;
  }
  return out;
}

}  // namespace

std::vector<GateOp> qft(std::span<const int> reg) {
  std::vector<GateOp> gates;
  const int t = static_cast<int>(reg.size());
  for (int i = t - 1; i >= 0; --i) {
    gates.push_back(GateOp::h(reg[i]));
    for (int j = i - 1; j >= 0; --j) {
      gates.push_back(GateOp::cphase(reg[j], reg[i], std::numbers::pi / std::ldexp(1.0, i - j)));
    }
  }
  for (int i = 0; i < t / 2; ++i) {
    gates.push_back(GateOp::swap(reg[i], reg[t - 1 - i]));
  }
  return gates;
}

std::vector<GateOp> inverse_qft(std::span<const int> reg) {
  std::vector<GateOp> gates = qft(reg);
  std::reverse(gates.begin(), gates.end());
  for (GateOp& g : gates) {
    g.theta = -g.theta;
  }
  return gates;
}

AlgorithmSpec reversible_midpoint_circuit(int m_prime, int m_double_prime, double range_lo, double range_hi) {
  AlgorithmSpec a;
  a.query = QuerySpec{m_prime, m_double_prime, range_lo, range_hi, TauRule::Midpoint};
  const int width = m_prime + m_double_prime;
  a.nu = 2 * width;
  validate_query(a.query, a.nu);

  const auto value = iota_qubits(m_prime, m_double_prime);
  const auto acc = iota_qubits(width, width);
  const std::uint64_t n = a.query.grid_size();

  // U_0 leaves the index at 0; then per j: [query] add [query] step-to-next.
  a.layers.emplace_back();
  for (std::uint64_t j = 0; j < n; ++j) {
    Layer add;
    append_adder(add, value, acc);
    a.layers.push_back(std::move(add));

    Layer step;
    append_index_change(step, j, (j + 1 < n) ? j + 1 : 0, m_prime);
    a.layers.push_back(std::move(step));
  }

  a.measured = acc;
  const double delta = (range_hi - range_lo) / std::ldexp(1.0, m_double_prime);
  a.decode = Decode::affine(delta / std::ldexp(1.0, m_prime), range_lo);
  return a;
}

MidpointRun build_reversible_midpoint(int m_prime, int m_double_prime, const FunctionSpec& f, double range_lo,
                                      double range_hi, int max_qubits) {
  AlgorithmSpec a = reversible_midpoint_circuit(m_prime, m_double_prime, range_lo, range_hi);
  const RunResult r = run(a, f, max_qubits);
  OutcomeDistribution d = measure(r.state, a);
  return MidpointRun{std::move(a), std::move(d)};
}

AlgorithmSpec build_ae_mean(int m_prime, int readout_bits, double range_lo, double range_hi, int max_qubits) {
  if (m_prime < 1 || readout_bits < 1) {
    throw ValidationError("amplitude estimation needs m' >= 1 and t >= 1");
  }
  AlgorithmSpec a;
  a.nu = m_prime + 1 + readout_bits;
  if (a.nu > max_qubits) {
    throw CapacityError("amplitude estimation needs " + std::to_string(a.nu) + " qubits, cap is " +
                        std::to_string(max_qubits));
  }
  a.query = QuerySpec{m_prime, 1, range_lo, range_hi, TauRule::Midpoint};
  validate_query(a.query, a.nu);

  const auto index = iota_qubits(0, m_prime);
  const int value = m_prime;
  const auto readout = iota_qubits(m_prime + 1, readout_bits);

  // Controlling readout qubit for each query, in circuit order.
  std::vector<int> schedule;
  for (int k = 0; k < readout_bits; ++k) {
    for (std::uint64_t r = 0; r < (std::uint64_t{1} << k); ++r) {
      schedule.push_back(readout[static_cast<std::size_t>(k)]);
    }
  }

  Layer prep;
  for (int q : index) prep.push_back(GateOp::h(q));
  for (int q : readout) prep.push_back(GateOp::h(q));
  prep.push_back(GateOp::h(value));
  prep.push_back(GateOp::cphase(schedule.front(), value, std::numbers::pi));
  a.layers.push_back(std::move(prep));

  for (std::size_t s = 0; s < schedule.size(); ++s) {
    const int c = schedule[s];
    Layer layer;
    layer.push_back(GateOp::cphase(c, value, std::numbers::pi));
    // Controlled -A S_0 A^dagger: on c = 1 apply 2|0><0| - I to the index.
    for (int q : index) layer.push_back(GateOp::h(q));
    layer.push_back(GateOp::phase(c, std::numbers::pi));
    for (int q : index) layer.push_back(GateOp::x(q));
    std::vector<int> controls{c};
    controls.insert(controls.end(), index.begin(), index.end() - 1);
    layer.push_back(GateOp::phase(index.back(), std::numbers::pi).controlled_by(std::move(controls)));
    for (int q : index) layer.push_back(GateOp::x(q));
    for (int q : index) layer.push_back(GateOp::h(q));

    if (s + 1 < schedule.size()) {
      layer.push_back(GateOp::cphase(schedule[s + 1], value, std::numbers::pi));
    } else {
      for (GateOp& g : inverse_qft(readout)) layer.push_back(std::move(g));
    }
    a.layers.push_back(std::move(layer));
  }

  a.measured = readout;
  a.decode = Decode::sine_squared(readout_bits);
  return a;
}

double discretized_mean(const FunctionSpec& f, const QuerySpec& q) {
  const QueryTable table = build_query_table(f, q);
  double sum = 0.0;
  for (std::uint64_t code : table.codes) {
    sum += static_cast<double>(code);
  }
  return sum / static_cast<double>(table.codes.size());
}

MidpointExample midpoint_example(double eps, double lipschitz) {
  const std::int64_t m = m_eps(lipschitz, eps);
  int m_prime = 1;
  while ((std::int64_t{1} << m_prime) < m) {
    ++m_prime;
  }
  const int m_double_prime = std::max(1, 8 - m_prime);
  const double n = std::ldexp(1.0, m_prime);
  const double half_height = lipschitz / (2.0 * n);

  MidpointExample ex;
  ex.algorithm = reversible_midpoint_circuit(m_prime, m_double_prime, -half_height, half_height);

  const Promise promise(lipschitz, -half_height, half_height);
  FoolingPair pair = fooling_pair(optimal_design(static_cast<std::size_t>(n)), lipschitz);
  ex.family.push_back({"fooling_plus", pair.plus.with_promise(promise)});
  ex.family.push_back({"fooling_minus", pair.minus.with_promise(promise)});
  ex.family.push_back({"zero", FunctionSpec::constant(0.0).with_promise(promise)});
  ex.family.push_back(
      {"ramp", FunctionSpec::piecewise_linear({{0.0, -half_height}, {1.0, half_height}}).with_promise(promise)});
  return ex;
}

}  // namespace ibcq
