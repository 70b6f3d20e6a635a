#pragma once

// Independent reference computations for the tests. Nothing here calls the
// code path it is used to check.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <functional>
#include <vector>

#include "ibcq/qsim.hpp"

namespace ibcq::oracle {

// Composite midpoint sum of g over [0,1].
inline double riemann(const std::function<double(double)>& g, std::size_t panels = 1'000'000) {
  const double h = 1.0 / static_cast<double>(panels);
  double sum = 0.0;
  for (std::size_t i = 0; i < panels; ++i) {
    sum += g((static_cast<double>(i) + 0.5) * h);
  }
  return sum * h;
}

inline double distance_to_design(const std::vector<double>& t, double x) {
  double best = std::abs(x - t.front());
  for (double ti : t) best = std::min(best, std::abs(x - ti));
  return best;
}

// L * integral of min_i |x - t_i| by summing the closed-form pieces.
inline double worst_radius_closed_form(const std::vector<double>& t, double lipschitz) {
  double sum = 0.5 * t.front() * t.front() + 0.5 * (1.0 - t.back()) * (1.0 - t.back());
  for (std::size_t i = 1; i < t.size(); ++i) {
    const double gap = t[i] - t[i - 1];
    sum += 0.25 * gap * gap;
  }
  return lipschitz * sum;
}

using Matrix = std::vector<std::vector<Amplitude>>;

// <row| G |col> from the definition of a (controlled) gate on a small register.
inline Amplitude gate_element(const GateOp& g, std::uint64_t row, std::uint64_t col) {
  auto bit = [](std::uint64_t v, int q) { return static_cast<int>((v >> q) & 1U); };
  for (int c : g.controls) {
    if (bit(col, c) == 0) return row == col ? 1.0 : 0.0;
  }
  std::uint64_t touched = 0;
  for (int q : g.targets) touched |= std::uint64_t{1} << q;
  if ((row & ~touched) != (col & ~touched)) return 0.0;

  const double r = 1.0 / std::sqrt(2.0);
  const int rt = bit(row, g.targets[0]);
  const int ct = bit(col, g.targets[0]);
  switch (g.kind) {
    case GateKind::X:
      return rt != ct ? 1.0 : 0.0;
    case GateKind::H:
      return (rt == 1 && ct == 1) ? -r : r;
    case GateKind::Phase:
      return rt != ct ? 0.0 : (ct == 1 ? std::polar(1.0, g.theta) : Amplitude(1.0));
    case GateKind::ControlledPhase: {
      if (row != col) return 0.0;
      return (bit(col, g.targets[0]) && bit(col, g.targets[1])) ? std::polar(1.0, g.theta) : Amplitude(1.0);
    }
    case GateKind::Swap: {
      const int a = g.targets[0];
      const int b = g.targets[1];
      return (bit(row, a) == bit(col, b) && bit(row, b) == bit(col, a)) ? 1.0 : 0.0;
    }
    case GateKind::Unitary: {
      std::size_t lr = 0;
      std::size_t lc = 0;
      for (std::size_t k = 0; k < g.targets.size(); ++k) {
        lr |= static_cast<std::size_t>(bit(row, g.targets[k])) << k;
        lc |= static_cast<std::size_t>(bit(col, g.targets[k])) << k;
      }
      const std::size_t dim = std::size_t{1} << g.targets.size();
      return g.matrix[lr * dim + lc];
    }
  }
  return 0.0;
}

inline std::vector<Amplitude> apply_matrix_gate(const GateOp& g, const std::vector<Amplitude>& v) {
  const std::size_t n = v.size();
  std::vector<Amplitude> out(n, 0.0);
  for (std::uint64_t row = 0; row < n; ++row) {
    for (std::uint64_t col = 0; col < n; ++col) {
      const Amplitude e = gate_element(g, row, col);
      if (e != Amplitude(0.0)) out[row] += e * v[col];
    }
  }
  return out;
}

// |j>|k> -> |j>|k xor code_j> from the definition, with codes computed
// independently by the caller.
inline std::vector<Amplitude> apply_matrix_query(const std::vector<std::uint64_t>& codes, int m_prime,
                                                 int m_double_prime, const std::vector<Amplitude>& v) {
  std::vector<Amplitude> out(v.size(), 0.0);
  const std::uint64_t jmask = (std::uint64_t{1} << m_prime) - 1;
  const std::uint64_t kmask = (std::uint64_t{1} << m_double_prime) - 1;
  for (std::uint64_t b = 0; b < v.size(); ++b) {
    const std::uint64_t j = b & jmask;
    const std::uint64_t k = (b >> m_prime) & kmask;
    const std::uint64_t rest = b & ~((kmask << m_prime) | jmask);
    const std::uint64_t target = rest | (((k ^ codes[j]) & kmask) << m_prime) | j;
    out[target] += v[b];
  }
  return out;
}

}  // namespace ibcq::oracle
