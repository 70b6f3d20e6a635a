#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <numeric>

#include "ibcq/circuits.hpp"
#include "ibcq/errors.hpp"
#include "ibcq/info.hpp"
#include "ibcq/instances.hpp"
#include "ibcq/perr.hpp"

using namespace ibcq;

namespace {

double mass_at(const OutcomeDistribution& d, double phi, double tol = 1e-12) {
  double m = 0.0;
  for (const Outcome& o : d.entries) {
    if (std::abs(o.phi - phi) <= tol) m += o.p;
  }
  return m;
}

OutcomeDistribution run_and_measure(const AlgorithmSpec& a, const FunctionSpec& f) {
  return measure(run(a, f).state, a);
}

}  // namespace

TEST(Qft, MatchesDiscreteFourierTransform) {
  for (int t = 1; t <= 5; ++t) {
    std::vector<int> reg(static_cast<std::size_t>(t));
    std::iota(reg.begin(), reg.end(), 0);
    const std::uint64_t dim = std::uint64_t{1} << t;
    for (std::uint64_t x = 0; x < dim; ++x) {
      QState s = QState::basis(t, x);
      for (const GateOp& g : qft(reg)) apply_gate(s, g);
      for (std::uint64_t y = 0; y < dim; ++y) {
        const double angle = 2.0 * std::numbers::pi * static_cast<double>(x * y) / static_cast<double>(dim);
        const Amplitude expected = std::polar(1.0 / std::sqrt(static_cast<double>(dim)), angle);
        ASSERT_NEAR(std::abs(s.amplitudes()[y] - expected), 0.0, 1e-12) << "t=" << t << " x=" << x << " y=" << y;
      }
    }
  }
}

TEST(Qft, InverseUndoesForwardOnOffsetRegister) {
  Rng rng(5);
  const std::vector<int> reg{1, 3, 4};
  QState s(5);
  for (int q = 0; q < 5; ++q) apply_gate(s, GateOp::h(q));
  apply_gate(s, GateOp::phase(3, 0.7));
  apply_gate(s, GateOp::cphase(0, 4, 1.3));
  const std::vector<Amplitude> before(s.amplitudes().begin(), s.amplitudes().end());
  for (const GateOp& g : qft(reg)) apply_gate(s, g);
  for (const GateOp& g : inverse_qft(reg)) apply_gate(s, g);
  for (std::size_t i = 0; i < before.size(); ++i) {
    EXPECT_NEAR(std::abs(s.amplitudes()[i] - before[i]), 0.0, 1e-12);
  }
}

TEST(ReversibleMidpoint, Shape) {
  const AlgorithmSpec a = reversible_midpoint_circuit(3, 2, 0.0, 1.0);
  EXPECT_EQ(a.nu, 10);
  EXPECT_EQ(a.query_count(), 16u);
  EXPECT_EQ(a.measured.size(), 5u);
  EXPECT_EQ(a.measured.front(), 5);
}

TEST(ReversibleMidpoint, ConstantAtMidRange) {
  const MidpointRun r = build_reversible_midpoint(2, 3, FunctionSpec::constant(0.5), 0.0, 1.0);
  EXPECT_NEAR(mass_at(r.distribution, 0.5), 1.0, 1e-12);
}

TEST(ReversibleMidpoint, IdentityFunction) {
  // Codes floor(64 tau) at tau = 1/8, 3/8, 5/8, 7/8 are 8, 24, 40, 56.
  const MidpointRun r = build_reversible_midpoint(2, 6, FunctionSpec::piecewise_linear({{0, 0}, {1, 1}}), 0.0, 1.0);
  EXPECT_NEAR(mass_at(r.distribution, 0.5), 1.0, 1e-12);
}

TEST(ReversibleMidpoint, PointMassAtQuantizedMidpointSum) {
  Rng rng(17);
  for (int trial = 0; trial < 20; ++trial) {
    const int mp = 1 + static_cast<int>(rng.below(3));
    const int mpp = 1 + static_cast<int>(rng.below(3));
    const auto f = random_lipschitz_pwl(1.0, 3, rng);
    const MidpointRun r = build_reversible_midpoint(mp, mpp, f, -1.0, 1.0);
    const QuerySpec& q = r.algorithm.query;
    std::uint64_t sum = 0;
    for (std::uint64_t j = 0; j < q.grid_size(); ++j) sum += beta(q, eval(f, tau(q, j)));
    const double expected = -1.0 + static_cast<double>(sum) * (2.0 / static_cast<double>(q.code_count())) /
                                       static_cast<double>(q.grid_size());
    ASSERT_NEAR(mass_at(r.distribution, expected), 1.0, 1e-12);
    ASSERT_LE(std::abs(expected - exact_integral(f)), 1.0 / (4.0 * static_cast<double>(q.grid_size())) +
                                                          2.0 / static_cast<double>(q.code_count()) + 1e-12);
  }
}

TEST(ReversibleMidpoint, CapacityError) {
  EXPECT_THROW(build_reversible_midpoint(6, 6, FunctionSpec::constant(0.0), 0.0, 1.0), CapacityError);
}

TEST(MidpointExample, SizedFromComplexity) {
  const MidpointExample ex = midpoint_example(1.0 / 40.0, 1.0);
  EXPECT_EQ(ex.algorithm.query.m_prime, 4);
  EXPECT_EQ(ex.algorithm.query.m_double_prime, 4);
  EXPECT_EQ(ex.algorithm.nu, 16);
  ASSERT_EQ(ex.family.size(), 4u);
  for (const NamedFunction& nf : ex.family) {
    ASSERT_TRUE(nf.f.promise().has_value());
    EXPECT_TRUE(check_promise(nf.f, *nf.f.promise(), 2)) << nf.name;
  }
}

TEST(AmplitudeEstimation, Shape) {
  const AlgorithmSpec a = build_ae_mean(3, 4, 0.0, 1.0);
  EXPECT_EQ(a.nu, 8);
  EXPECT_EQ(a.query_count(), 15u);
  EXPECT_EQ(a.measured.size(), 4u);
}

TEST(AmplitudeEstimation, AllZeroCodesEstimateZero) {
  const AlgorithmSpec a = build_ae_mean(3, 4, 0.0, 1.0);
  EXPECT_NEAR(mass_at(run_and_measure(a, FunctionSpec::constant(0.1)), 0.0), 1.0, 1e-12);
}

TEST(AmplitudeEstimation, AllOneCodesEstimateOne) {
  const AlgorithmSpec a = build_ae_mean(3, 4, 0.0, 1.0);
  EXPECT_NEAR(mass_at(run_and_measure(a, FunctionSpec::constant(0.9)), 1.0), 1.0, 1e-12);
}

TEST(AmplitudeEstimation, HalfMarkedIsExact) {
  const AlgorithmSpec a = build_ae_mean(3, 5, 0.0, 1.0);
  const auto f = FunctionSpec::piecewise_linear({{0, 0}, {1, 1}});
  EXPECT_DOUBLE_EQ(discretized_mean(f, a.query), 0.5);
  EXPECT_NEAR(mass_at(run_and_measure(a, f), 0.5), 1.0, 1e-12);
}

TEST(AmplitudeEstimation, WithinStandardBound) {
  // |a~ - a| <= 2 pi sqrt(a(1-a)) / 2^t + pi^2 / 4^t with probability >= 8/pi^2.
  Rng rng(2024);
  for (int trial = 0; trial < 12; ++trial) {
    const int mp = 2 + static_cast<int>(rng.below(2));
    const int t = 3 + static_cast<int>(rng.below(3));
    const AlgorithmSpec a = build_ae_mean(mp, t, -1.0, 1.0);
    const auto f = random_lipschitz_pwl(3.0, 4, rng);
    const double truth = discretized_mean(f, a.query);
    const double m = std::ldexp(1.0, t);
    const double bound = 2.0 * std::numbers::pi * std::sqrt(truth * (1.0 - truth)) / m +
                         std::numbers::pi * std::numbers::pi / (m * m);
    const OutcomeDistribution d = run_and_measure(a, f);
    EXPECT_NEAR(d.total_mass(), 1.0, 1e-12);
    EXPECT_LE(local_error(d, truth), bound + 1e-12) << "trial " << trial;
  }
}

TEST(AmplitudeEstimation, Validation) {
  EXPECT_THROW(build_ae_mean(0, 3, 0.0, 1.0), ValidationError);
  EXPECT_THROW(build_ae_mean(3, 0, 0.0, 1.0), ValidationError);
  EXPECT_THROW(build_ae_mean(10, 12, 0.0, 1.0), CapacityError);
}
