#include <gtest/gtest.h>

#include <cmath>

#include "ibcq/circuits.hpp"
#include "ibcq/errors.hpp"
#include "ibcq/info.hpp"
#include "ibcq/instances.hpp"
#include "ibcq/perr.hpp"

using namespace ibcq;

namespace {

OutcomeDistribution dist(std::vector<std::pair<double, double>> p_phi) {
  OutcomeDistribution d;
  std::uint64_t j = 0;
  for (const auto& [p, phi] : p_phi) d.entries.push_back({j++, p, phi});
  return d;
}

std::vector<FamilyMember> family_of(const std::vector<NamedFunction>& named) {
  std::vector<FunctionSpec> fs;
  std::vector<std::string> names;
  for (const auto& nf : named) {
    fs.push_back(nf.f);
    names.push_back(nf.name);
  }
  return integration_family(fs, names);
}

}  // namespace

TEST(LocalError, PointMassAtTruth) { EXPECT_EQ(local_error(dist({{1.0, 0.3}}), 0.3), 0.0); }

TEST(LocalError, NeedsTheSecondOutcome) {
  EXPECT_NEAR(local_error(dist({{0.5, 0.5}, {0.5, 0.7}}), 0.5), 0.2, 1e-15);
}

TEST(LocalError, ExactlyThreeQuartersSuffices) {
  EXPECT_EQ(local_error(dist({{0.75, 0.0}, {0.25, 9.0}}), 0.0), 0.0);
}

TEST(LocalError, FarOutcomeDominates) {
  EXPECT_NEAR(local_error(dist({{0.3, 0.0}, {0.7, 1.0}}), 0.0), 1.0, 1e-15);
}

TEST(LocalError, RejectsInvalidDistribution) {
  EXPECT_THROW(local_error(dist({{0.5, 0.0}}), 0.0), ValidationError);
}

TEST(LocalError, AgreesWithSubsetEnumeration) {
  Rng rng(99);
  for (int trial = 0; trial < 2000; ++trial) {
    const OutcomeDistribution d = random_distribution(1 + rng.below(12), rng);
    const double truth = rng.coin(0.3) ? d.entries[rng.below(d.entries.size())].phi : rng.uniform(-1.5, 1.5);
    ASSERT_EQ(local_error(d, truth), local_error_setform(d, truth)) << "trial " << trial;
  }
}

TEST(LocalError, SetformCapacity) {
  std::vector<std::pair<double, double>> pp(17, {1.0 / 17.0, 0.0});
  EXPECT_THROW(local_error_setform(dist(pp), 0.0), CapacityError);
}

TEST(Extract, SingleCluster) {
  const Extraction e = extract(dist({{0.1, -5.0}, {0.5, 1.0}, {0.3, 1.05}, {0.1, 9.0}}), 0.05);
  EXPECT_EQ(e.value, 1.0);
  EXPECT_EQ(e.representative, 1u);
  EXPECT_NEAR(e.cluster.mass, 0.8, 1e-15);
  EXPECT_EQ(e.cluster.phi_lo, 1.0);
  EXPECT_EQ(e.cluster.phi_hi, 1.05);
}

TEST(Extract, TiesGoToSmallestValue) {
  const Extraction e = extract(dist({{0.4, 0.02}, {0.4, 0.0}, {0.2, 5.0}}), 0.01);
  EXPECT_EQ(e.value, 0.0);
  EXPECT_EQ(e.representative, 1u);
}

TEST(Extract, PremiseViolation) {
  EXPECT_THROW(extract(dist({{0.5, 0.0}, {0.5, 1.0}}), 0.1), PremiseViolation);
  EXPECT_THROW(extract(dist({{1.0, 0.0}}), 0.0), ValidationError);
}

TEST(Extract, PlantedInstancesAreThreeEpsAccurate) {
  Rng rng(2718);
  for (int trial = 0; trial < 10000; ++trial) {
    const PlantedInstance inst = planted_instance(rng);
    ASSERT_LE(local_error(inst.dist, inst.truth), inst.eps + 1e-12);
    const Extraction e = extract(inst.dist, inst.eps);
    const double scale = std::max(1.0, std::abs(inst.truth));
    ASSERT_LE(std::abs(e.value - inst.truth), 3.0 * inst.eps + 1e-12 * scale) << "trial " << trial;
    ASSERT_EQ(e.value, extract(inst.dist, inst.eps).value);
  }
}

TEST(Extract, IndependentOfEntryOrder) {
  Rng rng(3);
  for (int trial = 0; trial < 500; ++trial) {
    PlantedInstance inst = planted_instance(rng);
    const Extraction a = extract(inst.dist, inst.eps);
    std::reverse(inst.dist.entries.begin(), inst.dist.entries.end());
    const Extraction b = extract(inst.dist, inst.eps);
    ASSERT_EQ(a.value, b.value);
    ASSERT_EQ(a.representative, b.representative);
  }
}

TEST(QubitLowerBound, Examples) {
  EXPECT_NEAR(qubit_lower_bound(1.0, 1.0 / 12.0), -1.0, 1e-15);
  EXPECT_NEAR(qubit_lower_bound(1.0, 1.0 / 1200.0), std::log2(100.0) - 1.0, 1e-12);
  EXPECT_NEAR(qubit_lower_bound(1.0, 1.0 / 1200.0, 2.0), std::log2(200.0) - 1.0, 1e-12);
  EXPECT_THROW(qubit_lower_bound(1.0, 0.0), ValidationError);
}

TEST(VerifyBound, MidpointExampleSatisfiesTheBound) {
  const double eps = 1.0 / 40.0;
  const MidpointExample ex = midpoint_example(eps, 1.0);
  const auto family = family_of(ex.family);
  const BoundReport r = verify_bound(ex.algorithm, family, 1.0, eps);
  EXPECT_EQ(r.status, BoundStatus::Ok);
  EXPECT_TRUE(r.satisfied);
  EXPECT_TRUE(r.evals_cover_3eps);
  EXPECT_EQ(r.n_eps, 16u);
  EXPECT_EQ(r.m_3eps, 4);
  EXPECT_NEAR(r.rhs, 1.0, 1e-12);
  EXPECT_LE(r.worst_prob_error, eps);
  EXPECT_GE(r.worst_prob_error, worst_radius(optimal_design(16), 1.0) - 1e-12);
}

TEST(VerifyBound, TooCoarseIsNotApplicable) {
  // A 2-point grid cannot reach eps = 1/40 on the fooling pair of the 16-point grid.
  const MidpointExample ex = midpoint_example(1.0 / 40.0, 1.0);
  const AlgorithmSpec coarse = reversible_midpoint_circuit(1, 4, ex.algorithm.query.range_lo,
                                                           ex.algorithm.query.range_hi);
  const auto fooling = family_of(std::vector<NamedFunction>{
      {"plus", fooling_pair(optimal_design(2), 1.0).plus}});
  const BoundReport r = verify_bound(coarse, fooling, 1.0, 1.0 / 40.0);
  EXPECT_EQ(r.status, BoundStatus::NotApplicable);
  EXPECT_GT(r.worst_prob_error, 1.0 / 40.0);
}

TEST(VerifyBound, Validation) {
  const MidpointExample ex = midpoint_example(1.0 / 40.0, 1.0);
  const auto family = family_of(ex.family);
  EXPECT_THROW(verify_bound(ex.algorithm, family, 1.0, 1.0 / 40.0, 1.0, 17), ValidationError);
  EXPECT_NO_THROW(verify_bound(ex.algorithm, family, 1.0, 1.0 / 40.0, 1.0, 16));
  EXPECT_THROW(verify_bound(ex.algorithm, {}, 1.0, 1.0 / 40.0), ValidationError);
  EXPECT_THROW(verify_bound(ex.algorithm, family, 1.0, 0.0), ValidationError);
  EXPECT_THROW(verify_bound(ex.algorithm, family, 1.0, 1.0 / 40.0, 1.0, 0, 12), CapacityError);
}

TEST(WorstProbError, GrowsWithTheFamily) {
  const MidpointExample ex = midpoint_example(1.0 / 40.0, 1.0);
  const auto family = family_of(ex.family);
  double prev = 0.0;
  for (std::size_t k = 1; k <= family.size(); ++k) {
    const double e = worst_prob_error(ex.algorithm, std::span(family).first(k));
    EXPECT_GE(e, prev);
    prev = e;
  }
}

TEST(WorOfQuadrature, IsFoil) {
  const Quadrature q(optimal_design(3), {0.3, 0.3, 0.4});
  EXPECT_EQ(wor_error_lower(q, 2.0), foil(q, 2.0));
}
