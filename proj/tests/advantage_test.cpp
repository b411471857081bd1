#include "qswitch/advantage.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "test_util.hpp"

namespace qswitch {
namespace {

constexpr double kPi = std::numbers::pi;

// Frozen from an independent 30-digit quadrature of
// max(1/2 + (1-4p)^n/2 - 2/3, 0) over [0, 1/3].
constexpr double kNoSwitchMerit2 = 0.0160375074774896;
constexpr double kNoSwitchMerit3 = 0.0112508731567907;

// Midpoint rule on a very fine mesh; independent of the kink-splitting
// Simpson used by the library.
double midpoint_excess(const std::function<double(double)>& f, int cells = 2000000) {
  const double h = kMaxNoise / cells;
  double sum = 0.0;
  for (int k = 0; k < cells; ++k) sum += std::max(f((k + 0.5) * h) - 2.0 / 3.0, 0.0);
  return sum * h;
}

TEST(SwitchedFidelity, KnownValues) {
  EXPECT_NEAR(switched_fidelity({1.0 / 3.0, 0.5}), 1.0, 1e-14);
  EXPECT_NEAR(switched_fidelity({0.2, 0.5}), 0.88 / 1.52, 1e-14);
  for (double p : {0.0, 0.07, 0.2, 1.0 / 3.0}) {
    EXPECT_NEAR(switched_fidelity({p, 1.0}), 1.0 - 4.0 * p + 8.0 * p * p, 1e-14);
  }
  EXPECT_THROW(SwitchParams(0.4, 0.5), DomainError);
  EXPECT_THROW(SwitchParams(0.1, -0.1), DomainError);
}

TEST(SwitchedFidelity, MatchesSimulationPipeline) {
  const ComplexMatrix zero{{1.0, 0.0}, {0.0, 0.0}};
  const auto plus = hadamard_state(HadamardOutcome::kPlus);
  double worst = 0.0;
  double worst_prob = 0.0;
  for (int ip = 0; ip <= 20; ++ip) {
    for (int iq = 0; iq <= 20; ++iq) {
      const SwitchParams params(ip / 60.0, iq / 20.0);
      const auto ch = DepolarizingChannel::isotropic(params.p());
      const auto r = post_select(switch_two(ch, ch, zero, ControlState::two_path(params.q())), plus);
      worst = std::max(worst, std::abs(qubit_fidelity(zero, r.state) - switched_fidelity(params)));
      worst_prob = std::max(worst_prob, std::abs(r.probability - switched_success_probability(params)));
    }
  }
  EXPECT_LT(worst, 1e-10);
  EXPECT_LT(worst_prob, 1e-12);
}

TEST(AdvantageRegions, NoSuperposition) {
  const auto r = advantage_regions(0.0);
  EXPECT_NEAR(r.p_lo, (3.0 - std::sqrt(3.0)) / 12.0, 1e-15);
  EXPECT_NEAR(r.p_lo, 0.105662432702594, 1e-12);
  EXPECT_NEAR(r.p_hi, (3.0 + std::sqrt(3.0)) / 12.0, 1e-15);
  EXPECT_FALSE(r.region2_exists());
}

TEST(AdvantageRegions, EqualSuperposition) {
  const auto r = advantage_regions(0.5);
  EXPECT_NEAR(r.p_lo, (6.0 - std::sqrt(6.0)) / 30.0, 1e-15);
  EXPECT_NEAR(r.p_hi, (6.0 + std::sqrt(6.0)) / 30.0, 1e-15);
  EXPECT_TRUE(r.region2_exists());
  // Independent check: bisection on F = 2/3 in each region.
  const auto g = [](double p) { return switched_fidelity({p, 0.5}) - 2.0 / 3.0; };
  EXPECT_NEAR(testing::bisect(g, 0.0, 0.2), r.p_lo, 1e-12);
  EXPECT_NEAR(testing::bisect(g, 0.2, 1.0 / 3.0), r.p_hi, 1e-12);
  EXPECT_TRUE(r.contains(0.1));
  EXPECT_FALSE(r.contains(0.2));
  EXPECT_TRUE(r.contains(0.3));
}

TEST(AdvantageRegions, ThresholdBoundary) {
  EXPECT_NEAR(advantage_regions(1.0 / 6.0).p_hi, 1.0 / 3.0, 1e-15);
  EXPECT_FALSE(advantage_regions(1.0 / 6.0).region2_exists());
  EXPECT_TRUE(advantage_regions(1.0 / 6.0 + 1e-6).region2_exists());
  EXPECT_FALSE(advantage_regions(1.0 / 6.0 - 1e-6).region2_exists());
  EXPECT_THROW(advantage_regions(0.6), DomainError);
}

TEST(AdvantageRegions, BoundariesSitOnClassicalFidelity) {
  for (int k = 0; k <= 50; ++k) {
    const double q = 0.5 * k / 50.0;
    const double mu = std::sqrt(q * (1.0 - q));
    const auto r = advantage_regions(mu);
    EXPECT_LE(r.p_lo, r.p_hi);
    EXPECT_NEAR(switched_fidelity({r.p_lo, q}), 2.0 / 3.0, 1e-9);
    if (r.region2_exists()) EXPECT_NEAR(switched_fidelity({r.p_hi, q}), 2.0 / 3.0, 1e-9);
  }
}

TEST(AdvantageRegions, HighNoiseRegionIsIncreasing) {
  for (double q : {0.5, 0.3, 0.1}) {
    const double mu = std::sqrt(q * (1.0 - q));
    const auto r = advantage_regions(mu);
    ASSERT_TRUE(r.region2_exists());
    double prev = switched_fidelity({r.p_hi, q});
    for (int k = 1; k <= 100; ++k) {
      const double p = r.p_hi + (kMaxNoise - r.p_hi) * k / 100.0;
      const double f = switched_fidelity({std::min(p, kMaxNoise), q});
      EXPECT_GT(f, prev);
      prev = f;
    }
  }
}

TEST(MuThreshold, AgreesWithBisectionOnRegionEmptiness) {
  EXPECT_NEAR(mu_threshold(), 1.0 / 6.0, 1e-15);
  double lo = 0.0, hi = 0.5;
  while (hi - lo > 1e-13) {
    const double mid = 0.5 * (lo + hi);
    (advantage_regions(mid).region2_exists() ? hi : lo) = mid;
  }
  EXPECT_NEAR(0.5 * (lo + hi), mu_threshold(), 1e-9);
}

TEST(NoSwitchMerit, MatchesFrozenQuadrature) {
  EXPECT_NEAR(no_switch_merit(2), kNoSwitchMerit2, 1e-15);
  EXPECT_NEAR(no_switch_merit(3), kNoSwitchMerit3, 1e-15);
  EXPECT_NEAR(no_switch_merit(1), 1.0 / 36.0, 1e-15);
}

TEST(FigureOfMerit, PlusOutcomeBeatsNoSwitch) {
  const auto plus = hadamard_state(HadamardOutcome::kPlus);
  const double k = figure_of_merit(plus, ControlState::two_path(0.5), 2).k;
  const double oracle = midpoint_excess([](double p) { return switched_fidelity({p, 0.5}); });
  EXPECT_NEAR(k, oracle, 1e-9);
  EXPECT_GT(k, kNoSwitchMerit2);
}

TEST(FigureOfMerit, DefiniteOrderGivesNoSwitchValueForEveryOutcome) {
  const auto control = ControlState::two_path(1.0);
  for (const auto& outcome : {PureStateVector{1.0, 1.0}, PureStateVector{1.0, Complex(0.3, -0.8)},
                              PureStateVector::basis(2, 0), PureStateVector::basis(2, 1)}) {
    EXPECT_NEAR(figure_of_merit(outcome, control, 2).k, kNoSwitchMerit2, 1e-8);
  }
}

TEST(FigureOfMerit, OrthogonalOutcomeEarnsNothing) {
  // For control |+> the |-> outcome has F = 1/3 for every p > 0.
  const double k = figure_of_merit(hadamard_state(HadamardOutcome::kMinus), ControlState::two_path(0.5), 2).k;
  EXPECT_LT(k, 1e-10);
  EXPECT_GE(k, 0.0);
}

TEST(FigureOfMerit, StepHalvingStable) {
  const auto control = ControlState::two_path(0.35);
  const PureStateVector outcome{1.0, Complex(0.6, 0.3)};
  const double a = figure_of_merit(outcome, control, 2, {.base_points = 3001}).k;
  const double b = figure_of_merit(outcome, control, 2, {.base_points = 6001}).k;
  EXPECT_LT(std::abs(a - b), 1e-8);
}

TEST(FigureOfMerit, BoundedOnRandomOutcomes) {
  std::mt19937_64 rng(137);
  for (int trial = 0; trial < 20; ++trial) {
    const auto control = ControlState(testing::random_pure(rng, 2));
    const double k = figure_of_merit(testing::random_pure(rng, 2), control, 2).k;
    EXPECT_GE(k, 0.0);
    EXPECT_LE(k, 1.0 / 9.0);
  }
}

TEST(FigureOfMerit, DimensionChecks) {
  EXPECT_THROW(figure_of_merit(PureStateVector::basis(6, 0), ControlState::two_path(0.5), 2), DimensionError);
  EXPECT_THROW(figure_of_merit(PureStateVector::basis(2, 0), ControlState::two_path(0.5), 3), DimensionError);
}

TEST(Coherence, Examples) {
  EXPECT_EQ(l1_coherence(PureStateVector::basis(2, 0)), 0.0);
  EXPECT_NEAR(l1_coherence(hadamard_state(HadamardOutcome::kPlus)), 1.0, 1e-15);
  for (double q : {0.0, 0.1, 0.5, 0.8}) {
    const auto c = ControlState::two_path(q);
    EXPECT_NEAR(l1_coherence(c.state()), 2.0 * c.mu(), 1e-15);
    // High-noise advantage exists only above coherence 1/3.
    EXPECT_EQ(advantage_regions(c.mu()).region2_exists(), l1_coherence(c.state()) > 1.0 / 3.0 + 1e-12);
  }
  EXPECT_NEAR(l1_coherence(ControlState::uniform(3).state()), 5.0, 1e-14);
}

TEST(OutcomeFamilies, Construction) {
  const OutcomeFamily2 plus(1.0, 0.0);
  EXPECT_NEAR(std::abs(plus.state().inner(hadamard_state(HadamardOutcome::kPlus))), 1.0, 1e-15);
  const OutcomeFamily3 alternating(1.0, 0.0);
  const AlphaOutcome alpha({-1.0, -1.0, -1.0});
  EXPECT_NEAR(std::abs(alternating.state().inner(alpha.state())), 1.0, 1e-15);
  const auto perms = enumerate_permutations(3);
  for (std::size_t k = 0; k < 6; ++k) {
    EXPECT_NEAR(alternating.state()[k].real(), perms[k].sign() / std::sqrt(6.0), 1e-15);
  }
  EXPECT_THROW(OutcomeFamily2(-1.0, 0.0), DomainError);
}

TEST(OptimizeOutcome, TwoPathPicksPlus) {
  const GridSpec grid{.lambda_min = 0.0, .lambda_max = 2.0, .lambda_step = 0.25, .phi_step = kPi / 18.0};
  const auto best = optimize_outcome(ControlState::two_path(0.5), OutcomeFamilyKind::kTwoPath, grid);
  EXPECT_DOUBLE_EQ(best.lambda, 1.0);
  EXPECT_DOUBLE_EQ(best.phi, 0.0);
}

TEST(OptimizeOutcome, TiesGoToSmallestLambdaThenPhi) {
  // With control |0> every outcome gives the same K.
  const GridSpec grid{.lambda_min = 0.0, .lambda_max = 1.0, .lambda_step = 0.5, .phi_step = kPi / 2.0};
  const auto best = optimize_outcome(ControlState::two_path(1.0), OutcomeFamilyKind::kTwoPath, grid);
  EXPECT_EQ(best.lambda, 0.0);
  EXPECT_EQ(best.phi, 0.0);
}

TEST(OptimizeOutcome, ThreePathPhasePeakNearPiOverTwelve) {
  const GridSpec grid{.lambda_min = 1.0, .lambda_max = 1.0, .lambda_step = 1.0, .phi_step = kPi / 72.0};
  const auto best = optimize_outcome(ControlState::uniform(3), OutcomeFamilyKind::kThreePath, grid);
  EXPECT_NEAR(best.phi, kPi / 12.0, kPi / 36.0);
}

TEST(OptimizeOutcome, ThreePathFamilyNeverBelowNoSwitch) {
  const GridSpec grid{.lambda_min = 0.0, .lambda_max = 2.0, .lambda_step = 0.5, .phi_step = kPi / 6.0};
  for (const auto& point : scan_outcomes(ControlState::uniform(3), OutcomeFamilyKind::kThreePath, grid)) {
    EXPECT_GE(point.k, kNoSwitchMerit3) << point.lambda << " " << point.phi;
  }
}

TEST(KTotal, NoiselessIntegrandIsOne) {
  const ComplexMatrix zero{{1.0, 0.0}, {0.0, 0.0}};
  for (double q : {0.0, 0.3, 0.5}) {
    const auto control = ControlState::two_path(q);
    const IsotropicSwitchExpansion expansion(2, zero, control);
    EXPECT_NEAR(expansion.expectation(tensor_product(zero, control.density()))(0.0), 1.0, 1e-14);
  }
}

TEST(KTotal, MatchesGeneralFidelityIntegrand) {
  const ComplexMatrix zero{{1.0, 0.0}, {0.0, 0.0}};
  const auto control = ControlState::two_path(0.3);
  const auto input = tensor_product(zero, control.density());
  // Independent route: general_fidelity on switch_two output, midpoint rule.
  const int cells = 400;
  double sum = 0.0;
  for (int k = 0; k < cells; ++k) {
    const double p = (k + 0.5) * kMaxNoise / cells;
    const auto ch = DepolarizingChannel::isotropic(p);
    sum += general_fidelity(input, switch_two(ch, ch, zero, control).matrix());
  }
  EXPECT_NEAR(k_total(control), sum * kMaxNoise / cells, 1e-6);
}

TEST(Tradeoff, DefiniteOrderCurvesCoincide) {
  const auto control = ControlState::two_path(1.0);
  const auto ref = tradeoff_point(control, OutcomeLabel::kPlus);
  for (auto label : {OutcomeLabel::kMinus, OutcomeLabel::kZero, OutcomeLabel::kOne}) {
    const auto t = tradeoff_point(control, label);
    EXPECT_NEAR(t.k, ref.k, 1e-9);
    EXPECT_NEAR(t.k_total, ref.k_total, 1e-9);
  }
}

TEST(Tradeoff, MoreSuperpositionRaisesKAndLowersKTotal) {
  double prev_k = -1.0;
  double prev_total = 2.0;
  for (double q : {1.0, 0.9, 0.75, 0.6, 0.5}) {
    const auto t = tradeoff_point(ControlState::two_path(q), OutcomeLabel::kPlus);
    EXPECT_GT(t.k, prev_k - 1e-12);
    EXPECT_LT(t.k_total, prev_total);
    prev_k = t.k;
    prev_total = t.k_total;
  }
}

TEST(AlphaProfile, AlternatingOutcomeEndpoints) {
  const std::vector<double> grid{0.0, 0.1, 0.2, 1.0 / 3.0};
  const auto profile = alpha_fidelity_profile(AlphaOutcome({-1.0, -1.0, -1.0}), grid);
  ASSERT_EQ(profile.size(), 4u);
  EXPECT_EQ(profile[0].flag, ProfileFlag::kFromMarginal);
  EXPECT_NEAR(*profile[0].fidelity, 1.0, 1e-12);
  EXPECT_NEAR(*profile[3].fidelity, 1.0, 1e-9);
  // Low noise, low fidelity.
  EXPECT_LT(*profile[1].fidelity, 2.0 / 3.0);
}

TEST(AlphaProfile, OverlappingOutcomesAreIdealAtZeroNoise) {
  for (const auto& alpha : {std::array{1.0, 1.0, 1.0}, std::array{0.0, 0.0, 0.0}, std::array{-1.0, -1.0, 0.0}}) {
    const std::vector<double> grid{0.0};
    const auto profile = alpha_fidelity_profile(AlphaOutcome(alpha), grid);
    EXPECT_EQ(profile[0].flag, ProfileFlag::kOk);
    EXPECT_NEAR(*profile[0].fidelity, 1.0, 1e-12);
  }
}

TEST(AlphaProfile, MatchesBruteForceThreePathSwitch) {
  const ComplexMatrix zero{{1.0, 0.0}, {0.0, 0.0}};
  const AlphaOutcome alpha({-1.0, -1.0, 0.0});
  const std::vector<double> grid{0.05, 0.15, 0.25};
  const auto profile = alpha_fidelity_profile(alpha, grid);
  for (std::size_t k = 0; k < grid.size(); ++k) {
    const auto joint = switch_n(DepolarizingChannel::isotropic(grid[k]), 3, zero, ControlState::uniform(3));
    EXPECT_NEAR(*profile[k].fidelity, qubit_fidelity(zero, post_select(joint, alpha.state()).state), 1e-12);
  }
}

TEST(PostSelectedFidelityFn, RatioPathMatchesConditionalState) {
  std::mt19937_64 rng(2024);
  const auto control = ControlState::uniform(3);
  for (int trial = 0; trial < 10; ++trial) {
    const PostSelectedFidelity f(control, testing::random_pure(rng, 6));
    for (double p : {0.02, 0.11, 0.29}) {
      EXPECT_NEAR(*f(p), f.conditional(p)->state(0, 0).real(), 1e-10);
    }
  }
}

TEST(PostSelectedFidelityFn, VanishingOutcomeKeepsItsLimit) {
  // Alternating outcome: F(p) = 1/3 + 2p for p > 0, probability 2p^2.
  const PostSelectedFidelity f(ControlState::uniform(3), OutcomeFamily3(1.0, 0.0).state());
  for (double p : {1e-9, 1e-6, 1e-3, 0.1}) EXPECT_NEAR(*f(p), 1.0 / 3.0 + 2.0 * p, 1e-12);
  EXPECT_NEAR(*f(0.0), 1.0, 1e-12);
}

}  // namespace
}  // namespace qswitch
