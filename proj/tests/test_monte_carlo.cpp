#include "cascade_noise/monte_carlo.hpp"

#include <cmath>
#include <stdexcept>

#include <gtest/gtest.h>

#include "cascade_noise/errors.hpp"
#include "cascade_noise/numeric.hpp"
#include "support/chains.hpp"

namespace cascade_noise {
namespace {

using testsupport::make_e1;
using testsupport::make_e2;

SimulationConfig quick_config(std::uint64_t seed, std::size_t samples = 50'000) {
    SimulationConfig config;
    config.sample_count = samples;
    config.seed = seed;
    return config;
}

void expect_identical(const SimulationResult& a, const SimulationResult& b) {
    ASSERT_EQ(a.interfaces.size(), b.interfaces.size());
    for (std::size_t i = 0; i < a.interfaces.size(); ++i) {
        EXPECT_EQ(a.interfaces[i].estimated_noise, b.interfaces[i].estimated_noise);
        EXPECT_EQ(a.interfaces[i].std_error, b.interfaces[i].std_error);
    }
    EXPECT_EQ(a.empirical_total_factor, b.empirical_total_factor);
    EXPECT_EQ(a.empirical_stage_factors, b.empirical_stage_factors);
}

TEST(SimulateChain, RejectsTinySampleCounts) {
    EXPECT_THROW(simulate_chain(make_e1(), quick_config(1, 999)), std::invalid_argument);
    EXPECT_NO_THROW(simulate_chain(make_e1(), quick_config(1, 1000)));
}

TEST(SimulateChain, RejectsInvalidChain) {
    CascadeChain chain;
    chain.source = {1.0, 0.0};
    EXPECT_THROW(simulate_chain(chain, quick_config(1)), ValidationError);
}

TEST(SimulateChain, DeterministicAcrossRerunsAndThreadCounts) {
    const SimulationResult first = simulate_chain(make_e2(), quick_config(7));
    const SimulationResult second = simulate_chain(make_e2(), quick_config(7));
    expect_identical(first, second);

    SimulationConfig one_thread = quick_config(7);
    one_thread.threads = 1;
    SimulationConfig four_threads = quick_config(7);
    four_threads.threads = 4;
    expect_identical(simulate_chain(make_e2(), one_thread),
                     simulate_chain(make_e2(), four_threads));
}

TEST(SimulateChain, EstimatesWithinFourStandardErrors) {
    const SimulationResult result = simulate_chain(make_e2(), quick_config(42, 200'000));
    for (const InterfaceEstimate& estimate : result.interfaces) {
        EXPECT_NEAR(estimate.estimated_noise, estimate.analytic_noise, 4.0 * estimate.std_error)
            << "interface " << estimate.interface_index;
    }
    for (std::size_t x = 0; x < result.empirical_stage_factors.size(); ++x) {
        EXPECT_NEAR(result.empirical_stage_factors[x], result.analytic_stage_factors[x],
                    4.0 * result.stage_factor_std_errors[x])
            << "stage " << x + 1;
    }
    EXPECT_NEAR(result.empirical_total_factor, result.analytic_total_factor,
                4.0 * result.total_factor_std_error);
}

TEST(SimulateChain, StandardErrorFollowsChiSquareForm) {
    const SimulationResult result = simulate_chain(make_e1(), quick_config(3, 10'000));
    const double relative = std::sqrt(2.0 / 10'000.0);
    for (const InterfaceEstimate& estimate : result.interfaces)
        EXPECT_DOUBLE_EQ(estimate.std_error, estimate.estimated_noise * relative);
}

TEST(SimulateChain, SeedsMoveTheEstimateByOrderStandardError) {
    const SimulationResult a = simulate_chain(make_e2(), quick_config(1));
    const SimulationResult b = simulate_chain(make_e2(), quick_config(2));
    EXPECT_NE(a.empirical_total_factor, b.empirical_total_factor);
    EXPECT_NEAR(a.empirical_total_factor, a.analytic_total_factor,
                5.0 * a.total_factor_std_error);
    EXPECT_NEAR(b.empirical_total_factor, b.analytic_total_factor,
                5.0 * b.total_factor_std_error);
}

TEST(SimulateChain, QuadruplingSamplesHalvesStandardError) {
    const SimulationResult small = simulate_chain(make_e2(), quick_config(9, 25'000));
    const SimulationResult large = simulate_chain(make_e2(), quick_config(9, 100'000));
    const double ratio = large.total_factor_std_error / small.total_factor_std_error;
    EXPECT_NEAR(ratio, 0.5, 0.1);  // within 20%
}

TEST(SimulateChain, NoiselessChainTracksScaledSourceDraws) {
    CascadeChain chain;
    chain.source = {4.0, 2.0};
    chain.stages = {{5.0, 0.0}, {0.5, 0.0}};
    const SimulationResult result = simulate_chain(chain, quick_config(11));
    // No added randomness: interface estimates are the source estimate scaled
    // by the gain product (up to per-sample squaring order).
    EXPECT_LE(relative_difference(result.interfaces[1].estimated_noise,
                                  5.0 * result.interfaces[0].estimated_noise),
              1e-12);
    EXPECT_LE(relative_difference(result.interfaces[2].estimated_noise,
                                  2.5 * result.interfaces[0].estimated_noise),
              1e-12);
    EXPECT_NEAR(result.empirical_total_factor, 1.0, 4.0 * result.total_factor_std_error);
    for (double factor : result.empirical_stage_factors)
        EXPECT_LE(relative_difference(factor, 1.0), 1e-12);
}

TEST(SimulateChain, IdentityChainEstimatesFactorNearOne) {
    CascadeChain wire;
    wire.source = {3.0, 2.0};
    const SimulationResult result = simulate_chain(wire, quick_config(13));
    ASSERT_EQ(result.interfaces.size(), 1u);
    EXPECT_NEAR(result.empirical_total_factor, 1.0, 4.0 * result.total_factor_std_error);
}

// Same seed, all powers scaled by c: the identical standard-normal draws are
// reused, so every estimate scales by c and the factors cancel exactly.
TEST(SimulateChain, LinearityInNoisePowers) {
    const double c = 3.7;
    CascadeChain scaled = make_e2();
    scaled.source.noise_power *= c;
    for (StageSpec& s : scaled.stages) s.added_noise *= c;

    const SimulationResult base = simulate_chain(make_e2(), quick_config(17));
    const SimulationResult bigger = simulate_chain(scaled, quick_config(17));
    for (std::size_t i = 0; i < base.interfaces.size(); ++i) {
        EXPECT_LE(relative_difference(bigger.interfaces[i].estimated_noise,
                                      c * base.interfaces[i].estimated_noise),
                  1e-12);
    }
    EXPECT_LE(relative_difference(bigger.empirical_total_factor, base.empirical_total_factor),
              1e-12);
}

TEST(EmpiricalStageFactors, MatchesResultColumn) {
    const SimulationResult result = simulate_chain(make_e1(), quick_config(19));
    EXPECT_EQ(empirical_stage_factors(result, make_e1()), result.empirical_stage_factors);
}

TEST(EmpiricalStageFactors, RejectsMismatchedChain) {
    const SimulationResult result = simulate_chain(make_e1(), quick_config(21));
    EXPECT_THROW(empirical_stage_factors(result, make_e2()), std::invalid_argument);

    CascadeChain tweaked = make_e1();
    tweaked.stages[1].added_noise = 6.0;
    EXPECT_THROW(empirical_stage_factors(result, tweaked), std::invalid_argument);
}

}  // namespace
}  // namespace cascade_noise
