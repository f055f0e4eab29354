#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "cascade_noise/chain.hpp"
#include "cascade_noise/propagation.hpp"

namespace cascade_noise {

struct SimulationConfig {
    std::size_t sample_count = 1'000'000;  // draws per noise source (>= 1000)
    std::uint64_t seed = 1;
    std::size_t block_size = 65536;  // draws per reduction block
    unsigned threads = 0;            // 0 = hardware concurrency
};

// Estimated noise power at one interface, with its analytic counterpart.
// Interface 0 is the source plane; interface x is the output of stage x.
struct InterfaceEstimate {
    std::size_t interface_index = 0;
    double analytic_noise = 0.0;
    double estimated_noise = 0.0;
    double std_error = 0.0;  // standard error of estimated_noise
};

struct SimulationResult {
    std::vector<InterfaceEstimate> interfaces;
    std::vector<double> empirical_stage_factors;   // per stage, from estimates
    std::vector<double> stage_factor_std_errors;
    std::vector<double> analytic_stage_factors;    // corrected factors
    double empirical_total_factor = 1.0;
    double total_factor_std_error = 0.0;
    double analytic_total_factor = 1.0;
    std::size_t sample_count = 0;
    std::uint64_t seed = 0;
};

// Monte Carlo model: every noise source is an independent zero-mean Gaussian
// amplitude whose variance is the source's noise power. Interface noise power
// is the mean of the squared summed amplitude over sample_count draws.
//
// Each (source, block) pair gets its own deterministic generator substream,
// and blocks are reduced in index order, so results are bit-identical across
// reruns and thread counts. Draws are standard-normal scaled by sqrt(power),
// so rescaling a power rescales the estimate exactly linearly.
SimulationResult simulate_chain(const CascadeChain& chain, const SimulationConfig& config);

// Convenience wrapper with default configuration.
SimulationResult simulate_chain(const CascadeChain& chain);

// Stage factors N^_o(x) / (N^_i(x) * M_x) recomputed from a result's
// interface estimates. Throws if the result was not produced from this chain
// (checked against the stored analytic noise column).
std::vector<double> empirical_stage_factors(const SimulationResult& result,
                                            const CascadeChain& chain);

}  // namespace cascade_noise
