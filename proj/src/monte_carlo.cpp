#include "cascade_noise/monte_carlo.hpp"

#include <cmath>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace cascade_noise {

namespace {

// Fibonacci-hashing mixer; decorrelates consecutive integers into seeds.
std::uint64_t mix64(std::uint64_t z) {
    z += 0x9E3779B97F4A7C15ull;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

// Independent substream per (noise source, sample block). The mapping is a
// pure function of (seed, stream, block), so any thread can regenerate any
// block and the estimate cannot depend on scheduling.
std::uint64_t substream_seed(std::uint64_t seed, std::uint64_t stream, std::uint64_t block) {
    return mix64(mix64(mix64(seed) ^ stream) ^ block);
}

// Sums of squared amplitudes for one block, one slot per interface.
using BlockSums = std::vector<double>;

struct Model {
    double sqrt_source_noise = 0.0;
    std::vector<double> sqrt_gain;
    std::vector<double> sqrt_added;
};

// One block: fresh generators for every stream, samples in index order.
// Draws are standard normal scaled by the sqrt of the power, so rescaling a
// power reuses exactly the same underlying draws.
BlockSums run_block(const Model& model, std::uint64_t seed, std::uint64_t block,
                    std::size_t count) {
    const std::size_t stages = model.sqrt_gain.size();
    std::vector<std::mt19937_64> generators;
    generators.reserve(stages + 1);
    for (std::size_t stream = 0; stream <= stages; ++stream)
        generators.emplace_back(substream_seed(seed, stream, block));
    std::vector<std::normal_distribution<double>> draws(stages + 1,
                                                        std::normal_distribution<double>(0.0, 1.0));

    BlockSums sums(stages + 1, 0.0);
    for (std::size_t k = 0; k < count; ++k) {
        double amplitude = model.sqrt_source_noise * draws[0](generators[0]);
        sums[0] += amplitude * amplitude;
        for (std::size_t x = 0; x < stages; ++x) {
            amplitude = model.sqrt_gain[x] * amplitude +
                        model.sqrt_added[x] * draws[x + 1](generators[x + 1]);
            sums[x + 1] += amplitude * amplitude;
        }
    }
    return sums;
}

std::vector<double> factors_from_interfaces(const std::vector<InterfaceEstimate>& interfaces,
                                            const CascadeChain& chain) {
    std::vector<double> factors;
    factors.reserve(chain.stage_count());
    for (std::size_t x = 1; x <= chain.stage_count(); ++x) {
        factors.push_back(interfaces[x].estimated_noise /
                          (interfaces[x - 1].estimated_noise * chain.stages[x - 1].gain));
    }
    return factors;
}

}  // namespace

SimulationResult simulate_chain(const CascadeChain& chain, const SimulationConfig& config) {
    ensure_valid(chain);
    if (config.sample_count < 1000)
        throw std::invalid_argument("sample_count must be at least 1000");
    if (config.block_size == 0)
        throw std::invalid_argument("block_size must be positive");

    const std::size_t n = chain.stage_count();
    Model model;
    model.sqrt_source_noise = std::sqrt(chain.source.noise_power);
    model.sqrt_gain.reserve(n);
    model.sqrt_added.reserve(n);
    for (const StageSpec& s : chain.stages) {
        model.sqrt_gain.push_back(std::sqrt(s.gain));
        model.sqrt_added.push_back(std::sqrt(s.added_noise));
    }

    const std::size_t block_count = (config.sample_count + config.block_size - 1) / config.block_size;
    std::vector<BlockSums> block_sums(block_count);

    auto block_samples = [&](std::size_t block) {
        const std::size_t begin = block * config.block_size;
        return std::min(config.block_size, config.sample_count - begin);
    };

    unsigned threads = config.threads != 0 ? config.threads : std::thread::hardware_concurrency();
    if (threads == 0) threads = 1;
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, block_count));

    if (threads <= 1) {
        for (std::size_t block = 0; block < block_count; ++block)
            block_sums[block] = run_block(model, config.seed, block, block_samples(block));
    } else {
        std::vector<std::thread> workers;
        workers.reserve(threads);
        for (unsigned t = 0; t < threads; ++t) {
            workers.emplace_back([&, t] {
                for (std::size_t block = t; block < block_count; block += threads)
                    block_sums[block] = run_block(model, config.seed, block, block_samples(block));
            });
        }
        for (std::thread& w : workers) w.join();
    }

    // Reduce in block order: the total is independent of thread count.
    std::vector<double> totals(n + 1, 0.0);
    for (const BlockSums& sums : block_sums)
        for (std::size_t i = 0; i <= n; ++i) totals[i] += sums[i];

    const double k = static_cast<double>(config.sample_count);
    const double relative_se = std::sqrt(2.0 / k);  // chi-square mean-of-squares

    PropagationLedger ledger = propagate(chain);
    SimulationResult result;
    result.sample_count = config.sample_count;
    result.seed = config.seed;
    result.interfaces.reserve(n + 1);
    for (std::size_t i = 0; i <= n; ++i) {
        InterfaceEstimate estimate;
        estimate.interface_index = i;
        estimate.analytic_noise = i == 0 ? ledger.source_noise : ledger.entries[i - 1].output_noise;
        estimate.estimated_noise = totals[i] / k;
        estimate.std_error = estimate.estimated_noise * relative_se;
        result.interfaces.push_back(estimate);
    }

    result.empirical_stage_factors = factors_from_interfaces(result.interfaces, chain);
    result.analytic_stage_factors.reserve(n);
    result.stage_factor_std_errors.reserve(n);
    for (std::size_t x = 1; x <= n; ++x) {
        const StageLedgerEntry& e = ledger.entries[x - 1];
        result.analytic_stage_factors.push_back(1.0 + e.added_noise / (e.input_noise * e.gain));
        // Ratio of two power estimates; combine their relative errors in
        // quadrature (ignoring their positive correlation, which only makes
        // the band conservative).
        result.stage_factor_std_errors.push_back(result.empirical_stage_factors[x - 1] *
                                                 relative_se * std::sqrt(2.0));
    }

    // Empirical total factor: analytic SNR_i against the estimated output
    // noise (signal propagates deterministically through a linear chain).
    const double estimated_output_noise = result.interfaces.back().estimated_noise;
    result.empirical_total_factor =
        ledger.source_snr() / (ledger.output_signal() / estimated_output_noise);
    result.total_factor_std_error = result.empirical_total_factor * relative_se;
    result.analytic_total_factor = total_noise_factor_direct(chain);
    return result;
}

SimulationResult simulate_chain(const CascadeChain& chain) {
    return simulate_chain(chain, SimulationConfig{});
}

std::vector<double> empirical_stage_factors(const SimulationResult& result,
                                            const CascadeChain& chain) {
    ensure_valid(chain);
    if (result.interfaces.size() != chain.stage_count() + 1)
        throw std::invalid_argument("simulation result does not match chain: expected " +
                                    std::to_string(chain.stage_count() + 1) + " interfaces, have " +
                                    std::to_string(result.interfaces.size()));
    PropagationLedger ledger = propagate(chain);
    for (std::size_t i = 0; i < result.interfaces.size(); ++i) {
        const double analytic =
            i == 0 ? ledger.source_noise : ledger.entries[i - 1].output_noise;
        if (result.interfaces[i].analytic_noise != analytic)
            throw std::invalid_argument(
                "simulation result does not match chain: analytic noise differs at interface " +
                std::to_string(i));
    }
    return factors_from_interfaces(result.interfaces, chain);
}

}  // namespace cascade_noise
