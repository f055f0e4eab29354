#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "cascade_noise/chain.hpp"
#include "cascade_noise/propagation.hpp"

namespace cascade_noise {

// Classic textbook stage factor: F_x = 1 + N_a(x) / (N_i * M_x).
// Every stage is referenced to the *source* noise N_i, and the denominator
// carries only the stage's own gain — the gains of everything before stage x
// do not enter. That convention is what makes the cascade formula
//   F_T = F_1 + (F_2 - 1)/M_1 + (F_3 - 1)/(M_1 M_2) + ...
// come out right, and it is also where the per-stage numbers stop describing
// the stage in isolation.
double friis_stage_factor(const CascadeChain& chain, std::size_t stage);

// Friis cascade total: F_1 + sum_{x>=2} (F_x - 1) / prod_{y<x} M_y.
double total_friis(const CascadeChain& chain);

// Corrected stage factor: F_x = N_o(x) / (N_i(x) * M_x) = 1 + N_a(x) / (N_i(x) * M_x),
// with N_i(x) the noise power actually arriving at stage x. This is the true
// SNR degradation of the stage in place.
double corrected_stage_factor(const CascadeChain& chain, std::size_t stage);

// Same quantity via the recursion N_o(x) = N_o(x-1) * M_x * F_x: the input
// noise for stage x is rebuilt from the previous stage's factor instead of a
// fresh propagation pass. Kept separate as an internal consistency check.
double corrected_stage_factor_recursive(const CascadeChain& chain, std::size_t stage);

// Product of the corrected stage factors. Telescopes to the defining ratio:
//   prod_x F_x = N_o(n) / (N_i * prod_x M_x) = F_T.
double total_corrected_product(const CascadeChain& chain);

// One row of a side-by-side stage comparison.
struct StageFactorRow {
    std::size_t index = 0;
    double gain = 0.0;
    double added_noise = 0.0;
    double friis_factor = 0.0;
    double corrected_factor = 0.0;
    double friis_figure_db = 0.0;      // 10*log10 of the factors
    double corrected_figure_db = 0.0;
    double delta = 0.0;                // friis_factor - corrected_factor
};

struct NoiseFactorReport {
    std::vector<StageFactorRow> rows;
    double total_direct = 1.0;             // expanded-form F_T
    double total_friis = 1.0;              // Friis cascade formula
    double total_corrected_product = 1.0;  // product of corrected factors
    double max_total_discrepancy = 0.0;    // largest pairwise relative difference
};

NoiseFactorReport compare_factors(const CascadeChain& chain);

// Sweep one scalar of the chain and recompute the comparison at each point.
// Target paths: "source.signal", "source.noise", "stage.<x>.gain",
// "stage.<x>.added_noise" (1-based x).
struct SweepTarget {
    enum class Kind { source_signal, source_noise, stage_gain, stage_added_noise };
    Kind kind = Kind::source_noise;
    std::size_t stage = 0;  // 1-based, only for stage targets
};

SweepTarget parse_sweep_target(const std::string& path, const CascadeChain& chain);

struct SweepPoint {
    double value = 0.0;
    NoiseFactorReport report;
};

struct SweepResult {
    std::string target;
    std::vector<SweepPoint> points;
};

// Evaluate compare_factors once per value, substituting the target field.
// The base chain is left untouched between points. A value that makes the
// chain invalid raises an argument error naming that value.
SweepResult sweep(const CascadeChain& chain, const std::string& target_path,
                  const std::vector<double>& values);

}  // namespace cascade_noise
