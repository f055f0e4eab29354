#pragma once

#include <cstddef>
#include <vector>

#include "cascade_noise/chain.hpp"

namespace cascade_noise {

// Powers at the output plane of one stage, plus what the stage contributed.
struct StageLedgerEntry {
    std::size_t index = 0;    // 1-based stage position
    double input_signal = 0.0;
    double input_noise = 0.0;
    double gain = 0.0;
    double added_noise = 0.0;
    double output_signal = 0.0;
    double output_noise = 0.0;

    double input_snr() const { return input_signal / input_noise; }
    double output_snr() const { return output_signal / output_noise; }
};

// Full interface-by-interface record of a propagation pass.
struct PropagationLedger {
    double source_signal = 0.0;
    double source_noise = 0.0;
    std::vector<StageLedgerEntry> entries;

    double source_snr() const { return source_signal / source_noise; }

    // Powers at the cascade output (the source plane for an empty chain).
    double output_signal() const {
        return entries.empty() ? source_signal : entries.back().output_signal;
    }
    double output_noise() const {
        return entries.empty() ? source_noise : entries.back().output_noise;
    }
    double output_snr() const { return output_signal() / output_noise(); }
};

// Walk the chain: S_o = S_i * M, N_o = N_i * M + N_a at every stage.
PropagationLedger propagate(const CascadeChain& chain);

// N_o(n) = N_i * prod(M) + sum_x N_a(x) * prod_{y>x}(M_y), accumulated left
// to right. Same value as the ledger, kept as an independent check.
double closed_form_output_noise(const CascadeChain& chain);

// Total noise factor F_T = SNR_i / SNR_o, evaluated in expanded form:
//   F_T = 1 + sum_x N_a(x) / (N_i * prod_{y<=x} M_y).
// The expansion is exact for noiseless chains (each term is 0, so the sum is
// exactly 1) and is invariant in the signal power by construction.
double total_noise_factor_direct(const CascadeChain& chain);

// The same quantity evaluated literally as a ratio of SNRs from a ledger.
// Subject to ordinary rounding; used as a cross-check.
double total_factor_from_snr(const PropagationLedger& ledger);

// Per-stage SNR degradation SNR_in(x) / SNR_out(x) read off a ledger.
double stage_factor_from_snr(const PropagationLedger& ledger, std::size_t stage);

}  // namespace cascade_noise
