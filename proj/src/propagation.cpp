#include "cascade_noise/propagation.hpp"

#include <stdexcept>
#include <string>

namespace cascade_noise {

PropagationLedger propagate(const CascadeChain& chain) {
    ensure_valid(chain);
    PropagationLedger ledger;
    ledger.source_signal = chain.source.signal_power;
    ledger.source_noise = chain.source.noise_power;
    ledger.entries.reserve(chain.stage_count());

    double signal = ledger.source_signal;
    double noise = ledger.source_noise;
    for (std::size_t x = 1; x <= chain.stage_count(); ++x) {
        const StageSpec& s = chain.stages[x - 1];
        StageLedgerEntry entry;
        entry.index = x;
        entry.input_signal = signal;
        entry.input_noise = noise;
        entry.gain = s.gain;
        entry.added_noise = s.added_noise;
        entry.output_signal = signal * s.gain;
        entry.output_noise = noise * s.gain + s.added_noise;
        ledger.entries.push_back(entry);
        signal = entry.output_signal;
        noise = entry.output_noise;
    }
    return ledger;
}

double closed_form_output_noise(const CascadeChain& chain) {
    ensure_valid(chain);
    const std::size_t n = chain.stage_count();
    // N_o = N_i * prod(M) + sum_x N_a(x) * prod_{y > x} M_y, every product
    // taken left to right.
    double total_gain = 1.0;
    for (const StageSpec& s : chain.stages) total_gain *= s.gain;
    double noise = chain.source.noise_power * total_gain;
    for (std::size_t x = 1; x <= n; ++x) {
        double trailing_gain = 1.0;
        for (std::size_t y = x + 1; y <= n; ++y) trailing_gain *= chain.stages[y - 1].gain;
        noise += chain.stages[x - 1].added_noise * trailing_gain;
    }
    return noise;
}

double total_noise_factor_direct(const CascadeChain& chain) {
    ensure_valid(chain);
    // Expanded form of the defining SNR ratio:
    //   F_T = 1 + sum_x N_a(x) / (N_i * prod_{y<=x} M_y).
    // Evaluated this way the signal cancels identically (it never appears)
    // and a noiseless chain sums to exactly 1.
    double factor = 1.0;
    double gain_product = 1.0;
    for (const StageSpec& s : chain.stages) {
        gain_product *= s.gain;
        factor += s.added_noise / (chain.source.noise_power * gain_product);
    }
    return factor;
}

double total_factor_from_snr(const PropagationLedger& ledger) {
    return ledger.source_snr() / ledger.output_snr();
}

double stage_factor_from_snr(const PropagationLedger& ledger, std::size_t stage) {
    if (stage < 1 || stage > ledger.entries.size())
        throw std::invalid_argument("stage index " + std::to_string(stage) +
                                    " out of range (ledger has " +
                                    std::to_string(ledger.entries.size()) + " stages)");
    const StageLedgerEntry& e = ledger.entries[stage - 1];
    return e.input_snr() / e.output_snr();
}

}  // namespace cascade_noise
