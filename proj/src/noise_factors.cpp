#include "cascade_noise/noise_factors.hpp"

#include <algorithm>
#include <locale>
#include <sstream>
#include <stdexcept>

#include "cascade_noise/numeric.hpp"
#include "cascade_noise/units.hpp"

namespace cascade_noise {

namespace {

void require_stage(const CascadeChain& chain, std::size_t stage) {
    if (stage < 1 || stage > chain.stage_count())
        throw std::invalid_argument("stage index " + std::to_string(stage) +
                                    " out of range (chain has " +
                                    std::to_string(chain.stage_count()) + " stages)");
}

// The two stage-factor definitions, shaped identically on purpose: for
// stage 1 reference_noise is the same value in both, and evaluating the same
// expression on the same operands makes the factors bit-identical there.
double stage_factor(double added_noise, double reference_noise, double gain) {
    return 1.0 + added_noise / (reference_noise * gain);
}

}  // namespace

double friis_stage_factor(const CascadeChain& chain, std::size_t stage) {
    ensure_valid(chain);
    require_stage(chain, stage);
    const StageSpec& s = chain.stages[stage - 1];
    return stage_factor(s.added_noise, chain.source.noise_power, s.gain);
}

double total_friis(const CascadeChain& chain) {
    ensure_valid(chain);
    if (chain.stage_count() == 0) return 1.0;
    // F_T = F_1 + sum_{x=2..n} (F_x - 1) / prod_{y=1..x-1} M_y
    double total =
        stage_factor(chain.stages[0].added_noise, chain.source.noise_power, chain.stages[0].gain);
    double leading_gain = 1.0;
    for (std::size_t x = 2; x <= chain.stage_count(); ++x) {
        const StageSpec& s = chain.stages[x - 1];
        leading_gain *= chain.stages[x - 2].gain;
        double fx = stage_factor(s.added_noise, chain.source.noise_power, s.gain);
        total += (fx - 1.0) / leading_gain;
    }
    return total;
}

double corrected_stage_factor(const CascadeChain& chain, std::size_t stage) {
    require_stage(chain, stage);
    PropagationLedger ledger = propagate(chain);  // validates
    const StageLedgerEntry& e = ledger.entries[stage - 1];
    return stage_factor(e.added_noise, e.input_noise, e.gain);
}

double corrected_stage_factor_recursive(const CascadeChain& chain, std::size_t stage) {
    ensure_valid(chain);
    require_stage(chain, stage);
    // F_x = 1 + N_a(x) / (N_i * prod_{j<=x} M_j * prod_{k<x} F_k), the
    // prefix factors feeding each successive denominator.
    double gain_product = 1.0;
    double factor_product = 1.0;
    double factor = 1.0;
    for (std::size_t x = 1; x <= stage; ++x) {
        const StageSpec& s = chain.stages[x - 1];
        gain_product *= s.gain;
        factor = 1.0 + s.added_noise / (chain.source.noise_power * gain_product * factor_product);
        factor_product *= factor;
    }
    return factor;
}

double total_corrected_product(const CascadeChain& chain) {
    PropagationLedger ledger = propagate(chain);  // validates
    double product = 1.0;
    for (const StageLedgerEntry& e : ledger.entries)
        product *= stage_factor(e.added_noise, e.input_noise, e.gain);
    return product;
}

NoiseFactorReport compare_factors(const CascadeChain& chain) {
    PropagationLedger ledger = propagate(chain);  // validates
    NoiseFactorReport report;
    report.rows.reserve(ledger.entries.size());
    for (const StageLedgerEntry& e : ledger.entries) {
        StageFactorRow row;
        row.index = e.index;
        row.gain = e.gain;
        row.added_noise = e.added_noise;
        row.friis_factor = stage_factor(e.added_noise, ledger.source_noise, e.gain);
        row.corrected_factor = stage_factor(e.added_noise, e.input_noise, e.gain);
        row.friis_figure_db = factor_to_figure_db(row.friis_factor);
        row.corrected_figure_db = factor_to_figure_db(row.corrected_factor);
        row.delta = row.friis_factor - row.corrected_factor;
        report.rows.push_back(row);
    }
    report.total_direct = total_noise_factor_direct(chain);
    report.total_friis = total_friis(chain);
    report.total_corrected_product = total_corrected_product(chain);
    report.max_total_discrepancy =
        std::max({relative_difference(report.total_direct, report.total_friis),
                  relative_difference(report.total_direct, report.total_corrected_product),
                  relative_difference(report.total_friis, report.total_corrected_product)});
    return report;
}

SweepTarget parse_sweep_target(const std::string& path, const CascadeChain& chain) {
    SweepTarget target;
    if (path == "source.signal") {
        target.kind = SweepTarget::Kind::source_signal;
        return target;
    }
    if (path == "source.noise") {
        target.kind = SweepTarget::Kind::source_noise;
        return target;
    }
    const std::string prefix = "stage.";
    if (path.rfind(prefix, 0) == 0) {
        std::size_t dot = path.find('.', prefix.size());
        if (dot != std::string::npos) {
            const std::string index_text = path.substr(prefix.size(), dot - prefix.size());
            const std::string field = path.substr(dot + 1);
            std::size_t index = 0;
            try {
                std::size_t consumed = 0;
                index = std::stoul(index_text, &consumed);
                if (consumed != index_text.size()) index = 0;
            } catch (const std::exception&) {
                index = 0;
            }
            if (index >= 1 && (field == "gain" || field == "added_noise")) {
                if (index > chain.stage_count())
                    throw std::invalid_argument("sweep target '" + path +
                                                "' is out of range (chain has " +
                                                std::to_string(chain.stage_count()) + " stages)");
                target.kind = field == "gain" ? SweepTarget::Kind::stage_gain
                                              : SweepTarget::Kind::stage_added_noise;
                target.stage = index;
                return target;
            }
        }
    }
    throw std::invalid_argument("unknown sweep target '" + path +
                                "'; expected source.signal, source.noise, stage.<x>.gain, or "
                                "stage.<x>.added_noise");
}

SweepResult sweep(const CascadeChain& chain, const std::string& target_path,
                  const std::vector<double>& values) {
    ensure_valid(chain);
    const SweepTarget target = parse_sweep_target(target_path, chain);
    SweepResult result;
    result.target = target_path;
    result.points.reserve(values.size());
    for (double value : values) {
        CascadeChain modified = chain;
        switch (target.kind) {
            case SweepTarget::Kind::source_signal:
                modified.source.signal_power = value;
                break;
            case SweepTarget::Kind::source_noise:
                modified.source.noise_power = value;
                break;
            case SweepTarget::Kind::stage_gain:
                modified.stages[target.stage - 1].gain = value;
                break;
            case SweepTarget::Kind::stage_added_noise:
                modified.stages[target.stage - 1].added_noise = value;
                break;
        }
        if (!validate_chain(modified).ok()) {
            std::ostringstream message;
            message.imbue(std::locale::classic());
            message << "sweep value " << value << " for " << target_path
                    << " makes the chain invalid";
            throw std::invalid_argument(message.str());
        }
        result.points.push_back({value, compare_factors(modified)});
    }
    return result;
}

}  // namespace cascade_noise
