#include "cascade_noise/chain.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "cascade_noise/errors.hpp"
#include "cascade_noise/propagation.hpp"
#include "cascade_noise/units.hpp"

namespace cascade_noise {

namespace {

void check_field(std::vector<Violation>& out, std::size_t stage, const char* field,
                 double value, bool allow_zero) {
    if (!std::isfinite(value)) {
        out.push_back({stage, field, "must be finite"});
    } else if (value < 0.0 || (!allow_zero && value == 0.0)) {
        out.push_back({stage, field, allow_zero ? "must be >= 0" : "must be > 0"});
    }
}

std::string describe(const Violation& v) {
    std::string where = v.stage == 0 ? "source" : "stage " + std::to_string(v.stage);
    return where + " " + v.field + " " + v.message;
}

}  // namespace

ValidationResult validate_chain(const CascadeChain& chain) {
    ValidationResult result;
    check_field(result.violations, 0, "signal_power", chain.source.signal_power, false);
    check_field(result.violations, 0, "noise_power", chain.source.noise_power, false);
    for (std::size_t x = 1; x <= chain.stage_count(); ++x) {
        const StageSpec& s = chain.stages[x - 1];
        check_field(result.violations, x, "gain", s.gain, false);
        check_field(result.violations, x, "added_noise", s.added_noise, true);
    }
    return result;
}

void ensure_valid(const CascadeChain& chain) {
    ValidationResult result = validate_chain(chain);
    if (result.ok()) return;
    std::string message = "invalid chain: ";
    for (std::size_t i = 0; i < result.violations.size(); ++i) {
        if (i > 0) message += "; ";
        message += describe(result.violations[i]);
    }
    throw ValidationError(message);
}

namespace {

void check_inversion_args(double factor, double gain) {
    if (!std::isfinite(factor) || !std::isfinite(gain))
        throw std::invalid_argument("noise-factor inversion requires finite arguments");
    if (factor < 1.0)
        throw std::domain_error("noise factor must be >= 1");
    if (gain <= 0.0)
        throw std::domain_error("gain must be > 0");
}

}  // namespace

double added_noise_from_friis_factor(double factor, double source_noise, double gain) {
    check_inversion_args(factor, gain);
    if (!std::isfinite(source_noise))
        throw std::invalid_argument("noise-factor inversion requires finite arguments");
    if (source_noise <= 0.0)
        throw std::domain_error("source noise must be > 0");
    return (factor - 1.0) * source_noise * gain;
}

double added_noise_from_corrected_factor(double factor, const CascadeChain& prefix, double gain) {
    check_inversion_args(factor, gain);
    ensure_valid(prefix);
    // Noise arriving at the stage input is the prefix's output noise.
    return (factor - 1.0) * propagate(prefix).output_noise() * gain;
}

namespace {

int count_present(std::initializer_list<bool> fields) {
    int n = 0;
    for (bool f : fields) n += f ? 1 : 0;
    return n;
}

[[noreturn]] void stage_error(std::size_t stage, const std::string& what) {
    throw ValidationError("stage " + std::to_string(stage) + " " + what);
}

}  // namespace

CascadeChain resolve_chain(const SourceSpec& source, const std::vector<RawStageSpec>& raw_stages) {
    CascadeChain chain;
    chain.source = source;
    {
        CascadeChain source_only = chain;
        ensure_valid(source_only);  // fail before touching figure math
    }
    chain.stages.reserve(raw_stages.size());
    for (std::size_t x = 1; x <= raw_stages.size(); ++x) {
        const RawStageSpec& raw = raw_stages[x - 1];
        if (count_present({raw.gain_linear.has_value(), raw.gain_db.has_value()}) != 1)
            stage_error(x, "must specify exactly one of gain, gain_db");
        if (count_present({raw.added_noise.has_value(), raw.friis_figure_db.has_value(),
                           raw.corrected_figure_db.has_value()}) != 1)
            stage_error(x,
                        "must specify exactly one of added_noise, friis_figure_db, "
                        "corrected_figure_db");

        StageSpec stage;
        try {
            stage.gain = raw.gain_linear ? *raw.gain_linear : db_to_linear(*raw.gain_db);
            if (!std::isfinite(stage.gain) || stage.gain <= 0.0)
                stage_error(x, "gain must be > 0");

            if (raw.added_noise) {
                stage.added_noise = *raw.added_noise;
            } else if (raw.friis_figure_db) {
                // Invert through the excess F-1 rather than the factor: a
                // figure of, say, 1e-18 dB still resolves to a nonzero noise.
                stage.added_noise = figure_db_to_excess(*raw.friis_figure_db) *
                                    source.noise_power * stage.gain;
            } else {
                // Needs the noise at this stage's input, so the prefix must
                // already be resolved — hence the left-to-right pass.
                stage.added_noise = figure_db_to_excess(*raw.corrected_figure_db) *
                                    propagate(chain).output_noise() * stage.gain;
            }
        } catch (const ValidationError&) {
            throw;
        } catch (const std::exception& e) {
            stage_error(x, std::string("could not be resolved: ") + e.what());
        }
        if (!std::isfinite(stage.added_noise) || stage.added_noise < 0.0)
            stage_error(x, "added_noise must be >= 0");
        chain.stages.push_back(stage);
    }
    ensure_valid(chain);
    return chain;
}

}  // namespace cascade_noise
