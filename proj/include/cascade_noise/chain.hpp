#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace cascade_noise {

// Source driving the cascade: available signal power and noise power at the
// input plane, in linear units (watts, say — any consistent power unit works).
struct SourceSpec {
    double signal_power = 0.0;
    double noise_power = 0.0;
};

// One two-port stage. `gain` is the linear power gain M; `added_noise` is the
// stage's own noise power referred to the stage output.
struct StageSpec {
    double gain = 1.0;
    double added_noise = 0.0;
};

struct CascadeChain {
    SourceSpec source;
    std::vector<StageSpec> stages;

    std::size_t stage_count() const { return stages.size(); }
};

// A single validation finding. `stage` is 1-based; 0 refers to the source.
struct Violation {
    std::size_t stage = 0;
    std::string field;
    std::string message;
};

struct ValidationResult {
    std::vector<Violation> violations;

    bool ok() const { return violations.empty(); }
};

// Checks every structural rule: finite fields, signal > 0, noise > 0,
// gain > 0, added_noise >= 0. Collects all findings instead of stopping at
// the first.
ValidationResult validate_chain(const CascadeChain& chain);

// Throws ValidationError listing every violation if the chain is invalid.
void ensure_valid(const CascadeChain& chain);

// Stage description as it appears in a chain document, before resolution.
// Exactly one of the gain fields and exactly one of the noise fields must be
// present; resolve_chain enforces that.
struct RawStageSpec {
    std::optional<double> gain_linear;
    std::optional<double> gain_db;
    std::optional<double> added_noise;
    std::optional<double> friis_figure_db;
    std::optional<double> corrected_figure_db;
};

// Invert the stage-factor definitions to recover the physical added noise.
// The Friis form references the stage to the source noise: N_a = (F-1)*N_i*M.
double added_noise_from_friis_factor(double factor, double source_noise, double gain);

// The corrected form references the stage to the noise actually arriving at
// its input, i.e. the output noise of everything before it:
// N_a = (F-1)*N_o(prefix)*M. `prefix` is the chain up to and including the
// previous stage (empty stage list for stage 1).
double added_noise_from_corrected_factor(double factor, const CascadeChain& prefix, double gain);

// Build a concrete chain from raw stage specs, resolving dB gains and
// figure-specified noise left to right (a corrected figure needs the noise
// arriving at that stage, which depends on everything before it).
CascadeChain resolve_chain(const SourceSpec& source, const std::vector<RawStageSpec>& raw_stages);

}  // namespace cascade_noise
