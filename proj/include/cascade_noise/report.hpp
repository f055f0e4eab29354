#pragma once

#include <string>

#include "cascade_noise/chain.hpp"
#include "cascade_noise/monte_carlo.hpp"
#include "cascade_noise/noise_factors.hpp"
#include "cascade_noise/propagation.hpp"

namespace cascade_noise {

enum class ReportFormat { table, csv };

// Shortest decimal string that parses back to exactly the same double.
// Fixed notation inside [1e-12, 1e12), scientific outside, "0" for zero.
// Locale-independent ('.' decimal separator always).
std::string format_number(double value);

// Per-stage factor comparison. CSV: header, one row per stage, one totals
// row (stage column = "total") carrying the three totals and the largest
// pairwise relative difference between them.
std::string emit_report(const NoiseFactorReport& report, ReportFormat format);

// Propagation ledger joined with the factor comparison. CSV adds a "source"
// row carrying the source-plane powers.
std::string emit_analysis(const PropagationLedger& ledger, const NoiseFactorReport& report,
                          ReportFormat format);

// One report per swept value, stacked; rows gain a leading value column.
std::string emit_sweep(const SweepResult& result, ReportFormat format);

// Analytic vs estimated noise power per interface, then the factor summary.
std::string emit_simulation(const SimulationResult& result, ReportFormat format);

}  // namespace cascade_noise
