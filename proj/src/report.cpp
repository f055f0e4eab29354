#include "cascade_noise/report.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <system_error>
#include <utility>
#include <vector>

namespace cascade_noise {

std::string format_number(double value) {
    if (value == 0.0) return "0";
    if (std::isnan(value)) return "nan";
    if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
    const double magnitude = std::fabs(value);
    const std::chars_format format = (magnitude >= 1e12 || magnitude < 1e-12)
                                         ? std::chars_format::scientific
                                         : std::chars_format::fixed;
    std::array<char, 64> buffer;
    const auto result = std::to_chars(buffer.data(), buffer.data() + buffer.size(), value, format);
    if (result.ec != std::errc())
        throw std::runtime_error("number formatting failed");
    return std::string(buffer.data(), result.ptr);
}

namespace {

using Row = std::vector<std::string>;

std::string join_csv(const Row& cells) {
    std::string line;
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i > 0) line += ',';
        line += cells[i];
    }
    line += '\n';
    return line;
}

// Fixed-width table: first column left-aligned, the rest right-aligned.
std::string render_table(const Row& header, const std::vector<Row>& rows) {
    std::vector<std::size_t> widths(header.size(), 0);
    auto grow = [&](const Row& row) {
        for (std::size_t i = 0; i < row.size(); ++i)
            widths[i] = std::max(widths[i], row[i].size());
    };
    grow(header);
    for (const Row& row : rows) grow(row);

    auto emit_row = [&](const Row& row) {
        std::string line;
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i > 0) line += "  ";
            if (i == 0) {
                line += row[i];
                line.append(widths[i] - row[i].size(), ' ');
            } else {
                line.append(widths[i] - row[i].size(), ' ');
                line += row[i];
            }
        }
        // No trailing padding.
        while (!line.empty() && line.back() == ' ') line.pop_back();
        return line + "\n";
    };

    std::string text = emit_row(header);
    std::size_t rule = 0;
    for (std::size_t i = 0; i < widths.size(); ++i) rule += widths[i] + (i > 0 ? 2 : 0);
    text += std::string(rule, '-') + "\n";
    for (const Row& row : rows) text += emit_row(row);
    return text;
}

// Two-column label/value block used for table-format summaries.
std::string render_pairs(const std::vector<std::pair<std::string, std::string>>& pairs) {
    std::size_t width = 0;
    for (const auto& [label, value] : pairs) width = std::max(width, label.size());
    std::string text;
    for (const auto& [label, value] : pairs) {
        text += label;
        text.append(width - label.size(), ' ');
        text += "  " + value + "\n";
    }
    return text;
}

const Row kReportHeader = {"stage",
                           "gain",
                           "added_noise",
                           "friis_factor",
                           "corrected_factor",
                           "friis_figure_db",
                           "corrected_figure_db",
                           "delta",
                           "total_direct",
                           "total_friis",
                           "total_corrected_product",
                           "max_total_discrepancy"};

Row stage_cells(const StageFactorRow& row) {
    return {std::to_string(row.index),
            format_number(row.gain),
            format_number(row.added_noise),
            format_number(row.friis_factor),
            format_number(row.corrected_factor),
            format_number(row.friis_figure_db),
            format_number(row.corrected_figure_db),
            format_number(row.delta)};
}

Row totals_cells(const NoiseFactorReport& report) {
    return {format_number(report.total_direct), format_number(report.total_friis),
            format_number(report.total_corrected_product),
            format_number(report.max_total_discrepancy)};
}

std::string report_csv_rows(const NoiseFactorReport& report, const Row& prefix) {
    std::string text;
    for (const StageFactorRow& row : report.rows) {
        Row cells = prefix;
        for (std::string& cell : stage_cells(row)) cells.push_back(std::move(cell));
        for (int i = 0; i < 4; ++i) cells.emplace_back();
        text += join_csv(cells);
    }
    Row totals = prefix;
    totals.push_back("total");
    for (int i = 0; i < 7; ++i) totals.emplace_back();
    for (std::string& cell : totals_cells(report)) totals.push_back(std::move(cell));
    text += join_csv(totals);
    return text;
}

std::string report_table(const NoiseFactorReport& report) {
    Row header(kReportHeader.begin(), kReportHeader.begin() + 8);
    std::vector<Row> rows;
    rows.reserve(report.rows.size());
    for (const StageFactorRow& row : report.rows) rows.push_back(stage_cells(row));
    std::string text = render_table(header, rows);
    text += "\n";
    text += render_pairs({
        {"total (direct snr ratio)", format_number(report.total_direct)},
        {"total (friis composition)", format_number(report.total_friis)},
        {"total (corrected product)", format_number(report.total_corrected_product)},
        {"max pairwise discrepancy", format_number(report.max_total_discrepancy)},
    });
    return text;
}

}  // namespace

std::string emit_report(const NoiseFactorReport& report, ReportFormat format) {
    if (format == ReportFormat::csv)
        return join_csv(kReportHeader) + report_csv_rows(report, {});
    return report_table(report);
}

std::string emit_analysis(const PropagationLedger& ledger, const NoiseFactorReport& report,
                          ReportFormat format) {
    if (report.rows.size() != ledger.entries.size())
        throw std::invalid_argument("factor report does not match propagation ledger");

    if (format == ReportFormat::csv) {
        Row header = {"stage",         "gain",        "added_noise", "input_signal",
                      "input_noise",   "input_snr",   "output_signal", "output_noise",
                      "output_snr",    "friis_factor", "corrected_factor", "friis_figure_db",
                      "corrected_figure_db", "delta", "total_direct", "total_friis",
                      "total_corrected_product", "max_total_discrepancy"};
        std::string text = join_csv(header);
        // The source plane appears as the "output" of a pseudo-stage.
        Row source_row = {"source", "", "", "", "", "",
                          format_number(ledger.source_signal), format_number(ledger.source_noise),
                          format_number(ledger.source_snr()),
                          "", "", "", "", "", "", "", "", ""};
        text += join_csv(source_row);
        for (std::size_t i = 0; i < ledger.entries.size(); ++i) {
            const StageLedgerEntry& e = ledger.entries[i];
            const StageFactorRow& f = report.rows[i];
            Row cells = {std::to_string(e.index),
                         format_number(e.gain),
                         format_number(e.added_noise),
                         format_number(e.input_signal),
                         format_number(e.input_noise),
                         format_number(e.input_snr()),
                         format_number(e.output_signal),
                         format_number(e.output_noise),
                         format_number(e.output_snr()),
                         format_number(f.friis_factor),
                         format_number(f.corrected_factor),
                         format_number(f.friis_figure_db),
                         format_number(f.corrected_figure_db),
                         format_number(f.delta),
                         "", "", "", ""};
            text += join_csv(cells);
        }
        Row totals = {"total", "", "", "", "", "", "", "", "", "", "", "", "", ""};
        for (std::string& cell : totals_cells(report)) totals.push_back(std::move(cell));
        text += join_csv(totals);
        return text;
    }

    Row header = {"stage",         "input_signal", "input_noise", "input_snr",
                  "output_signal", "output_noise", "output_snr"};
    std::vector<Row> rows;
    rows.push_back({"source", "", "", "", format_number(ledger.source_signal),
                    format_number(ledger.source_noise), format_number(ledger.source_snr())});
    for (const StageLedgerEntry& e : ledger.entries) {
        rows.push_back({std::to_string(e.index), format_number(e.input_signal),
                        format_number(e.input_noise), format_number(e.input_snr()),
                        format_number(e.output_signal), format_number(e.output_noise),
                        format_number(e.output_snr())});
    }
    return render_table(header, rows) + "\n" + report_table(report);
}

std::string emit_sweep(const SweepResult& result, ReportFormat format) {
    if (format == ReportFormat::csv) {
        Row header = {"value"};
        header.insert(header.end(), kReportHeader.begin(), kReportHeader.end());
        std::string text = join_csv(header);
        for (const SweepPoint& point : result.points)
            text += report_csv_rows(point.report, {format_number(point.value)});
        return text;
    }
    std::string text;
    for (std::size_t i = 0; i < result.points.size(); ++i) {
        if (i > 0) text += "\n";
        text += result.target + " = " + format_number(result.points[i].value) + "\n";
        text += report_table(result.points[i].report);
    }
    return text;
}

std::string emit_simulation(const SimulationResult& result, ReportFormat format) {
    const std::size_t stages = result.empirical_stage_factors.size();
    if (format == ReportFormat::csv) {
        Row header = {"interface",       "analytic_noise",   "estimated_noise",
                      "noise_std_error", "analytic_factor",  "estimated_factor",
                      "factor_std_error"};
        std::string text = join_csv(header);
        for (const InterfaceEstimate& estimate : result.interfaces) {
            const std::size_t i = estimate.interface_index;
            Row cells = {std::to_string(i), format_number(estimate.analytic_noise),
                         format_number(estimate.estimated_noise),
                         format_number(estimate.std_error), "", "", ""};
            if (i >= 1 && i <= stages) {
                cells[4] = format_number(result.analytic_stage_factors[i - 1]);
                cells[5] = format_number(result.empirical_stage_factors[i - 1]);
                cells[6] = format_number(result.stage_factor_std_errors[i - 1]);
            }
            text += join_csv(cells);
        }
        Row totals = {"total", "", "", "",
                      format_number(result.analytic_total_factor),
                      format_number(result.empirical_total_factor),
                      format_number(result.total_factor_std_error)};
        text += join_csv(totals);
        return text;
    }

    Row header = {"interface", "analytic_noise", "estimated_noise", "std_error",
                  "analytic_factor", "estimated_factor", "factor_std_error"};
    std::vector<Row> rows;
    for (const InterfaceEstimate& estimate : result.interfaces) {
        const std::size_t i = estimate.interface_index;
        Row cells = {std::to_string(i), format_number(estimate.analytic_noise),
                     format_number(estimate.estimated_noise), format_number(estimate.std_error),
                     "", "", ""};
        if (i >= 1 && i <= stages) {
            cells[4] = format_number(result.analytic_stage_factors[i - 1]);
            cells[5] = format_number(result.empirical_stage_factors[i - 1]);
            cells[6] = format_number(result.stage_factor_std_errors[i - 1]);
        }
        rows.push_back(std::move(cells));
    }
    std::string text = render_table(header, rows);
    text += "\n";
    const double deviation =
        std::fabs(result.empirical_total_factor - result.analytic_total_factor);
    const double band = 4.0 * result.total_factor_std_error;
    text += render_pairs({
        {"samples", std::to_string(result.sample_count)},
        {"seed", std::to_string(result.seed)},
        {"total factor (analytic)", format_number(result.analytic_total_factor)},
        {"total factor (estimated)", format_number(result.empirical_total_factor)},
        {"total factor std error", format_number(result.total_factor_std_error)},
        {"|estimated - analytic|", format_number(deviation)},
        {"4*se acceptance band", "[" + format_number(result.empirical_total_factor - band) +
                                     ", " + format_number(result.empirical_total_factor + band) +
                                     "]"},
    });
    return text;
}

}  // namespace cascade_noise
