#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cascade_noise/chain.hpp"
#include "cascade_noise/chain_io.hpp"
#include "cascade_noise/errors.hpp"
#include "cascade_noise/monte_carlo.hpp"
#include "cascade_noise/noise_factors.hpp"
#include "cascade_noise/numeric.hpp"
#include "cascade_noise/propagation.hpp"
#include "cascade_noise/report.hpp"
#include "cascade_noise/units.hpp"

namespace py = pybind11;

using namespace cascade_noise;

PYBIND11_MODULE(_core, m) {
    m.doc() = "Cascade noise analysis: signal/noise propagation through n-stage chains, "
              "Friis vs corrected (input-referred) noise factors, and a Monte Carlo "
              "cross-check of both.";

    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<ValidationError>(m, "ValidationError", PyExc_ValueError);

    // --- unit conversions ---------------------------------------------------
    m.def("db_to_linear", &db_to_linear, py::arg("db"), "10^(db/10)");
    m.def("linear_to_db", &linear_to_db, py::arg("ratio"), "10*log10(ratio), ratio > 0");
    m.def("factor_to_figure_db", &factor_to_figure_db, py::arg("factor"),
          "Noise figure in dB of a factor >= 1");
    m.def("figure_db_to_factor", &figure_db_to_factor, py::arg("figure_db"),
          "Linear noise factor of a figure >= 0 dB");
    m.def("excess_to_figure_db", &excess_to_figure_db, py::arg("excess"),
          "10*log10(1 + excess), exact for tiny excess");
    m.def("figure_db_to_excess", &figure_db_to_excess, py::arg("figure_db"),
          "10^(figure/10) - 1, exact for tiny figures");
    m.def("relative_difference", &relative_difference, py::arg("a"), py::arg("b"),
          "|a - b| / max(|a|, |b|, 1)");

    // --- chain model ----------------------------------------------------------
    py::class_<SourceSpec>(m, "SourceSpec")
        .def(py::init<>())
        .def(py::init([](double signal_power, double noise_power) {
                 return SourceSpec{signal_power, noise_power};
             }),
             py::arg("signal_power"), py::arg("noise_power"))
        .def_readwrite("signal_power", &SourceSpec::signal_power)
        .def_readwrite("noise_power", &SourceSpec::noise_power);

    py::class_<StageSpec>(m, "StageSpec")
        .def(py::init<>())
        .def(py::init([](double gain, double added_noise) {
                 return StageSpec{gain, added_noise};
             }),
             py::arg("gain"), py::arg("added_noise"))
        .def_readwrite("gain", &StageSpec::gain)
        .def_readwrite("added_noise", &StageSpec::added_noise);

    py::class_<CascadeChain>(m, "CascadeChain")
        .def(py::init<>())
        .def(py::init([](const SourceSpec& source, const std::vector<StageSpec>& stages) {
                 return CascadeChain{source, stages};
             }),
             py::arg("source"), py::arg("stages"))
        .def_readwrite("source", &CascadeChain::source)
        .def_readwrite("stages", &CascadeChain::stages)
        .def("stage_count", &CascadeChain::stage_count);

    py::class_<Violation>(m, "Violation")
        .def_readonly("stage", &Violation::stage)
        .def_readonly("field", &Violation::field)
        .def_readonly("message", &Violation::message);

    py::class_<ValidationResult>(m, "ValidationResult")
        .def_readonly("violations", &ValidationResult::violations)
        .def("ok", &ValidationResult::ok);

    py::class_<RawStageSpec>(m, "RawStageSpec")
        .def(py::init<>())
        .def_readwrite("gain_linear", &RawStageSpec::gain_linear)
        .def_readwrite("gain_db", &RawStageSpec::gain_db)
        .def_readwrite("added_noise", &RawStageSpec::added_noise)
        .def_readwrite("friis_figure_db", &RawStageSpec::friis_figure_db)
        .def_readwrite("corrected_figure_db", &RawStageSpec::corrected_figure_db);

    m.def("validate_chain", &validate_chain, py::arg("chain"));
    m.def("ensure_valid", &ensure_valid, py::arg("chain"));
    m.def("added_noise_from_friis_factor", &added_noise_from_friis_factor, py::arg("factor"),
          py::arg("source_noise"), py::arg("gain"));
    m.def("added_noise_from_corrected_factor", &added_noise_from_corrected_factor,
          py::arg("factor"), py::arg("prefix"), py::arg("gain"));
    m.def("resolve_chain", &resolve_chain, py::arg("source"), py::arg("raw_stages"));

    // --- propagation ----------------------------------------------------------
    py::class_<StageLedgerEntry>(m, "StageLedgerEntry")
        .def_readonly("index", &StageLedgerEntry::index)
        .def_readonly("input_signal", &StageLedgerEntry::input_signal)
        .def_readonly("input_noise", &StageLedgerEntry::input_noise)
        .def_readonly("gain", &StageLedgerEntry::gain)
        .def_readonly("added_noise", &StageLedgerEntry::added_noise)
        .def_readonly("output_signal", &StageLedgerEntry::output_signal)
        .def_readonly("output_noise", &StageLedgerEntry::output_noise)
        .def("input_snr", &StageLedgerEntry::input_snr)
        .def("output_snr", &StageLedgerEntry::output_snr);

    py::class_<PropagationLedger>(m, "PropagationLedger")
        .def_readonly("source_signal", &PropagationLedger::source_signal)
        .def_readonly("source_noise", &PropagationLedger::source_noise)
        .def_readonly("entries", &PropagationLedger::entries)
        .def("source_snr", &PropagationLedger::source_snr)
        .def("output_signal", &PropagationLedger::output_signal)
        .def("output_noise", &PropagationLedger::output_noise)
        .def("output_snr", &PropagationLedger::output_snr);

    m.def("propagate", &propagate, py::arg("chain"));
    m.def("closed_form_output_noise", &closed_form_output_noise, py::arg("chain"));
    m.def("total_noise_factor_direct", &total_noise_factor_direct, py::arg("chain"));
    m.def("total_factor_from_snr", &total_factor_from_snr, py::arg("ledger"));
    m.def("stage_factor_from_snr", &stage_factor_from_snr, py::arg("ledger"), py::arg("stage"));

    // --- noise factors ----------------------------------------------------------
    m.def("friis_stage_factor", &friis_stage_factor, py::arg("chain"), py::arg("stage"));
    m.def("total_friis", &total_friis, py::arg("chain"));
    m.def("corrected_stage_factor", &corrected_stage_factor, py::arg("chain"), py::arg("stage"));
    m.def("corrected_stage_factor_recursive", &corrected_stage_factor_recursive, py::arg("chain"),
          py::arg("stage"));
    m.def("total_corrected_product", &total_corrected_product, py::arg("chain"));

    py::class_<StageFactorRow>(m, "StageFactorRow")
        .def_readonly("index", &StageFactorRow::index)
        .def_readonly("gain", &StageFactorRow::gain)
        .def_readonly("added_noise", &StageFactorRow::added_noise)
        .def_readonly("friis_factor", &StageFactorRow::friis_factor)
        .def_readonly("corrected_factor", &StageFactorRow::corrected_factor)
        .def_readonly("friis_figure_db", &StageFactorRow::friis_figure_db)
        .def_readonly("corrected_figure_db", &StageFactorRow::corrected_figure_db)
        .def_readonly("delta", &StageFactorRow::delta);

    py::class_<NoiseFactorReport>(m, "NoiseFactorReport")
        .def_readonly("rows", &NoiseFactorReport::rows)
        .def_readonly("total_direct", &NoiseFactorReport::total_direct)
        .def_readonly("total_friis", &NoiseFactorReport::total_friis)
        .def_readonly("total_corrected_product", &NoiseFactorReport::total_corrected_product)
        .def_readonly("max_total_discrepancy", &NoiseFactorReport::max_total_discrepancy);

    m.def("compare_factors", &compare_factors, py::arg("chain"));

    py::class_<SweepPoint>(m, "SweepPoint")
        .def_readonly("value", &SweepPoint::value)
        .def_readonly("report", &SweepPoint::report);

    py::class_<SweepResult>(m, "SweepResult")
        .def_readonly("target", &SweepResult::target)
        .def_readonly("points", &SweepResult::points);

    m.def("sweep", &sweep, py::arg("chain"), py::arg("target_path"), py::arg("values"));

    // --- Monte Carlo ----------------------------------------------------------
    py::class_<SimulationConfig>(m, "SimulationConfig")
        .def(py::init<>())
        .def_readwrite("sample_count", &SimulationConfig::sample_count)
        .def_readwrite("seed", &SimulationConfig::seed)
        .def_readwrite("block_size", &SimulationConfig::block_size)
        .def_readwrite("threads", &SimulationConfig::threads);

    py::class_<InterfaceEstimate>(m, "InterfaceEstimate")
        .def_readonly("interface_index", &InterfaceEstimate::interface_index)
        .def_readonly("analytic_noise", &InterfaceEstimate::analytic_noise)
        .def_readonly("estimated_noise", &InterfaceEstimate::estimated_noise)
        .def_readonly("std_error", &InterfaceEstimate::std_error);

    py::class_<SimulationResult>(m, "SimulationResult")
        .def_readonly("interfaces", &SimulationResult::interfaces)
        .def_readonly("empirical_stage_factors", &SimulationResult::empirical_stage_factors)
        .def_readonly("stage_factor_std_errors", &SimulationResult::stage_factor_std_errors)
        .def_readonly("analytic_stage_factors", &SimulationResult::analytic_stage_factors)
        .def_readonly("empirical_total_factor", &SimulationResult::empirical_total_factor)
        .def_readonly("total_factor_std_error", &SimulationResult::total_factor_std_error)
        .def_readonly("analytic_total_factor", &SimulationResult::analytic_total_factor)
        .def_readonly("sample_count", &SimulationResult::sample_count)
        .def_readonly("seed", &SimulationResult::seed);

    m.def("simulate_chain",
          py::overload_cast<const CascadeChain&, const SimulationConfig&>(&simulate_chain),
          py::arg("chain"), py::arg("config"), py::call_guard<py::gil_scoped_release>());
    m.def("simulate_chain", py::overload_cast<const CascadeChain&>(&simulate_chain),
          py::arg("chain"), py::call_guard<py::gil_scoped_release>());
    m.def("empirical_stage_factors", &empirical_stage_factors, py::arg("result"),
          py::arg("chain"));

    // --- documents and reports ---------------------------------------------------
    py::class_<ChainDocument>(m, "ChainDocument")
        .def(py::init<>())
        .def_readwrite("source", &ChainDocument::source)
        .def_readwrite("stages", &ChainDocument::stages);

    m.def("parse_chain_document", &parse_chain_document, py::arg("text"));
    m.def("load_chain_document", &load_chain_document, py::arg("path"));
    m.def("chain_from_document", &chain_from_document, py::arg("document"));
    m.def("emit_chain_document", &emit_chain_document, py::arg("chain"));

    py::enum_<ReportFormat>(m, "ReportFormat")
        .value("table", ReportFormat::table)
        .value("csv", ReportFormat::csv);

    m.def("format_number", &format_number, py::arg("value"),
          "Shortest decimal string that reads back to the same double");
    m.def("emit_report", &emit_report, py::arg("report"), py::arg("format"));
    m.def("emit_analysis", &emit_analysis, py::arg("ledger"), py::arg("report"),
          py::arg("format"));
    m.def("emit_sweep", &emit_sweep, py::arg("result"), py::arg("format"));
    m.def("emit_simulation", &emit_simulation, py::arg("result"), py::arg("format"));
}
