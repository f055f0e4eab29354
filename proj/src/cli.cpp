#include "cascade_noise/cli.hpp"

#include <cstddef>
#include <fstream>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "cascade_noise/chain_io.hpp"
#include "cascade_noise/errors.hpp"
#include "cascade_noise/monte_carlo.hpp"
#include "cascade_noise/noise_factors.hpp"
#include "cascade_noise/propagation.hpp"
#include "cascade_noise/report.hpp"

namespace cascade_noise {

namespace {

ReportFormat parse_format(const std::string& name) {
    return name == "csv" ? ReportFormat::csv : ReportFormat::table;
}

// k points from `from` to `to` inclusive; endpoints land exactly.
std::vector<double> linear_spacing(double from, double to, std::size_t steps) {
    if (steps == 0) throw std::invalid_argument("steps must be >= 1");
    if (steps == 1) {
        if (from != to)
            throw std::invalid_argument("steps must be >= 2 when the sweep endpoints differ");
        return {from};
    }
    std::vector<double> values;
    values.reserve(steps);
    for (std::size_t i = 0; i < steps; ++i) {
        const double t = static_cast<double>(i) / static_cast<double>(steps - 1);
        values.push_back(from * (1.0 - t) + to * t);
    }
    return values;
}

// Diagnostics go to `err`; report text goes to `out` or the --output file.
int write_output(const std::string& text, const std::string& output_path, std::ostream& out,
                 std::ostream& err) {
    if (output_path.empty()) {
        out << text;
        return 0;
    }
    std::ofstream file(output_path, std::ios::binary);
    if (!file) {
        err << "error: cannot open output file \"" << output_path << "\"\n";
        return 2;
    }
    file << text;
    file.flush();
    if (!file.good()) {
        err << "error: cannot write output file \"" << output_path << "\"\n";
        return 1;
    }
    return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Cascade noise analysis: propagate signal and noise powers through an n-stage\n"
                 "chain and compare Friis-style and input-referred (corrected) noise factors."};
    app.name("cascade-noise");
    app.require_subcommand(1);

    std::string input_path;
    std::string output_path;
    std::string analyze_format = "table";
    std::string compare_format = "table";
    std::string sweep_format = "csv";
    std::string simulate_format = "table";

    auto add_common = [&](CLI::App* cmd, std::string& format) {
        cmd->add_option("file", input_path, "chain description file")->required();
        cmd->add_option("--format", format, "output format")
            ->capture_default_str()
            ->check(CLI::IsMember({"table", "csv"}));
        cmd->add_option("--output", output_path, "write the report to this file instead of stdout");
    };

    CLI::App* analyze =
        app.add_subcommand("analyze", "propagation ledger plus the factor comparison");
    add_common(analyze, analyze_format);

    CLI::App* compare =
        app.add_subcommand("compare", "side-by-side Friis vs corrected stage factors and totals");
    add_common(compare, compare_format);

    CLI::App* sweep_cmd =
        app.add_subcommand("sweep", "re-evaluate the comparison while sweeping one parameter");
    add_common(sweep_cmd, sweep_format);
    std::string target;
    double sweep_from = 0.0;
    double sweep_to = 0.0;
    std::size_t sweep_steps = 0;
    sweep_cmd->add_option("--target", target,
                          "parameter path: source.signal, source.noise, stage.<x>.gain, "
                          "stage.<x>.added_noise")
        ->required();
    sweep_cmd->add_option("--from", sweep_from, "first swept value")->required();
    sweep_cmd->add_option("--to", sweep_to, "last swept value")->required();
    sweep_cmd->add_option("--steps", sweep_steps, "number of evenly spaced points, inclusive")
        ->required();

    CLI::App* simulate =
        app.add_subcommand("simulate", "Monte Carlo estimate of interface noise powers");
    add_common(simulate, simulate_format);
    SimulationConfig config;
    simulate->add_option("--samples", config.sample_count, "draws per noise source")
        ->capture_default_str();
    simulate->add_option("--seed", config.seed, "random seed")->capture_default_str();
    simulate->add_option("--threads", config.threads, "worker threads (0 = hardware concurrency)")
        ->capture_default_str();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        const CascadeChain chain = chain_from_document(load_chain_document(input_path));
        std::string text;
        if (analyze->parsed()) {
            text = emit_analysis(propagate(chain), compare_factors(chain),
                                 parse_format(analyze_format));
        } else if (compare->parsed()) {
            text = emit_report(compare_factors(chain), parse_format(compare_format));
        } else if (sweep_cmd->parsed()) {
            text = emit_sweep(sweep(chain, target, linear_spacing(sweep_from, sweep_to, sweep_steps)),
                              parse_format(sweep_format));
        } else {
            text = emit_simulation(simulate_chain(chain, config), parse_format(simulate_format));
        }
        return write_output(text, output_path, out, err);
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const ValidationError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace cascade_noise
