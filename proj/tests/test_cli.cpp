#include "cascade_noise/cli.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#ifdef CASCADE_NOISE_TOOL_PATH
#include <sys/wait.h>
#endif

#include <gtest/gtest.h>

#include "cascade_noise/numeric.hpp"

namespace cascade_noise {
namespace {

struct CliRun {
    int exit_code = -1;
    std::string out;
    std::string err;
};

CliRun run(std::vector<std::string> args) {
    std::ostringstream out;
    std::ostringstream err;
    CliRun result;
    result.exit_code = run_cli(args, out, err);
    result.out = out.str();
    result.err = err.str();
    return result;
}

std::string fixture(const std::string& name) {
    return std::string(CASCADE_NOISE_FIXTURE_DIR) + "/" + name;
}

std::vector<std::string> split_lines(const std::string& text) {
    std::vector<std::string> lines;
    std::string line;
    std::istringstream stream(text);
    while (std::getline(stream, line)) lines.push_back(line);
    return lines;
}

std::vector<std::string> split_csv(const std::string& line) {
    std::vector<std::string> cells;
    std::string cell;
    for (char c : line) {
        if (c == ',') {
            cells.push_back(cell);
            cell.clear();
        } else {
            cell += c;
        }
    }
    cells.push_back(cell);
    return cells;
}

double cell_value(const std::vector<std::string>& cells, std::size_t index) {
    return std::stod(cells.at(index));
}

const char* const kCompareHeader =
    "stage,gain,added_noise,friis_factor,corrected_factor,friis_figure_db,"
    "corrected_figure_db,delta,total_direct,total_friis,total_corrected_product,"
    "max_total_discrepancy";

TEST(Cli, CompareCsvMatchesReferenceValues) {
    const CliRun result = run({"compare", fixture("e1.chain"), "--format", "csv"});
    ASSERT_EQ(result.exit_code, 0) << result.err;
    EXPECT_TRUE(result.err.empty()) << result.err;

    const std::vector<std::string> lines = split_lines(result.out);
    ASSERT_EQ(lines.size(), 4u) << result.out;
    EXPECT_EQ(lines[0], kCompareHeader);

    const std::vector<std::string> first = split_csv(lines[1]);
    ASSERT_EQ(first.size(), 12u);
    EXPECT_EQ(first[0], "1");
    EXPECT_LE(relative_difference(cell_value(first, 1), 10.0), 1e-12);
    EXPECT_LE(relative_difference(cell_value(first, 2), 5.0), 1e-12);
    EXPECT_LE(relative_difference(cell_value(first, 3), 1.5), 1e-12);
    EXPECT_LE(relative_difference(cell_value(first, 4), 1.5), 1e-12);
    EXPECT_EQ(first[7], "0");  // first-stage definitions coincide identically
    for (std::size_t i = 8; i < 12; ++i) EXPECT_TRUE(first[i].empty());

    const std::vector<std::string> second = split_csv(lines[2]);
    ASSERT_EQ(second.size(), 12u);
    EXPECT_EQ(second[0], "2");
    EXPECT_LE(relative_difference(cell_value(second, 3), 1.5), 1e-12);
    EXPECT_LE(relative_difference(cell_value(second, 4), 31.0 / 30.0), 1e-12);

    const std::vector<std::string> totals = split_csv(lines[3]);
    ASSERT_EQ(totals.size(), 12u);
    EXPECT_EQ(totals[0], "total");
    for (std::size_t i = 1; i < 8; ++i) EXPECT_TRUE(totals[i].empty());
    EXPECT_LE(relative_difference(cell_value(totals, 8), 1.55), 1e-12);
    EXPECT_LE(relative_difference(cell_value(totals, 9), 1.55), 1e-12);
    EXPECT_LE(relative_difference(cell_value(totals, 10), 1.55), 1e-12);
    EXPECT_LE(cell_value(totals, 11), 1e-9);

    EXPECT_EQ(result.out.find(' '), std::string::npos) << "CSV output must not be padded";
}

TEST(Cli, AnalyzeTableShowsLedgerAndTotals) {
    const CliRun result = run({"analyze", fixture("e1.chain")});
    ASSERT_EQ(result.exit_code, 0) << result.err;
    EXPECT_NE(result.out.find("source"), std::string::npos);
    EXPECT_NE(result.out.find("output_noise"), std::string::npos);
    EXPECT_NE(result.out.find("155"), std::string::npos);
    EXPECT_NE(result.out.find("total (direct snr ratio)"), std::string::npos);
    EXPECT_NE(result.out.find("1.55"), std::string::npos);
}

TEST(Cli, MissingInputFileFails) {
    const CliRun result = run({"analyze", "/nonexistent/chain.json"});
    EXPECT_EQ(result.exit_code, 2);
    EXPECT_TRUE(result.out.empty());
    EXPECT_NE(result.err.find("error:"), std::string::npos);
    EXPECT_NE(result.err.find("/nonexistent/chain.json"), std::string::npos);
}

TEST(Cli, MalformedFixtureNamesTheOffendingStage) {
    const CliRun result = run({"compare", fixture("bad_both_gain.chain")});
    EXPECT_EQ(result.exit_code, 2);
    EXPECT_TRUE(result.out.empty());
    EXPECT_NE(result.err.find("stage 1"), std::string::npos) << result.err;
    EXPECT_NE(result.err.find("exactly one"), std::string::npos) << result.err;
}

TEST(Cli, InvalidSourceFails) {
    const CliRun result = run({"compare", fixture("bad_source.chain")});
    EXPECT_EQ(result.exit_code, 2);
    EXPECT_NE(result.err.find("noise_power"), std::string::npos) << result.err;
}

TEST(Cli, UsageErrorsExitTwo) {
    EXPECT_EQ(run({}).exit_code, 2);
    EXPECT_EQ(run({"frobnicate", "x.chain"}).exit_code, 2);
    EXPECT_EQ(run({"compare", fixture("e1.chain"), "--bogus"}).exit_code, 2);
    EXPECT_EQ(run({"compare", fixture("e1.chain"), "--format", "yaml"}).exit_code, 2);
    EXPECT_EQ(run({"sweep", fixture("e1.chain"), "--target", "stage.1.gain"}).exit_code, 2);
    EXPECT_EQ(run({"compare"}).exit_code, 2);
}

TEST(Cli, HelpExitsZero) {
    const CliRun top = run({"--help"});
    EXPECT_EQ(top.exit_code, 0);
    EXPECT_TRUE(top.err.empty());
    EXPECT_NE(top.out.find("analyze"), std::string::npos);
    EXPECT_NE(top.out.find("simulate"), std::string::npos);

    const CliRun sub = run({"sweep", "--help"});
    EXPECT_EQ(sub.exit_code, 0);
    EXPECT_NE(sub.out.find("--target"), std::string::npos);
}

TEST(Cli, SweepCsvCoversTheRequestedGrid) {
    const CliRun result = run({"sweep", fixture("e1.chain"), "--target", "stage.2.added_noise",
                               "--from", "0", "--to", "10", "--steps", "3"});
    ASSERT_EQ(result.exit_code, 0) << result.err;

    const std::vector<std::string> lines = split_lines(result.out);
    ASSERT_EQ(lines.size(), 10u) << result.out;  // header + 3 points x (2 stages + totals)
    EXPECT_EQ(lines[0], std::string("value,") + kCompareHeader);

    // Second stage row of each point carries the swept corrected factor.
    const std::vector<double> swept_values = {0.0, 5.0, 10.0};
    const std::vector<double> corrected = {1.0, 31.0 / 30.0, 16.0 / 15.0};
    for (std::size_t point = 0; point < 3; ++point) {
        const std::vector<std::string> cells = split_csv(lines[1 + 3 * point + 1]);
        ASSERT_EQ(cells.size(), 13u);
        EXPECT_LE(relative_difference(cell_value(cells, 0), swept_values[point]), 1e-12);
        EXPECT_EQ(cells[1], "2");
        EXPECT_LE(relative_difference(cell_value(cells, 5), corrected[point]), 1e-12);
    }
}

TEST(Cli, SweepRejectsBadTargets) {
    const CliRun result = run({"sweep", fixture("e1.chain"), "--target", "stage.9.gain",
                               "--from", "1", "--to", "2", "--steps", "2"});
    EXPECT_EQ(result.exit_code, 2);
    EXPECT_NE(result.err.find("stage.9.gain"), std::string::npos) << result.err;
}

TEST(Cli, SweepRejectsValuesThatInvalidateTheChain) {
    const CliRun result = run({"sweep", fixture("e1.chain"), "--target", "stage.1.gain",
                               "--from", "0", "--to", "10", "--steps", "2"});
    EXPECT_EQ(result.exit_code, 2);
    EXPECT_NE(result.err.find("stage.1.gain"), std::string::npos) << result.err;
}

TEST(Cli, SimulateRejectsTinySampleCounts) {
    const CliRun result = run({"simulate", fixture("e1.chain"), "--samples", "999"});
    EXPECT_EQ(result.exit_code, 2);
    EXPECT_NE(result.err.find("sample_count"), std::string::npos) << result.err;
}

TEST(Cli, SimulateCsvIsDeterministic) {
    const std::vector<std::string> args = {"simulate", fixture("e2.chain"), "--samples", "20000",
                                           "--seed", "5", "--format", "csv"};
    const CliRun first = run(args);
    ASSERT_EQ(first.exit_code, 0) << first.err;
    const std::vector<std::string> lines = split_lines(first.out);
    ASSERT_EQ(lines.size(), 6u);  // header + interfaces 0..3 + totals
    EXPECT_EQ(lines[0],
              "interface,analytic_noise,estimated_noise,noise_std_error,"
              "analytic_factor,estimated_factor,factor_std_error");

    EXPECT_EQ(run(args).out, first.out);

    std::vector<std::string> threaded = args;
    threaded.insert(threaded.end(), {"--threads", "3"});
    EXPECT_EQ(run(threaded).out, first.out);
}

TEST(Cli, OutputFlagWritesTheReportToAFile) {
    const std::string path = ::testing::TempDir() + "/cascade_noise_cli_output.csv";
    std::remove(path.c_str());

    const CliRun direct = run({"compare", fixture("e1.chain"), "--format", "csv"});
    const CliRun redirected =
        run({"compare", fixture("e1.chain"), "--format", "csv", "--output", path});
    ASSERT_EQ(redirected.exit_code, 0) << redirected.err;
    EXPECT_TRUE(redirected.out.empty());

    std::ifstream file(path, std::ios::binary);
    ASSERT_TRUE(file.is_open());
    std::ostringstream content;
    content << file.rdbuf();
    EXPECT_EQ(content.str(), direct.out);
    std::remove(path.c_str());
}

TEST(Cli, UnwritableOutputPathFails) {
    const CliRun result = run({"compare", fixture("e1.chain"), "--output",
                               "/nonexistent-dir/report.txt"});
    EXPECT_EQ(result.exit_code, 2);
    EXPECT_NE(result.err.find("cannot open output file"), std::string::npos) << result.err;
}

#ifdef CASCADE_NOISE_TOOL_PATH
int run_tool(const std::string& arguments, const std::string& stdout_path) {
    const std::string command = std::string(CASCADE_NOISE_TOOL_PATH) + " " + arguments + " > " +
                                stdout_path + " 2> /dev/null";
    const int status = std::system(command.c_str());
    return WEXITSTATUS(status);
}

TEST(Cli, BinarySmokeTest) {
    const std::string stdout_path = ::testing::TempDir() + "/cascade_noise_tool_stdout.txt";

    ASSERT_EQ(run_tool("compare " + fixture("e1.chain") + " --format csv", stdout_path), 0);
    std::ifstream file(stdout_path);
    std::string first_line;
    ASSERT_TRUE(std::getline(file, first_line));
    EXPECT_EQ(first_line, kCompareHeader);

    EXPECT_EQ(run_tool("compare /nonexistent/chain.json", stdout_path), 2);
    EXPECT_EQ(run_tool("compare " + fixture("bad_both_gain.chain"), stdout_path), 2);
    std::remove(stdout_path.c_str());
}
#endif

}  // namespace
}  // namespace cascade_noise
