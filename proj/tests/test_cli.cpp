#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "hypershape/cli.hpp"
#include "hypershape/csv.hpp"
#include "hypershape/rng.hpp"

using namespace hypershape;
namespace fs = std::filesystem;

namespace {

const fs::path kDataDir{HYPERSHAPE_DATA_DIR};

fs::path fresh_dir(const std::string& tag) {
    const fs::path dir = fs::temp_directory_path() / ("hypershape_test_" + tag);
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
}

std::string slurp(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

int run_binary(const std::string& args) {
    const std::string command = std::string(HYPERSHAPE_CLI_BIN) + " " + args;
    const int status = std::system(command.c_str());
    REQUIRE(status != -1);
    return WEXITSTATUS(status);
}

}  // namespace

TEST_CASE("format_double round-trips random doubles") {
    Rng rng(8);
    for (int trial = 0; trial < 1000; ++trial) {
        const double value = (rng.uniform01() - 0.5) * std::pow(10.0, rng.uniform_index(8));
        const std::string text = format_double(value);
        CHECK(std::stod(text) == value);
    }
}

TEST_CASE("csv round-trip is byte identical") {
    const auto dir = fresh_dir("csv");
    CsvTable table;
    table.header = {"a", "b"};
    Rng rng(3);
    for (int row = 0; row < 50; ++row) {
        table.rows.push_back({format_double(rng.normal()), std::to_string(row)});
    }
    write_csv(dir / "one.csv", table);
    const CsvTable parsed = read_csv(dir / "one.csv");
    write_csv(dir / "two.csv", parsed);
    CHECK(slurp(dir / "one.csv") == slurp(dir / "two.csv"));
}

TEST_CASE("csv errors carry location") {
    const auto dir = fresh_dir("csv_err");
    std::ofstream(dir / "bad.csv") << "x,y\n1.0,oops\n";
    const CsvTable table = read_csv(dir / "bad.csv");
    CHECK_THROWS_WITH_AS(parse_double_cell(table.rows[0][1], 2, 2, "bad.csv"),
                         doctest::Contains("row 2, column 2"), CsvError);
}

TEST_CASE("parse helpers") {
    CHECK(cli::parse_int_range("4..6") == std::vector<int>{4, 5, 6});
    CHECK(cli::parse_int_range("9") == std::vector<int>{9});
    CHECK_THROWS_AS(cli::parse_int_range("6..4"), EmptyInputError);
    CHECK_THROWS_AS(cli::parse_int_range("abc"), EmptyInputError);

    const auto ranges = cli::parse_ranges("0:1,-2:3.5");
    REQUIRE(ranges.size() == 2);
    CHECK(ranges[1].lo == -2.0);
    CHECK(ranges[1].hi == 3.5);
    CHECK_THROWS_AS(cli::parse_ranges("0-1"), EmptyInputError);
}

TEST_CASE("subset_rows filters and validates species") {
    const std::vector<std::string> species{"setosa", "versicolor", "virginica", "Iris-setosa"};
    CHECK(cli::subset_rows(species, "all") == std::vector<std::size_t>{0, 1, 2, 3});
    CHECK(cli::subset_rows(species, "setosa") == std::vector<std::size_t>{0, 3});
    CHECK(cli::subset_rows(species, "notsetosa") == std::vector<std::size_t>{1, 2});
    CHECK(cli::subset_rows(species, "not_setosa") == std::vector<std::size_t>{1, 2});
    CHECK_THROWS_AS(cli::subset_rows(species, "plastic"), CsvError);
    CHECK_THROWS_AS(cli::subset_rows({"setosa", "rosa"}, "all"), CsvError);
}

TEST_CASE("run_analytic prints both variants") {
    cli::AnalyticOptions options;
    options.shape = "orthoplex";
    options.dims = 3;
    std::ostringstream out;
    CHECK(cli::run_analytic(options, out) == 0);
    CHECK(out.str().find("sp_paper 0.3183098861837907") != std::string::npos);
    CHECK(out.str().find("sp_geometric 0.318309886183790") != std::string::npos);

    options.shape = "ball";
    options.dims = 9;
    std::ostringstream ball_out;
    CHECK(cli::run_analytic(options, ball_out) == 0);
    CHECK(ball_out.str().find("sphericity 1\n") != std::string::npos);

    options.shape = "cube";
    options.dims = 2;
    options.variant = "geometric";
    std::ostringstream cube_out;
    CHECK(cli::run_analytic(options, cube_out) == 0);
    CHECK(cube_out.str().find("sp 0.6366197723675813 (geometric)") != std::string::npos);
    CHECK(cube_out.str().find("note") != std::string::npos);  // discrepancy surfaced

    options.variant = "sideways";
    std::ostringstream bad_out;
    CHECK_THROWS_AS(cli::run_analytic(options, bad_out), EmptyInputError);
}

TEST_CASE("run_metrics with an explicit column selection") {
    const auto dir = fresh_dir("metrics_columns");
    std::ofstream(dir / "mixed.csv") << "id,x,y,label\n7,0,0,a\n8,1,1,b\n";

    cli::MetricsOptions options;
    options.input = dir / "mixed.csv";
    options.bins = 2;
    options.columns = {"x", "y"};
    std::ostringstream out;
    CHECK(cli::run_metrics(options, out) == 0);
    CHECK(out.str().find("\n2,2,2,2,2,") != std::string::npos);

    options.columns = {"x", "missing"};
    std::ostringstream bad_out;
    CHECK_THROWS_AS(cli::run_metrics(options, bad_out), CsvError);
}

TEST_CASE("run_metrics on a toy file") {
    const auto dir = fresh_dir("metrics");
    std::ofstream(dir / "toy.csv") << "x,y\n0,0\n1,1\n";

    cli::MetricsOptions options;
    options.input = dir / "toy.csv";
    options.bins = 2;
    options.out_dir = dir / "out";
    std::ostringstream out;
    CHECK(cli::run_metrics(options, out) == 0);

    // n=2, bins=2, V=2, r=2, S=2, degenerate=0, erosion_empty=1
    CHECK(out.str().find("\n2,2,2,2,2,") != std::string::npos);
    CHECK(fs::exists(dir / "out" / "metrics.csv"));
    CHECK(fs::exists(dir / "out" / "manifest.json"));

    const auto manifest = nlohmann::json::parse(slurp(dir / "out" / "manifest.json"));
    CHECK(manifest["command"] == "metrics");
    CHECK(manifest["rng_algorithm"] == std::string(kRngAlgorithm));
}

TEST_CASE("run_metrics reproduces the quantized iris sphericity") {
    cli::MetricsOptions options;
    options.input = kDataDir / "iris.csv";
    options.bins = 6;
    options.subset = "all";
    std::ostringstream out;
    CHECK(cli::run_metrics(options, out) == 0);
    // 4-D, erosion empties the image, r = 6: sphericity = 4/6 = 0.667.
    CHECK(out.str().find("0.6666666666666666") != std::string::npos);

    options.bins = 4;
    options.subset = "setosa";
    std::ostringstream setosa_out;
    CHECK(cli::run_metrics(options, setosa_out) == 0);
    // sphericity 1, degenerate_radius 0, erosion_empty 1
    CHECK(setosa_out.str().find(",1,0,1\n") != std::string::npos);
}

TEST_CASE("run_simulate_ball writes deterministic tables and figures") {
    const auto dir_a = fresh_dir("ball_a");
    cli::SimulateBallOptions options;
    options.dims = {2};
    options.bins = {4, 5};
    options.samples = 3;
    options.points = 2000;
    options.seed = 7;
    options.out_dir = dir_a;
    std::ostringstream out;
    CHECK(cli::run_simulate_ball(options, out) == 0);

    const CsvTable raw = read_csv(dir_a / "ball_raw.csv");
    CHECK(raw.rows.size() == 6);  // 1 dim x 2 bins x 3 samples
    const CsvTable summary = read_csv(dir_a / "ball_summary.csv");
    CHECK(summary.rows.size() == 2);
    for (const char* name :
         {"ball_sphericity.svg", "ball_sp.svg", "ball_log_sp.svg", "manifest.json"}) {
        CHECK(fs::exists(dir_a / name));
    }
    CHECK(slurp(dir_a / "ball_sp.svg").substr(0, 4) == "<svg");

    // Same seed, fresh directory: identical bytes for data and figures.
    const auto dir_b = fresh_dir("ball_b");
    options.out_dir = dir_b;
    std::ostringstream out_b;
    CHECK(cli::run_simulate_ball(options, out_b) == 0);
    CHECK(slurp(dir_a / "ball_raw.csv") == slurp(dir_b / "ball_raw.csv"));
    CHECK(slurp(dir_a / "ball_summary.csv") == slurp(dir_b / "ball_summary.csv"));
    CHECK(slurp(dir_a / "ball_sp.svg") == slurp(dir_b / "ball_sp.svg"));

    // Summaries round-trip byte for byte.
    write_csv(dir_b / "rewritten.csv", summary);
    CHECK(slurp(dir_a / "ball_summary.csv") == slurp(dir_b / "rewritten.csv"));
}

TEST_CASE("run_iris produces the table and figures") {
    const auto dir = fresh_dir("iris_cmd");
    cli::IrisOptions options;
    options.input = kDataDir / "iris.csv";
    options.subsets = {"setosa", "all"};
    options.bins = {4, 5};
    options.replicates = 60;
    options.seed = 3;
    options.out_dir = dir;
    std::ostringstream out;
    CHECK(cli::run_iris(options, out) == 0);

    const CsvTable table = read_csv(dir / "iris_table.csv");
    CHECK(table.rows.size() == 4);  // 2 subsets x 2 bins
    CHECK(table.header.front() == "subset");
    for (const char* name : {"iris_log_sp_intervals.svg", "iris_log_sphericity_intervals.svg",
                             "iris_sp_box.svg", "iris_sphericity_box.svg", "manifest.json"}) {
        CHECK(fs::exists(dir / name));
    }
}

TEST_CASE("binary exit codes") {
    CHECK(run_binary("analytic --shape ball --dims 3 > /dev/null 2>&1") == 0);
    CHECK(run_binary("analytic --shape pyramid > /dev/null 2>&1") == 3);
    CHECK(run_binary("analytic --shape platonic:tetrahedron --dims 4 > /dev/null 2>&1") == 3);
    CHECK(run_binary("analytic > /dev/null 2>&1") == 2);             // missing --shape
    CHECK(run_binary("nonsense-command > /dev/null 2>&1") == 2);
    CHECK(run_binary("--help > /dev/null 2>&1") == 0);
}

TEST_CASE("binary rejects malformed data with located message") {
    const auto dir = fresh_dir("cli_bad_data");
    std::ofstream(dir / "bad.csv") << "x,y\n1.0,2.0\n1.5,oops\n";
    const std::string err_file = (dir / "stderr.txt").string();
    const int code = run_binary("metrics --input " + (dir / "bad.csv").string() +
                                " --bins 4 > /dev/null 2> " + err_file);
    CHECK(code == 2);
    const std::string message = slurp(err_file);
    CHECK(message.find("row 3") != std::string::npos);
    CHECK(message.find("column 2") != std::string::npos);
}

TEST_CASE("binary maps degenerate axes to exit 4") {
    const auto dir = fresh_dir("cli_degenerate");
    std::ofstream(dir / "flat.csv") << "x,y\n1.0,2.0\n1.0,3.0\n";  // x axis has zero width
    const int code =
        run_binary("metrics --input " + (dir / "flat.csv").string() + " --bins 4 > /dev/null 2>&1");
    CHECK(code == 4);
}

TEST_CASE("cell budget guard maps to exit 4 and env override works") {
    // 6 columns at 14 bins = 7.5M cells; a 1M budget rejects it.
    const auto dir = fresh_dir("cli_budget");
    std::ofstream csv(dir / "wide.csv");
    csv << "a,b,c,d,e,f\n";
    csv << "0,0,0,0,0,0\n1,2,3,4,5,6\n0.5,1,2,2,1,3\n";
    csv.close();
    const std::string tail =
        " metrics --input " + (dir / "wide.csv").string() + " --bins 14 > /dev/null 2>&1";

    const int ok_status = std::system((std::string(HYPERSHAPE_CLI_BIN) + tail).c_str());
    REQUIRE(ok_status != -1);
    CHECK(WEXITSTATUS(ok_status) == 0);

    const int cut_status = std::system(
        ("HYPERSHAPE_CELL_BUDGET=1000000 " + std::string(HYPERSHAPE_CLI_BIN) + tail).c_str());
    REQUIRE(cut_status != -1);
    CHECK(WEXITSTATUS(cut_status) == 4);
}
