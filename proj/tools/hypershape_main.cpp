#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hypershape/cli.hpp"
#include "hypershape/errors.hpp"

namespace {

using namespace hypershape;

std::size_t cell_budget_from_env() {
    if (const char* env = std::getenv("HYPERSHAPE_CELL_BUDGET")) {
        try {
            const long long parsed = std::stoll(env);
            if (parsed > 0) return static_cast<std::size_t>(parsed);
        } catch (const std::exception&) {
            std::cerr << "warning: ignoring unparsable HYPERSHAPE_CELL_BUDGET='" << env << "'\n";
        }
    }
    return kDefaultCellBudget;
}

std::vector<std::string> collect_argv(int argc, char** argv) {
    return std::vector<std::string>(argv, argv + argc);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"n-dimensional shape metrics: SP and sphericity, analytic and from data"};
    app.require_subcommand(1);
    const std::size_t cell_budget = cell_budget_from_env();

    // analytic
    cli::AnalyticOptions analytic;
    auto* cmd_analytic = app.add_subcommand("analytic", "closed-form SP values for known shapes");
    cmd_analytic->add_option("--shape", analytic.shape,
                             "ball|cube|simplex|orthoplex|platonic:<solid>")
        ->required();
    cmd_analytic->add_option("--dims", analytic.dims, "dimension n (>= 2)");
    cmd_analytic->add_option("--variant", analytic.variant, "paper|geometric");
    cmd_analytic->add_option("--oracle", analytic.oracle_samples,
                             "also run the Monte Carlo oracle with this many samples");
    cmd_analytic->add_option("--seed", analytic.seed, "oracle RNG seed");

    // metrics
    cli::MetricsOptions metrics;
    std::string metrics_ranges;
    auto* cmd_metrics = app.add_subcommand("metrics", "shape metrics of one CSV dataset");
    cmd_metrics->add_option("--input", metrics.input, "input CSV with header row")->required();
    cmd_metrics->add_option("--bins", metrics.bins, "bins per axis")->required();
    cmd_metrics->add_option("--columns", metrics.columns, "feature columns (default: all)");
    cmd_metrics->add_option("--subset", metrics.subset,
                            "species filter: all|setosa|versicolor|notsetosa");
    cmd_metrics->add_option("--ranges", metrics_ranges, "per-axis lo:hi list, comma separated");
    cmd_metrics->add_option("--out", metrics.out_dir, "output directory (also prints to stdout)");

    // simulate-ball
    cli::SimulateBallOptions ball;
    std::string ball_dims = "2..5";
    std::string ball_bins = "4..14";
    auto* cmd_ball = app.add_subcommand("simulate-ball", "n-ball bin sweep experiment");
    cmd_ball->add_option("--dims", ball_dims, "dimension range A..B (default 2..5)");
    cmd_ball->add_option("--bins", ball_bins, "bin range A..B (default 4..14)");
    cmd_ball->add_option("--samples", ball.samples, "simulated balls per (dim, bins) cell");
    cmd_ball->add_option("--points", ball.points, "points per simulated ball");
    cmd_ball->add_option("--seed", ball.seed, "experiment seed");
    cmd_ball->add_option("--threads", ball.threads, "worker threads (0 = all cores)");
    cmd_ball->add_option("--out", ball.out_dir, "output directory")->required();

    // iris
    cli::IrisOptions iris;
    std::string iris_bins = "4..14";
    auto* cmd_iris = app.add_subcommand("iris", "bootstrap study over iris subsets");
    cmd_iris->add_option("--input", iris.input, "iris CSV (4 features + species)")->required();
    cmd_iris->add_option("--subsets", iris.subsets,
                         "subsets to run (default: setosa versicolor notsetosa all)");
    cmd_iris->add_option("--bins", iris_bins, "bin range A..B (default 4..14)");
    cmd_iris->add_option("--replicates", iris.replicates, "bootstrap replicates per cell");
    cmd_iris->add_option("--seed", iris.seed, "bootstrap seed");
    cmd_iris->add_option("--threads", iris.threads, "worker threads (0 = all cores)");
    cmd_iris->add_option("--out", iris.out_dir, "output directory")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);  // prints the help text or the parse error
        return e.get_exit_code() == 0 ? 0 : cli::kExitUsage;
    }

    try {
        if (*cmd_analytic) {
            return cli::run_analytic(analytic, std::cout);
        }
        if (*cmd_metrics) {
            if (!metrics_ranges.empty()) metrics.ranges = cli::parse_ranges(metrics_ranges);
            metrics.cell_budget = cell_budget;
            metrics.argv = collect_argv(argc, argv);
            return cli::run_metrics(metrics, std::cout);
        }
        if (*cmd_ball) {
            ball.dims = cli::parse_int_range(ball_dims);
            ball.bins = cli::parse_int_range(ball_bins);
            ball.cell_budget = cell_budget;
            ball.argv = collect_argv(argc, argv);
            return cli::run_simulate_ball(ball, std::cout);
        }
        if (*cmd_iris) {
            iris.bins = cli::parse_int_range(iris_bins);
            iris.cell_budget = cell_budget;
            iris.argv = collect_argv(argc, argv);
            return cli::run_iris(iris, std::cout);
        }
    } catch (const UnsupportedShapeError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return cli::kExitUnsupportedShape;
    } catch (const DegenerateAxisError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return cli::kExitResource;
    } catch (const DimensionTooLargeError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return cli::kExitResource;
    } catch (const CsvError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return cli::kExitUsage;
    } catch (const EmptyInputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return cli::kExitUsage;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
