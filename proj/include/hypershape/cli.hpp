#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "hypershape/binning.hpp"

namespace hypershape::cli {

inline constexpr const char* kVersion = "0.1.0";

inline constexpr const char* kBinConvention =
    "equal-width; left-closed/right-open, last bin closed; "
    "default ranges = per-axis data min/max";

// Exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitUnsupportedShape = 3;
inline constexpr int kExitResource = 4;

struct AnalyticOptions {
    std::string shape;           // ball|cube|simplex|orthoplex|platonic:<name>
    int dims = 3;
    std::string variant = "paper";
    long long oracle_samples = 0;  // 0 = skip the Monte Carlo check
    std::uint64_t seed = 0;
};

struct MetricsOptions {
    std::filesystem::path input;
    int bins = 0;
    std::vector<std::string> columns;  // empty = all numeric feature columns
    std::string subset;                // empty = no species filtering
    std::vector<AxisRange> ranges;     // empty = data min/max
    std::filesystem::path out_dir;     // empty = stdout only
    std::vector<std::string> argv;
    std::size_t cell_budget = kDefaultCellBudget;
};

struct SimulateBallOptions {
    std::vector<int> dims;
    std::vector<int> bins;
    int samples = 100;
    long long points = 100000;
    std::uint64_t seed = 0;
    std::filesystem::path out_dir;
    std::vector<std::string> argv;
    std::size_t cell_budget = kDefaultCellBudget;
    unsigned threads = 0;
};

struct IrisOptions {
    std::filesystem::path input;
    std::vector<std::string> subsets;  // default: setosa, versicolor, notsetosa, all
    std::vector<int> bins;
    int replicates = 1000;
    std::uint64_t seed = 0;
    std::filesystem::path out_dir;
    std::vector<std::string> argv;
    std::size_t cell_budget = kDefaultCellBudget;
    unsigned threads = 0;
};

// Each command returns a process exit code and throws hypershape errors,
// which main() maps onto the exit codes above.
int run_analytic(const AnalyticOptions& options, std::ostream& out);
int run_metrics(const MetricsOptions& options, std::ostream& out);
int run_simulate_ball(const SimulateBallOptions& options, std::ostream& out);
int run_iris(const IrisOptions& options, std::ostream& out);

// Rows of `table` whose species matches the subset; `subset` is one of
// all|setosa|versicolor|notsetosa. Throws CsvError for unknown species
// values in the data or an unknown subset name.
std::vector<std::size_t> subset_rows(const std::vector<std::string>& species,
                                     const std::string& subset);

// "A..B" or a single integer -> list.
std::vector<int> parse_int_range(const std::string& text);

// "lo:hi,lo:hi,..." -> per-axis ranges.
std::vector<AxisRange> parse_ranges(const std::string& text);

}  // namespace hypershape::cli
