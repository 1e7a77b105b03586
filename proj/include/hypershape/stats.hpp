#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "hypershape/binning.hpp"

namespace hypershape {

struct QuantileSummary {
    double mean = 0.0;
    double q025 = 0.0;
    double median = 0.0;
    double q975 = 0.0;
    long long count = 0;
};

// Mean plus 2.5%/50%/97.5% empirical quantiles, interpolating linearly
// between order statistics (the type-7 convention).
QuantileSummary summarize(std::span<const double> values);

// Interpolated empirical quantile of an unsorted list, 0 <= p <= 1.
double quantile(std::span<const double> values, double p);

struct BootstrapResult {
    QuantileSummary sp;
    QuantileSummary sphericity;
    // Per-replicate values in replicate order; kept so callers can build
    // box summaries or log-scale intervals without rerunning.
    std::vector<double> sp_values;
    std::vector<double> sphericity_values;
};

// Percentile bootstrap of both shape metrics: each replicate resamples the
// rows of `points` with replacement and runs the full pipeline. Replicates
// that come out degenerate keep their flagged values. Replicate i draws
// from a subseed of (seed, i), so results are independent of thread count.
BootstrapResult bootstrap_metric(const PointCloud& points, const BinningSpec& spec,
                                 int replicates, std::uint64_t seed,
                                 std::size_t cell_budget = kDefaultCellBudget,
                                 unsigned threads = 0);

}  // namespace hypershape
