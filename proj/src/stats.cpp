#include "hypershape/stats.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "hypershape/metrics.hpp"
#include "hypershape/parallel.hpp"
#include "hypershape/rng.hpp"

namespace hypershape {

double quantile(std::span<const double> values, double p) {
    if (values.empty()) throw EmptyInputError("quantile of an empty list");
    std::vector<double> sorted(values.begin(), values.end());
    std::sort(sorted.begin(), sorted.end());
    const double h = p * (static_cast<double>(sorted.size()) - 1.0);
    const std::size_t lo = static_cast<std::size_t>(std::floor(h));
    const std::size_t hi = std::min(lo + 1, sorted.size() - 1);
    const double frac = h - static_cast<double>(lo);
    return sorted[lo] + frac * (sorted[hi] - sorted[lo]);
}

QuantileSummary summarize(std::span<const double> values) {
    if (values.empty()) throw EmptyInputError("summary of an empty list");
    for (double v : values) {
        if (!std::isfinite(v)) throw EmptyInputError("summary input must be finite");
    }
    std::vector<double> sorted(values.begin(), values.end());
    std::sort(sorted.begin(), sorted.end());

    auto type7 = [&sorted](double p) {
        const double h = p * (static_cast<double>(sorted.size()) - 1.0);
        const std::size_t lo = static_cast<std::size_t>(std::floor(h));
        const std::size_t hi = std::min(lo + 1, sorted.size() - 1);
        const double frac = h - static_cast<double>(lo);
        return sorted[lo] + frac * (sorted[hi] - sorted[lo]);
    };

    QuantileSummary s;
    s.count = static_cast<long long>(sorted.size());
    s.mean = std::accumulate(sorted.begin(), sorted.end(), 0.0) / static_cast<double>(sorted.size());
    s.q025 = type7(0.025);
    s.median = type7(0.5);
    s.q975 = type7(0.975);
    return s;
}

BootstrapResult bootstrap_metric(const PointCloud& points, const BinningSpec& spec,
                                 int replicates, std::uint64_t seed,
                                 std::size_t cell_budget, unsigned threads) {
    if (replicates < 1) throw EmptyInputError("bootstrap needs replicates >= 1");

    const std::size_t m = points.rows();
    BootstrapResult result;
    result.sp_values.resize(static_cast<std::size_t>(replicates));
    result.sphericity_values.resize(static_cast<std::size_t>(replicates));

    parallel_for(static_cast<std::size_t>(replicates), threads, [&](std::size_t rep) {
        Rng rng(derive_seed(seed, rep));
        std::vector<std::size_t> rows(m);
        for (std::size_t& row : rows) row = rng.uniform_index(m);
        const ShapeMetrics metrics = analyze(points.select_rows(rows), spec, cell_budget);
        result.sp_values[rep] = metrics.sp;
        result.sphericity_values[rep] = metrics.sphericity;
    });

    result.sp = summarize(result.sp_values);
    result.sphericity = summarize(result.sphericity_values);
    return result;
}

}  // namespace hypershape
