#pragma once

#include <cstdint>
#include <vector>

#include "hypershape/binning.hpp"

namespace hypershape {

struct BallSampleConfig {
    int dim = 2;
    long long points = 1;
    std::uint64_t seed = 0;
};

// Uniform samples inside the closed unit n-ball: draw an (n+2)-dimensional
// standard normal, normalize it, keep the first n coordinates. No rejection
// step, so the cost per point is dimension-independent.
PointCloud sample_ball(const BallSampleConfig& config);

struct BallExperimentRow {
    int dim = 0;
    int bins = 0;
    int sample = 0;
    double sp = 0.0;
    double sphericity = 0.0;
};

struct BallExperimentConfig {
    std::vector<int> dims;
    std::vector<int> bins;
    int samples_per_cell = 0;
    long long points = 0;
    std::uint64_t seed = 0;
    std::size_t cell_budget = kDefaultCellBudget;
    unsigned threads = 0;  // 0 = hardware concurrency
};

// The simulated-ball sweep: for every (dim, bins) cell, generate
// samples_per_cell independent ball clouds and record both metrics.
// Each cell draw is seeded from (seed, dim, bins, sample), so the result
// table is identical regardless of thread count, ordered by
// (dim, bins, sample).
std::vector<BallExperimentRow> run_ball_experiment(const BallExperimentConfig& config);

}  // namespace hypershape
