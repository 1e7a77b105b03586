#include "hypershape/sim.hpp"

#include <cmath>
#include <string>

#include "hypershape/metrics.hpp"
#include "hypershape/parallel.hpp"
#include "hypershape/rng.hpp"

namespace hypershape {

PointCloud sample_ball(const BallSampleConfig& config) {
    if (config.dim < 2) {
        throw DimensionTooLargeError("ball sampling needs dim >= 2, got " +
                                     std::to_string(config.dim));
    }
    if (config.points < 1) throw EmptyInputError("ball sampling needs at least one point");

    const int n = config.dim;
    Rng rng(config.seed);
    std::vector<double> values(static_cast<std::size_t>(config.points) * n);
    std::vector<double> draw(static_cast<std::size_t>(n) + 2);

    for (long long row = 0; row < config.points; ++row) {
        double norm_sq;
        do {
            norm_sq = 0.0;
            for (double& coord : draw) {
                coord = rng.normal();
                norm_sq += coord * coord;
            }
        } while (norm_sq == 0.0);
        const double inv_norm = 1.0 / std::sqrt(norm_sq);
        for (int axis = 0; axis < n; ++axis) {
            values[static_cast<std::size_t>(row) * n + axis] = draw[axis] * inv_norm;
        }
    }
    return PointCloud(static_cast<std::size_t>(config.points), static_cast<std::size_t>(n),
                      std::move(values));
}

std::vector<BallExperimentRow> run_ball_experiment(const BallExperimentConfig& config) {
    if (config.points < 1) throw EmptyInputError("experiment needs points >= 1");
    for (int k : config.bins) {
        if (k < 2) throw DegenerateAxisError("experiment needs bins >= 2");
    }

    struct Cell {
        int dim;
        int bins;
        int sample;
    };
    std::vector<Cell> cells;
    for (int dim : config.dims) {
        for (int bins : config.bins) {
            // Surface the budget violation before any work happens.
            std::size_t count = 1;
            for (int axis = 0; axis < dim; ++axis) {
                if (count > config.cell_budget / static_cast<std::size_t>(bins)) {
                    throw DimensionTooLargeError(
                        std::to_string(bins) + "^" + std::to_string(dim) +
                        " cells exceed the budget of " + std::to_string(config.cell_budget));
                }
                count *= static_cast<std::size_t>(bins);
            }
            for (int sample = 0; sample < config.samples_per_cell; ++sample) {
                cells.push_back({dim, bins, sample});
            }
        }
    }

    std::vector<BallExperimentRow> rows(cells.size());
    parallel_for(cells.size(), config.threads, [&](std::size_t i) {
        const Cell& cell = cells[i];
        const std::uint64_t sub_seed =
            derive_seed(config.seed, static_cast<std::uint64_t>(cell.dim),
                        static_cast<std::uint64_t>(cell.bins),
                        static_cast<std::uint64_t>(cell.sample));
        const PointCloud cloud = sample_ball({cell.dim, config.points, sub_seed});
        const ShapeMetrics m = analyze(cloud, {cell.bins, {}}, config.cell_budget);
        rows[i] = {cell.dim, cell.bins, cell.sample, m.sp, m.sphericity};
    });
    return rows;
}

}  // namespace hypershape
