#pragma once

#include "hypershape/binning.hpp"
#include "hypershape/grid.hpp"

namespace hypershape {

// Everything the pipeline measures on one image. sp may exceed 1 on coarse
// grids: the voxel volume overshoots while r is rounded up, and that
// discretization error is part of what the metrics study, so it is not
// clamped.
struct ShapeMetrics {
    int n = 0;
    long long volume = 0;
    int radius = 0;
    long long surface = 0;
    double sp = 0.0;
    double sphericity = 0.0;
    bool degenerate_radius = false;
    bool erosion_empty = false;
};

// Full metric set for an image; center and radius are computed once and
// shared by both metrics. Throws EmptyImageError on an all-zero image.
ShapeMetrics image_metrics(const GridImage& image);

struct SpResult {
    double sp = 0.0;
    int radius = 0;
    long long volume = 0;
    bool degenerate_radius = false;
};

// V / ball_volume(n, r) with r the rounded-up max center distance.
SpResult sp_from_image(const GridImage& image);

struct SphericityResult {
    double sphericity = 0.0;
    long long surface = 0;
    bool erosion_empty = false;
};

// n V / (r S) with S the one-iteration erosion difference.
SphericityResult sphericity_from_image(const GridImage& image);

// Points -> histogram image -> metrics.
ShapeMetrics analyze(const PointCloud& points, const BinningSpec& spec,
                     std::size_t cell_budget = kDefaultCellBudget);

}  // namespace hypershape
