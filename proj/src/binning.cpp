#include "hypershape/binning.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace hypershape {

PointCloud::PointCloud(std::size_t rows, std::size_t cols, std::vector<double> values,
                       std::vector<std::string> column_names)
    : rows_(rows), cols_(cols), values_(std::move(values)), column_names_(std::move(column_names)) {
    if (rows_ < 1) throw EmptyInputError("point cloud needs at least one row");
    if (cols_ < 2) {
        throw DimensionTooLargeError("point cloud needs at least 2 columns, got " +
                                     std::to_string(cols_));
    }
    if (values_.size() != rows_ * cols_) {
        throw EmptyInputError("point cloud value count does not match rows*cols");
    }
    if (!column_names_.empty() && column_names_.size() != cols_) {
        throw EmptyInputError("column name count does not match cols");
    }
    for (double v : values_) {
        if (!std::isfinite(v)) throw EmptyInputError("point cloud entries must be finite");
    }
}

PointCloud PointCloud::select_rows(const std::vector<std::size_t>& row_indices) const {
    std::vector<double> picked;
    picked.reserve(row_indices.size() * cols_);
    for (std::size_t row : row_indices) {
        const double* begin = values_.data() + row * cols_;
        picked.insert(picked.end(), begin, begin + cols_);
    }
    return PointCloud(row_indices.size(), cols_, std::move(picked), column_names_);
}

namespace {

// Bin edges as the reference histogram routine builds them: k+1 values
// lo + i*(hi-lo)/k with the last edge pinned to hi exactly.
std::vector<double> bin_edges(double lo, double hi, int bins) {
    std::vector<double> edges(static_cast<std::size_t>(bins) + 1);
    const double width = hi - lo;
    for (int i = 0; i <= bins; ++i) {
        edges[static_cast<std::size_t>(i)] = lo + width * static_cast<double>(i) / bins;
    }
    edges.front() = lo;
    edges.back() = hi;
    return edges;
}

// Index of the left-closed bin containing x, or -1 when x falls outside
// [lo, hi]. A point exactly at hi belongs to the last bin.
int bin_of(const std::vector<double>& edges, double x) {
    const int bins = static_cast<int>(edges.size()) - 1;
    if (x < edges.front() || x > edges.back()) return -1;
    if (x == edges.back()) return bins - 1;
    const auto it = std::upper_bound(edges.begin(), edges.end(), x);
    return static_cast<int>(it - edges.begin()) - 1;
}

}  // namespace

GridImage bin_points(const PointCloud& points, const BinningSpec& spec,
                     std::size_t cell_budget) {
    const std::size_t n = points.cols();
    const int k = spec.bins;
    if (k < 2) {
        throw DegenerateAxisError("bin count must be at least 2, got " + std::to_string(k));
    }
    if (!spec.ranges.empty() && spec.ranges.size() != n) {
        throw DegenerateAxisError("range count does not match dimension count");
    }

    std::size_t cell_count = 1;
    for (std::size_t axis = 0; axis < n; ++axis) {
        if (cell_count > cell_budget / static_cast<std::size_t>(k)) {
            throw DimensionTooLargeError(
                std::to_string(k) + "^" + std::to_string(n) + " cells exceed the budget of " +
                std::to_string(cell_budget) + " (set HYPERSHAPE_CELL_BUDGET to raise it)");
        }
        cell_count *= static_cast<std::size_t>(k);
    }

    std::vector<std::vector<double>> edges(n);
    for (std::size_t axis = 0; axis < n; ++axis) {
        double lo, hi;
        if (spec.ranges.empty()) {
            lo = std::numeric_limits<double>::infinity();
            hi = -std::numeric_limits<double>::infinity();
            for (std::size_t row = 0; row < points.rows(); ++row) {
                lo = std::min(lo, points.at(row, axis));
                hi = std::max(hi, points.at(row, axis));
            }
        } else {
            lo = spec.ranges[axis].lo;
            hi = spec.ranges[axis].hi;
        }
        if (!(lo < hi)) {
            throw DegenerateAxisError("axis " + std::to_string(axis) +
                                      " has zero-width range [" + std::to_string(lo) + ", " +
                                      std::to_string(hi) + "]");
        }
        edges[axis] = bin_edges(lo, hi, k);
    }

    GridImage image(std::vector<int>(n, k));
    std::vector<int> cell(n);
    for (std::size_t row = 0; row < points.rows(); ++row) {
        bool inside = true;
        for (std::size_t axis = 0; axis < n && inside; ++axis) {
            cell[axis] = bin_of(edges[axis], points.at(row, axis));
            inside = cell[axis] >= 0;
        }
        if (inside) image.set(cell, true);
    }
    return image;
}

}  // namespace hypershape
